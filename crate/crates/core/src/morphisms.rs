//! Maps between the algebras: plane forests into ordered forests, the
//! projection onto packed words, the embedding into endofunctions, the
//! projection onto unlabelled forests, and the Faà di Bruno element.

use std::collections::BTreeSet;

use crate::algebra::{FreeElement, GradedBialgebra, TensorElement};
use crate::error::{Error, Result};
use crate::forests::Nck;
use crate::functions::is_acyclic;
use crate::linalg;
use crate::scalar::Scalar;
use crate::structures::{
    Bounds, Endofunction, OrderedForest, PackedWord, PlaneForest, RootedForest,
};
use crate::Int;

/// The up-left labeling of a plane forest.
pub fn plane_to_ordered(p: &PlaneForest) -> OrderedForest {
    p.to_ordered()
}

pub fn plane_to_ordered_element<C: Scalar>(
    x: &FreeElement<PlaneForest, C>,
) -> FreeElement<OrderedForest, C> {
    x.map_keys(plane_to_ordered)
}

/// Linear extension of `B₊` on ordered forests.
pub fn b_plus_element<C: Scalar>(
    x: &FreeElement<OrderedForest, C>,
) -> FreeElement<OrderedForest, C> {
    x.map_keys(OrderedForest::b_plus)
}

/// Packed words `m` with `m_p < m_v` whenever `p` is the parent of `v`.
pub fn admissible_words(f: &OrderedForest) -> Vec<PackedWord> {
    let n = f.len();
    let mut out = Vec::new();
    let mut word = vec![0; n];
    fill_admissible(f, 0, &mut word, &mut out);
    out.sort();
    out
}

// letters are assigned in vertex order; parents may come later, so
// the parent constraint is checked once both letters are known
fn fill_admissible(f: &OrderedForest, k: usize, word: &mut Vec<usize>, out: &mut Vec<PackedWord>) {
    let n = f.len();
    if k == n {
        let w = PackedWord::packing(word);
        if w.letters() == word.as_slice() {
            out.push(w);
        }
        return;
    }
    let v = k + 1;
    for letter in 1..=n {
        word[k] = letter;
        let ok = f.parent(v).is_none_or(|p| p > v || word[p - 1] < letter)
            && f.children(v).iter().all(|&c| c > v || word[c - 1] > letter);
        if ok {
            fill_admissible(f, k + 1, word, out);
        }
    }
}

/// `π(S^F) = Σ M_m` over the admissible packed words of `F`.
pub fn pi_image<C: Scalar>(f: &OrderedForest) -> FreeElement<PackedWord, C> {
    FreeElement::from_keys(admissible_words(f))
}

pub fn pi_hopf<C: Scalar>(x: &FreeElement<OrderedForest, C>) -> FreeElement<PackedWord, C> {
    x.linear_map(pi_image)
}

/// The forest `F_w` whose projection has `w` as lexicographically least
/// packed word.
pub fn f_w_preimage(w: &PackedWord) -> OrderedForest {
    let a = w.letters();
    match a.len() {
        0 => return OrderedForest::empty(),
        1 => return OrderedForest::discrete(1),
        _ => {}
    }
    if a.windows(2).all(|p| p[0] <= p[1]) {
        let tail = PackedWord::packing(&a[1..]);
        if a[1] == 1 {
            OrderedForest::discrete(1).product(&f_w_preimage(&tail))
        } else {
            f_w_preimage(&tail).b_plus()
        }
    } else {
        // order[k] is the position holding the k-th smallest letter,
        // ties kept in place
        let mut order: Vec<usize> = (1..=a.len()).collect();
        order.sort_by_key(|&i| a[i - 1]);
        let sorted: Vec<usize> = order.iter().map(|&i| a[i - 1]).collect();
        let base = f_w_preimage(&PackedWord::packing(&sorted));
        base.relabel(&order).expect("sorting permutation")
    }
}

/// `f(v)` is the parent of `v`, roots are fixed.
pub fn forest_to_endo(f: &OrderedForest) -> Endofunction {
    let image = (1..=f.len()).map(|v| f.parent(v).unwrap_or(v)).collect();
    Endofunction::from_image_unchecked(image)
}

/// Inverse of [`forest_to_endo`] on acyclic endofunctions.
pub fn endo_to_forest(f: &Endofunction) -> Option<OrderedForest> {
    if !is_acyclic(f) {
        return None;
    }
    let parent = (1..=f.len())
        .map(|v| if f.apply(v) == v { 0 } else { f.apply(v) })
        .collect();
    Some(OrderedForest::from_parents_unchecked(parent))
}

pub fn forest_to_endo_element<C: Scalar>(
    x: &FreeElement<OrderedForest, C>,
) -> FreeElement<Endofunction, C> {
    x.map_keys(forest_to_endo)
}

/// Forgets the labeling.
pub fn ck_projection<C: Scalar>(x: &FreeElement<OrderedForest, C>) -> FreeElement<RootedForest, C> {
    x.map_keys(RootedForest::from_ordered)
}

/// Applies `f ⊗ g` to a tensor.
pub fn tensor_apply<K, K2, C, F>(x: &TensorElement<K, C>, mut f: F) -> TensorElement<K2, C>
where
    K: Ord + Clone,
    K2: Ord + Clone,
    C: Scalar,
    F: FnMut(&K) -> FreeElement<K2, C>,
{
    let mut out = FreeElement::zero();
    for ((a, b), c) in x.iter() {
        let fa = f(a);
        let fb = f(b);
        for (x, cx) in fa.iter() {
            for (y, cy) in fb.iter() {
                out.add_term((x.clone(), y.clone()), c.clone() * cx.clone() * cy.clone());
            }
        }
    }
    out
}

/// A plane-forest series truncated at a fixed degree, stored by
/// homogeneous component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    components: Vec<FreeElement<PlaneForest, Int>>,
}

impl Series {
    /// `U`, the sum of all plane forests, through degree `max_degree`.
    pub fn all_forests(max_degree: usize, bounds: &Bounds) -> Result<Series> {
        let components = (0..=max_degree)
            .map(|n| PlaneForest::enumerate_bounded(n, bounds).map(FreeElement::from_keys))
            .collect::<Result<_>>()?;
        Ok(Series { components })
    }

    pub fn one(max_degree: usize) -> Series {
        let mut components = vec![FreeElement::zero(); max_degree + 1];
        components[0] = FreeElement::from_key(PlaneForest::empty());
        Series { components }
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, n: usize) -> &FreeElement<PlaneForest, Int> {
        &self.components[n]
    }

    /// Truncated graded convolution.
    pub fn multiply(&self, other: &Series) -> Series {
        let d = self.max_degree().min(other.max_degree());
        let components = (0..=d)
            .map(|n| {
                let mut out = FreeElement::zero();
                for k in 0..=n {
                    for (a, ca) in self.components[k].iter() {
                        for (b, cb) in other.components[n - k].iter() {
                            out.add_term(a.product(b), ca * cb);
                        }
                    }
                }
                out
            })
            .collect();
        Series { components }
    }

    pub fn power(&self, k: usize) -> Series {
        let mut out = Series::one(self.max_degree());
        for _ in 0..k {
            out = out.multiply(self);
        }
        out
    }
}

/// `Z = U²` through degree `max_degree`.
pub fn faa_di_bruno_z(max_degree: usize, bounds: &Bounds) -> Result<Series> {
    let u = Series::all_forests(max_degree, bounds)?;
    Ok(u.multiply(&u))
}

/// Which tensor factor carries `Z_k` in the coproduct identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaaDiBrunoOrder {
    /// `Δ(Z_n) = Σ_k Z_k ⊗ (Z^{k+1})_{n-k}`.
    ZFirst,
    /// `Δ(Z_n) = Σ_k (Z^{k+1})_{n-k} ⊗ Z_k`.
    PowerFirst,
}

/// Right-hand side of the Faà di Bruno identity in degree `n`.
pub fn faa_di_bruno_rhs(
    z: &Series,
    n: usize,
    order: FaaDiBrunoOrder,
) -> Result<TensorElement<PlaneForest, Int>> {
    if n > z.max_degree() {
        return Err(Error::invalid(format!(
            "degree {n} beyond the truncation {}",
            z.max_degree()
        )));
    }
    let mut out = FreeElement::zero();
    for k in 0..=n {
        let power = z.power(k + 1);
        for (a, ca) in z.component(k).iter() {
            for (b, cb) in power.component(n - k).iter() {
                let key = match order {
                    FaaDiBrunoOrder::ZFirst => (a.clone(), b.clone()),
                    FaaDiBrunoOrder::PowerFirst => (b.clone(), a.clone()),
                };
                out.add_term(key, ca * cb);
            }
        }
    }
    Ok(out)
}

/// `Δ(Z_n)` in the plane-forest algebra.
pub fn faa_di_bruno_lhs(z: &Series, n: usize) -> TensorElement<PlaneForest, Int> {
    let mut out = FreeElement::zero();
    for (key, c) in z.component(n).iter() {
        out.add_scaled(&Nck::coproduct::<Int>(key), c);
    }
    out
}

/// Per-degree data for the projection of plane forests onto packed words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiRankRow {
    pub degree: usize,
    pub forests: usize,
    pub rank: usize,
    /// Number of distinct lexicographically least admissible words.
    pub distinct_minima: usize,
}

/// Rank of `{π(P)}` over the plane forests `P` of each degree
/// `1..=max_degree`.
pub fn pi_restricted_rank(max_degree: usize, bounds: &Bounds) -> Result<Vec<PiRankRow>> {
    let mut rows = Vec::new();
    for n in 1..=max_degree {
        let forests = PlaneForest::enumerate_bounded(n, bounds)?;
        let words = PackedWord::enumerate_bounded(n, bounds)?;
        let images: Vec<Vec<PackedWord>> = forests
            .iter()
            .map(|p| admissible_words(&p.to_ordered()))
            .collect();
        let matrix: Vec<Vec<Int>> = images
            .iter()
            .map(|img| {
                let set: BTreeSet<&PackedWord> = img.iter().collect();
                words
                    .iter()
                    .map(|w| Int::from(u8::from(set.contains(w))))
                    .collect()
            })
            .collect();
        let minima: BTreeSet<&PackedWord> = images.iter().filter_map(|img| img.first()).collect();
        rows.push(PiRankRow {
            degree: n,
            forests: forests.len(),
            rank: linalg::rank(&matrix),
            distinct_minima: minima.len(),
        });
    }
    Ok(rows)
}

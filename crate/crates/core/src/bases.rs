//! The R bases: Möbius inversion of the S bases along the edge order on
//! ordered forests and the fixed-point order on endofunctions.
//!
//! Elements in either basis use the same key types as the S basis; which
//! basis a [`FreeElement`] is written in is up to the caller, see [`Basis`].

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraTag, FreeElement};
use crate::error::{Error, Result};
use crate::functions::is_acyclic;
use crate::scalar::Scalar;
use crate::structures::{Endofunction, OrderedForest, RootedForest};

/// Name of the basis an element is written in. `M` is the natural basis of
/// the packed-word algebra; every other algebra starts from `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    S,
    R,
    M,
}

impl Basis {
    pub fn natural(tag: AlgebraTag) -> Basis {
        match tag {
            AlgebraTag::Wqsym => Basis::M,
            _ => Basis::S,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::S => "S",
            Basis::R => "R",
            Basis::M => "M",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "S" | "s" => Ok(Basis::S),
            "R" | "r" => Ok(Basis::R),
            "M" | "m" => Ok(Basis::M),
            other => Err(Error::invalid(format!(
                "unknown basis `{other}`, expected S, R or M"
            ))),
        }
    }
}

fn sign<C: Scalar>(exponent: usize) -> C {
    if exponent % 2 == 0 {
        C::one()
    } else {
        -C::one()
    }
}

/// `g ≤ f` in the forest order: same size and `E(f) ⊆ E(g)`.
pub fn forest_le(g: &OrderedForest, f: &OrderedForest) -> bool {
    g.len() == f.len()
        && f.parents()
            .iter()
            .zip(g.parents())
            .all(|(&pf, &pg)| pf == 0 || pf == pg)
}

/// Every forest below `f`: each root of `f` either stays a root or takes a
/// parent, subject to acyclicity.
pub fn forest_down_set(f: &OrderedForest) -> Vec<OrderedForest> {
    let roots = f.roots();
    let n = f.len();
    let mut out = Vec::new();
    let mut parent = f.parents().to_vec();
    extend_roots(&roots, 0, &mut parent, n, &mut |p| {
        if let Ok(g) = OrderedForest::new(p.to_vec()) {
            out.push(g);
        }
    });
    out.sort();
    out
}

fn extend_roots(
    roots: &[usize],
    k: usize,
    parent: &mut Vec<usize>,
    n: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    if k == roots.len() {
        emit(parent);
        return;
    }
    let r = roots[k];
    for p in 0..=n {
        if p != r {
            parent[r - 1] = p;
            extend_roots(roots, k + 1, parent, n, emit);
        }
    }
    parent[r - 1] = 0;
}

/// `R_F = Σ_{G ≤ F} (-1)^{|E(G)| - |E(F)|} S^G`, in the S basis.
pub fn r_from_s_forest<C: Scalar>(f: &OrderedForest) -> FreeElement<OrderedForest, C> {
    let e = f.edge_count();
    forest_down_set(f)
        .into_iter()
        .map(|g| {
            let c = sign::<C>(g.edge_count() - e);
            (g, c)
        })
        .collect()
}

/// `S^F = Σ_{G ≤ F} R_G`, in the R basis.
pub fn s_from_r_forest<C: Scalar>(f: &OrderedForest) -> FreeElement<OrderedForest, C> {
    FreeElement::from_keys(forest_down_set(f))
}

/// Rewrites an element given in the R basis into the S basis.
pub fn forest_r_to_s<C: Scalar>(
    x: &FreeElement<OrderedForest, C>,
) -> FreeElement<OrderedForest, C> {
    x.linear_map(r_from_s_forest)
}

/// Rewrites an element given in the S basis into the R basis.
pub fn forest_s_to_r<C: Scalar>(
    x: &FreeElement<OrderedForest, C>,
) -> FreeElement<OrderedForest, C> {
    x.linear_map(s_from_r_forest)
}

/// Forests on `|a| + |b|` vertices restricting to `a` on the first
/// interval and to `b` on the second.
pub fn interval_extensions(a: &OrderedForest, b: &OrderedForest) -> Vec<OrderedForest> {
    let n1 = a.len();
    let base = a.product(b);
    let n = base.len();
    let roots = base.roots();
    let mut out = Vec::new();
    let mut parent = base.parents().to_vec();
    // a root may only hang from the other interval
    fn go(
        roots: &[usize],
        k: usize,
        parent: &mut Vec<usize>,
        n1: usize,
        n: usize,
        out: &mut Vec<OrderedForest>,
    ) {
        if k == roots.len() {
            if let Ok(g) = OrderedForest::new(parent.clone()) {
                out.push(g);
            }
            return;
        }
        let r = roots[k];
        let other = if r <= n1 { n1 + 1..=n } else { 1..=n1 };
        go(roots, k + 1, parent, n1, n, out);
        for p in other {
            parent[r - 1] = p;
            go(roots, k + 1, parent, n1, n, out);
        }
        parent[r - 1] = 0;
    }
    go(&roots, 0, &mut parent, n1, n, &mut out);
    out.sort();
    out
}

/// `R_a R_b = Σ R_F` over the interval extensions of `(a, b)`, in the R
/// basis.
pub fn r_product_forest<C: Scalar>(
    a: &OrderedForest,
    b: &OrderedForest,
) -> FreeElement<OrderedForest, C> {
    FreeElement::from_keys(interval_extensions(a, b))
}

/// Product of two elements written in the R basis.
pub fn r_multiply_forest<C: Scalar>(
    x: &FreeElement<OrderedForest, C>,
    y: &FreeElement<OrderedForest, C>,
) -> FreeElement<OrderedForest, C> {
    let mut out = FreeElement::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&r_product_forest(a, b), &(ca.clone() * cb.clone()));
        }
    }
    out
}

/// The image of `R_F` in the Connes-Kreimer algebra, computed from the
/// labeling `f.to_ordered()`.
pub fn r_commutative<C: Scalar>(f: &RootedForest) -> FreeElement<RootedForest, C> {
    r_commutative_from(&f.to_ordered())
}

/// The image of `R_F` in the Connes-Kreimer algebra for a given labeling.
pub fn r_commutative_from<C: Scalar>(f: &OrderedForest) -> FreeElement<RootedForest, C> {
    r_from_s_forest::<C>(f).map_keys(RootedForest::from_ordered)
}

/// `S^F = Σ_{G ≤ F} R^G` in the Connes-Kreimer algebra.
pub fn ck_s_from_r<C: Scalar>(f: &RootedForest) -> FreeElement<RootedForest, C> {
    s_from_r_forest::<C>(&f.to_ordered()).map_keys(RootedForest::from_ordered)
}

pub fn ck_r_to_s<C: Scalar>(x: &FreeElement<RootedForest, C>) -> FreeElement<RootedForest, C> {
    x.linear_map(r_commutative)
}

pub fn ck_s_to_r<C: Scalar>(x: &FreeElement<RootedForest, C>) -> FreeElement<RootedForest, C> {
    x.linear_map(ck_s_from_r)
}

/// `g ≤ f` in the fixed-point order: `g` agrees with `f` off the fixed
/// points of `f`.
pub fn endo_le(g: &Endofunction, f: &Endofunction) -> bool {
    g.len() == f.len() && (1..=f.len()).all(|k| f.apply(k) == k || f.apply(k) == g.apply(k))
}

/// Every endofunction below `f`: the fixed points of `f` are sent
/// anywhere.
pub fn endo_down_set(f: &Endofunction) -> Vec<Endofunction> {
    let n = f.len();
    let fixed: Vec<usize> = (1..=n).filter(|&k| f.apply(k) == k).collect();
    let mut out = Vec::new();
    let mut image = f.image().to_vec();
    let mut counter = vec![1; fixed.len()];
    loop {
        for (&k, &v) in fixed.iter().zip(&counter) {
            image[k - 1] = v;
        }
        out.push(Endofunction::from_image_unchecked(image.clone()));
        let Some(pos) = counter.iter().rposition(|&v| v < n) else {
            break;
        };
        counter[pos] += 1;
        for v in &mut counter[pos + 1..] {
            *v = 1;
        }
    }
    out.sort();
    out
}

/// `R_f = Σ_{g ≤ f} (-1)^{Fix(f) - Fix(g)} S^g`, in the S basis.
pub fn r_from_s_endo<C: Scalar>(f: &Endofunction) -> FreeElement<Endofunction, C> {
    let fix = f.fixed_points();
    endo_down_set(f)
        .into_iter()
        .map(|g| {
            let c = sign::<C>(fix - g.fixed_points());
            (g, c)
        })
        .collect()
}

/// `S^f = Σ_{g ≤ f} R_g`, in the R basis.
pub fn s_from_r_endo<C: Scalar>(f: &Endofunction) -> FreeElement<Endofunction, C> {
    FreeElement::from_keys(endo_down_set(f))
}

pub fn endo_r_to_s<C: Scalar>(x: &FreeElement<Endofunction, C>) -> FreeElement<Endofunction, C> {
    x.linear_map(r_from_s_endo)
}

pub fn endo_s_to_r<C: Scalar>(x: &FreeElement<Endofunction, C>) -> FreeElement<Endofunction, C> {
    x.linear_map(s_from_r_endo)
}

/// Endofunctions of `[|a| + |b|]` whose standardized restrictions to the
/// two intervals are `a` and `b`.
pub fn endo_interval_extensions(a: &Endofunction, b: &Endofunction) -> Vec<Endofunction> {
    let n1 = a.len();
    let base = a.shifted_concat(b);
    let n = base.len();
    // a fixed point stays put or escapes to the other interval
    let choices: Vec<Vec<usize>> = (1..=n)
        .map(|k| {
            if base.apply(k) != k {
                vec![base.apply(k)]
            } else if k <= n1 {
                std::iter::once(k).chain(n1 + 1..=n).collect()
            } else {
                std::iter::once(k).chain(1..=n1).collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let image = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        out.push(Endofunction::from_image_unchecked(image));
        let Some(pos) = (0..n).rev().find(|&k| idx[k] + 1 < choices[k].len()) else {
            break;
        };
        idx[pos] += 1;
        for i in &mut idx[pos + 1..] {
            *i = 0;
        }
    }
    out.sort();
    out
}

/// `R_a R_b = Σ R_f` over the interval extensions of `(a, b)`, in the R
/// basis.
pub fn r_product_endo<C: Scalar>(
    a: &Endofunction,
    b: &Endofunction,
) -> FreeElement<Endofunction, C> {
    FreeElement::from_keys(endo_interval_extensions(a, b))
}

pub fn r_multiply_endo<C: Scalar>(
    x: &FreeElement<Endofunction, C>,
    y: &FreeElement<Endofunction, C>,
) -> FreeElement<Endofunction, C> {
    let mut out = FreeElement::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&r_product_endo(a, b), &(ca.clone() * cb.clone()));
        }
    }
    out
}

/// `R_f` lies in the subspace spanned by the non-acyclic R basis vectors.
pub fn in_iprime(f: &Endofunction) -> bool {
    !is_acyclic(f)
}

/// Class modulo the span of the non-acyclic `R_f`, for an element written in
/// the R basis.
pub fn quotient_r<C: Scalar>(x: &FreeElement<Endofunction, C>) -> FreeElement<Endofunction, C> {
    x.filter(is_acyclic)
}

/// Product of classes modulo the non-acyclic `R_f`.
pub fn quotient_multiply<C: Scalar>(
    x: &FreeElement<Endofunction, C>,
    y: &FreeElement<Endofunction, C>,
) -> FreeElement<Endofunction, C> {
    quotient_r(&r_multiply_endo(&quotient_r(x), &quotient_r(y)))
}

/// Class of `S^f` modulo the span of the non-acyclic `S^f`, written in the S
/// basis.
pub fn quotient_s<C: Scalar>(x: &FreeElement<Endofunction, C>) -> FreeElement<Endofunction, C> {
    x.filter(is_acyclic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn o(s: &str) -> OrderedForest {
        s.parse().unwrap()
    }

    fn e(s: &str) -> Endofunction {
        s.parse().unwrap()
    }

    #[test]
    fn down_set_matches_filter() {
        for n in 0..=4 {
            let all = OrderedForest::enumerate(n).unwrap();
            for f in &all {
                let filtered: Vec<_> = all.iter().filter(|g| forest_le(g, f)).cloned().collect();
                assert_eq!(forest_down_set(f), filtered, "{f}");
            }
        }
    }

    #[test]
    fn r_of_chain_and_point() {
        let f = o("0 1 0");
        let r = r_from_s_forest::<Int>(&f);
        let expected = FreeElement::from_terms([
            (o("0 1 0"), Int::from(1)),
            (o("0 1 1"), Int::from(-1)),
            (o("0 1 2"), Int::from(-1)),
            (o("3 1 0"), Int::from(-1)),
        ]);
        assert_eq!(r, expected);
        assert_eq!(
            r_from_s_forest::<Int>(&o("0")),
            FreeElement::from_key(o("0"))
        );
    }

    #[test]
    fn mobius_roundtrip() {
        for n in 0..=3 {
            for f in OrderedForest::enumerate(n).unwrap() {
                let x = FreeElement::<_, Int>::from_key(f.clone());
                assert_eq!(forest_r_to_s(&forest_s_to_r(&x)), x);
                assert_eq!(forest_s_to_r(&forest_r_to_s(&x)), x);
            }
            for f in Endofunction::enumerate(n).unwrap() {
                let x = FreeElement::<_, Int>::from_key(f.clone());
                assert_eq!(endo_r_to_s(&endo_s_to_r(&x)), x);
                assert_eq!(endo_s_to_r(&endo_r_to_s(&x)), x);
            }
        }
    }

    #[test]
    fn interval_extensions_match_filter() {
        let all: Vec<Vec<OrderedForest>> = (0..=4)
            .map(|n| OrderedForest::enumerate(n).unwrap())
            .collect();
        for p in 0..=2 {
            for q in 0..=4 - p {
                for a in &all[p] {
                    for b in &all[q] {
                        let lo: Vec<usize> = (1..=p).collect();
                        let hi: Vec<usize> = (p + 1..=p + q).collect();
                        let filtered: Vec<_> = all[p + q]
                            .iter()
                            .filter(|f| {
                                f.restrict(&lo).unwrap() == *a && f.restrict(&hi).unwrap() == *b
                            })
                            .cloned()
                            .collect();
                        assert_eq!(interval_extensions(a, b), filtered);
                    }
                }
            }
        }
    }

    #[test]
    fn endo_extensions_match_filter() {
        let all: Vec<Vec<Endofunction>> = (0..=4)
            .map(|n| Endofunction::enumerate(n).unwrap())
            .collect();
        for p in 0..=2 {
            for q in 0..=4 - p {
                for a in &all[p] {
                    for b in &all[q] {
                        let lo: Vec<usize> = (1..=p).collect();
                        let hi: Vec<usize> = (p + 1..=p + q).collect();
                        let filtered: Vec<_> = all[p + q]
                            .iter()
                            .filter(|f| {
                                f.std_restrict(&lo).unwrap() == *a
                                    && f.std_restrict(&hi).unwrap() == *b
                            })
                            .cloned()
                            .collect();
                        assert_eq!(endo_interval_extensions(a, b), filtered);
                    }
                }
            }
        }
    }

    #[test]
    fn r_products_reexpand_to_s_products() {
        for n in 0..=4 {
            for p in 0..=n {
                for a in OrderedForest::enumerate(p).unwrap() {
                    for b in OrderedForest::enumerate(n - p).unwrap() {
                        let lhs = forest_r_to_s(&r_product_forest::<Int>(&a, &b));
                        let ra = r_from_s_forest::<Int>(&a);
                        let rb = r_from_s_forest::<Int>(&b);
                        let mut rhs = FreeElement::zero();
                        for (x, cx) in ra.iter() {
                            for (y, cy) in rb.iter() {
                                rhs.add_term(x.product(y), cx * cy);
                            }
                        }
                        assert_eq!(lhs, rhs, "{a} | {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn endo_r_products_reexpand() {
        for n in 0..=3 {
            for p in 0..=n {
                for a in Endofunction::enumerate(p).unwrap() {
                    for b in Endofunction::enumerate(n - p).unwrap() {
                        let lhs = endo_r_to_s(&r_product_endo::<Int>(&a, &b));
                        let ra = r_from_s_endo::<Int>(&a);
                        let rb = r_from_s_endo::<Int>(&b);
                        let mut rhs = FreeElement::zero();
                        for (x, cx) in ra.iter() {
                            for (y, cy) in rb.iter() {
                                rhs.add_term(x.shifted_concat(y), cx * cy);
                            }
                        }
                        assert_eq!(lhs, rhs, "{a} | {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn endo_order_in_degree_two() {
        let (f21, f11, f22, f12) = (e("2 1"), e("1 1"), e("2 2"), e("1 2"));
        assert!(endo_le(&f21, &f11) && endo_le(&f21, &f22));
        assert!(endo_le(&f11, &f12) && endo_le(&f22, &f12));
        assert!(!endo_le(&f11, &f22) && !endo_le(&f12, &f21));
        assert_eq!(
            r_from_s_endo::<Int>(&f21),
            FreeElement::from_key(f21.clone())
        );
        let r12 = r_from_s_endo::<Int>(&f12);
        let expected = FreeElement::from_terms([
            (f12, Int::from(1)),
            (f11, Int::from(-1)),
            (f22, Int::from(-1)),
            (f21, Int::from(1)),
        ]);
        assert_eq!(r12, expected);
    }

    #[test]
    fn product_12_times_1() {
        let terms = endo_interval_extensions(&e("1 2"), &e("1"));
        assert_eq!(terms.len(), 12);
        for f in &terms {
            assert!(matches!(f.apply(1), 1 | 3) && matches!(f.apply(2), 2 | 3));
        }
    }

    #[test]
    fn commutative_r_is_well_defined() {
        for n in 0..=4 {
            let mut seen = std::collections::BTreeMap::new();
            for f in OrderedForest::enumerate(n).unwrap() {
                let img = r_commutative_from::<Int>(&f);
                let shape = RootedForest::from_ordered(&f);
                let prev = seen.entry(shape).or_insert_with(|| img.clone());
                assert_eq!(*prev, img, "{f}");
            }
        }
    }

    #[test]
    fn ck_roundtrip() {
        for n in 0..=4 {
            for f in RootedForest::enumerate(n).unwrap() {
                let x = FreeElement::<_, Int>::from_key(f);
                assert_eq!(ck_r_to_s(&ck_s_to_r(&x)), x);
            }
        }
    }

    #[test]
    fn basis_names() {
        assert_eq!("R".parse::<Basis>().unwrap(), Basis::R);
        assert!("T".parse::<Basis>().is_err());
    }
}

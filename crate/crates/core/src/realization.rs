//! Polynomial realizations over alphabets of bi-indexed letters `a_{ij}`
//! carrying a relation `≺`.
//!
//! A basis element is realized as the sum of its compatible words. Each
//! object is reduced to a [`Shape`]: for every position the position whose
//! letter must precede it. A word is compatible when `w_p ≺ w_v` for every
//! such pair, which in all versions forces `i(w_v) = j(w_p)`.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::{FreeElement, TensorElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::structures::{pack, Endofunction, OrderedForest, PackedWord, Permutation};

/// Alphabet and relation variants.
///
/// * `V1`: `0 ≤ i < j`, `a_{ij} ≺ a_{kl}` iff `j = k`; roots are free.
/// * `V2`: `1 ≤ i ≤ j`, `a_{ij} ≺ a_{jk}` for `j < k`; roots carry loops.
/// * `Func`: `i ≠ j`, `a_{ij} ≺ a_{kl}` iff `j = k`; for endofunctions.
/// * `Sg`: all `i, j ≥ 1`, `a_{ij} ≺ a_{kl}` iff `j = k`; for permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Version {
    V1,
    V2,
    Func,
    Sg,
}

impl Version {
    pub fn name(self) -> &'static str {
        match self {
            Version::V1 => "V1",
            Version::V2 => "V2",
            Version::Func => "FUNC",
            Version::Sg => "SG",
        }
    }

    /// Letters of one side with subscripts at most `n`.
    pub fn letters(self, side: Side, n: i32) -> Vec<Letter> {
        let mut out = Vec::new();
        let lo = if self == Version::V1 { 0 } else { 1 };
        for i in lo..=n {
            for j in 1..=n {
                let ok = match self {
                    Version::V1 => i < j,
                    Version::V2 => i <= j,
                    Version::Func => i != j,
                    Version::Sg => true,
                };
                if ok {
                    out.push(Letter { side, i, j });
                }
            }
        }
        out
    }

    /// The relation on the doubled alphabet `A ⊕ B`.
    pub fn precedes(self, x: &Letter, y: &Letter) -> bool {
        match (x.side, y.side) {
            (Side::B, Side::A) => false,
            (Side::A, Side::B) => match self {
                Version::V2 => y.is_loop(),
                _ => true,
            },
            _ => match self {
                Version::V2 => x.j == y.i && y.i < y.j,
                _ => x.j == y.i,
            },
        }
    }
}

impl Display for Version {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Version {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Version::V1, Version::V2, Version::Func, Version::Sg]
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::invalid(format!("unknown realization version {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

/// The letter `a_{ij}` of side `A`, or `b_{ij}` of side `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub side: Side,
    pub i: i32,
    pub j: i32,
}

impl Letter {
    pub fn a(i: i32, j: i32) -> Self {
        Letter {
            side: Side::A,
            i,
            j,
        }
    }

    pub fn b(i: i32, j: i32) -> Self {
        Letter {
            side: Side::B,
            i,
            j,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.i == self.j
    }
}

impl Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.side {
            Side::A => 'a',
            Side::B => 'b',
        };
        write!(f, "{name}_{{{},{}}}", self.i, self.j)
    }
}

pub type Word = Vec<Letter>;

/// Noncommutative polynomial: words to coefficients.
pub type NCPolynomial<C> = FreeElement<Word, C>;

/// Polynomial in `A` and `B` with `A` commuting with `B`, indexed by the
/// pair of subwords.
pub type TensorPolynomial<C> = FreeElement<(Word, Word), C>;

/// Commutative polynomial: sorted letter multisets to coefficients.
pub type CommPolynomial<C> = FreeElement<Vec<Letter>, C>;

/// Compatibility constraints of a word of length `pred.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    /// `pred[v] = Some(p)` requires `w_p ≺ w_v` (0-based; `p = v` allowed).
    pub pred: Vec<Option<usize>>,
    /// Positions without a predecessor must carry loop letters.
    pub loop_roots: bool,
}

/// Objects that have a polynomial realization.
pub trait Realizable: Clone + Ord + Display {
    fn size(&self) -> usize;

    fn shape(&self, version: Version) -> Result<Shape>;

    /// The object induced on a sorted set of positions (1-based), relabeled
    /// increasingly.
    fn restrict_to(&self, positions: &[usize]) -> Self;
}

fn version_error(what: &str, version: Version) -> Error {
    Error::invalid(format!("{what} cannot be realized in version {version}"))
}

impl Realizable for OrderedForest {
    fn size(&self) -> usize {
        self.len()
    }

    fn shape(&self, version: Version) -> Result<Shape> {
        if !matches!(version, Version::V1 | Version::V2) {
            return Err(version_error("an ordered forest", version));
        }
        Ok(Shape {
            pred: (1..=self.len())
                .map(|v| self.parent(v).map(|p| p - 1))
                .collect(),
            loop_roots: version == Version::V2,
        })
    }

    fn restrict_to(&self, positions: &[usize]) -> Self {
        self.restrict_sorted(positions)
    }
}

impl Realizable for Endofunction {
    fn size(&self) -> usize {
        self.len()
    }

    // i = f(j), i ≠ j  ⇒  w_i ≺ w_j
    fn shape(&self, version: Version) -> Result<Shape> {
        if version != Version::Func {
            return Err(version_error("an endofunction", version));
        }
        Ok(Shape {
            pred: (1..=self.len())
                .map(|j| {
                    let i = self.apply(j);
                    (i != j).then(|| i - 1)
                })
                .collect(),
            loop_roots: false,
        })
    }

    fn restrict_to(&self, positions: &[usize]) -> Self {
        self.std_restrict_sorted(positions)
    }
}

impl Realizable for Permutation {
    fn size(&self) -> usize {
        self.len()
    }

    // letter k is a_{i_{σ⁻¹(k)} i_k}, so w_{σ⁻¹(k)} ≺ w_k; fixed points
    // give loops
    fn shape(&self, version: Version) -> Result<Shape> {
        match version {
            Version::Sg => {
                let inv = self.inverse();
                Ok(Shape {
                    pred: (1..=self.len()).map(|k| Some(inv.apply(k) - 1)).collect(),
                    loop_roots: false,
                })
            }
            Version::Func => self.as_endofunction().shape(version),
            _ => Err(version_error("a permutation", version)),
        }
    }

    fn restrict_to(&self, positions: &[usize]) -> Self {
        Permutation::try_from(self.as_endofunction().std_restrict_sorted(positions))
            .expect("restriction of a permutation to a union of cycles")
    }
}

/// Letters available to the enumerator, with the relation tabulated.
struct Table {
    letters: Vec<Letter>,
    succ: Vec<Vec<usize>>,
    self_ok: Vec<bool>,
    root_ok: Vec<bool>,
    prec: Vec<Vec<bool>>,
}

impl Table {
    fn new(version: Version, n: i32, doubled: bool, loop_roots: bool) -> Self {
        let mut letters = version.letters(Side::A, n);
        if doubled {
            letters.extend(version.letters(Side::B, n));
        }
        let prec: Vec<Vec<bool>> = letters
            .iter()
            .map(|x| letters.iter().map(|y| version.precedes(x, y)).collect())
            .collect();
        let succ = prec
            .iter()
            .map(|row| (0..letters.len()).filter(|&y| row[y]).collect())
            .collect();
        let self_ok = (0..letters.len()).map(|x| prec[x][x]).collect();
        let root_ok = letters.iter().map(|l| !loop_roots || l.is_loop()).collect();
        Table {
            letters,
            succ,
            self_ok,
            root_ok,
            prec,
        }
    }
}

fn enumerate_words(shape: &Shape, version: Version, n: i32, doubled: bool) -> Vec<Word> {
    let table = Table::new(version, n, doubled, shape.loop_roots);
    let len = shape.pred.len();
    // earlier positions whose predecessor is v
    let mut later_pred: Vec<Vec<usize>> = vec![Vec::new(); len];
    for (v, p) in shape.pred.iter().enumerate() {
        if let Some(p) = *p {
            if p > v {
                later_pred[p].push(v);
            }
        }
    }
    let all: Vec<usize> = (0..table.letters.len()).collect();
    let mut out = Vec::new();
    let mut word = vec![0usize; len];

    fn rec(
        v: usize,
        shape: &Shape,
        table: &Table,
        all: &[usize],
        later_pred: &[Vec<usize>],
        word: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        if v == word.len() {
            out.push(word.iter().map(|&x| table.letters[x]).collect());
            return;
        }
        let candidates: &[usize] = match shape.pred[v] {
            Some(p) if p < v => &table.succ[word[p]],
            _ => all,
        };
        for &x in candidates {
            let ok = match shape.pred[v] {
                None => table.root_ok[x],
                Some(p) if p == v => table.self_ok[x],
                _ => true,
            } && later_pred[v].iter().all(|&c| table.prec[x][word[c]]);
            if ok {
                word[v] = x;
                rec(v + 1, shape, table, all, later_pred, word, out);
            }
        }
    }

    rec(0, shape, &table, &all, &later_pred, &mut word, &mut out);
    out
}

fn check_bound(n: i32) -> Result<()> {
    if n < 1 {
        Err(Error::invalid("the truncation bound N must be at least 1"))
    } else {
        Ok(())
    }
}

/// `S^x(A)` truncated to subscripts `≤ n`.
pub fn realize<X: Realizable, C: Scalar>(
    x: &X,
    version: Version,
    n: i32,
) -> Result<NCPolynomial<C>> {
    check_bound(n)?;
    let shape = x.shape(version)?;
    Ok(FreeElement::from_keys(enumerate_words(
        &shape, version, n, false,
    )))
}

pub fn realize_forest<C: Scalar>(
    f: &OrderedForest,
    version: Version,
    n: i32,
) -> Result<NCPolynomial<C>> {
    realize(f, version, n)
}

pub fn realize_permutation<C: Scalar>(s: &Permutation, n: i32) -> Result<NCPolynomial<C>> {
    realize(s, Version::Sg, n)
}

pub fn realize_endofunction<C: Scalar>(f: &Endofunction, n: i32) -> Result<NCPolynomial<C>> {
    realize(f, Version::Func, n)
}

/// `S^x(A ⊕ B)` with `A` and `B` commuting: each word is split into its
/// `A`-subword and `B`-subword.
pub fn oplus_double<X: Realizable, C: Scalar>(
    x: &X,
    version: Version,
    n: i32,
) -> Result<TensorPolynomial<C>> {
    check_bound(n)?;
    let shape = x.shape(version)?;
    Ok(FreeElement::from_keys(
        enumerate_words(&shape, version, n, true)
            .into_iter()
            .map(split_sides),
    ))
}

fn split_sides(w: Word) -> (Word, Word) {
    let (a, b): (Vec<Letter>, Vec<Letter>) = w.into_iter().partition(|l| l.side == Side::A);
    (a, b)
}

fn to_side(w: &Word, side: Side) -> Word {
    w.iter().map(|l| Letter { side, ..*l }).collect()
}

/// `P(A) Q(B)` as a tensor polynomial.
pub fn tensor_polynomial<C: Scalar>(
    p: &NCPolynomial<C>,
    q: &NCPolynomial<C>,
) -> TensorPolynomial<C> {
    let mut out = FreeElement::zero();
    for (u, cu) in p.iter() {
        for (v, cv) in q.iter() {
            out.add_term(
                (to_side(u, Side::A), to_side(v, Side::B)),
                cu.clone() * cv.clone(),
            );
        }
    }
    out
}

/// Expands a tensor of basis elements into `Σ c S^x(A) S^y(B)`.
pub fn realize_tensor<X: Realizable, C: Scalar>(
    t: &TensorElement<X, C>,
    version: Version,
    n: i32,
) -> Result<TensorPolynomial<C>> {
    let mut out = FreeElement::zero();
    for ((x, y), c) in t.iter() {
        let p = tensor_polynomial::<C>(&realize(x, version, n)?, &realize(y, version, n)?);
        out.add_scaled(&p, c);
    }
    Ok(out)
}

/// Groups the words of `S^x(A ⊕ B)` by the set of positions carrying
/// `B`-letters, checks that each group factors as `S^{x|A}(A) S^{x|B}(B)`,
/// and returns the resulting tensor of basis elements.
pub fn oplus_grouped<X: Realizable + crate::algebra::BasisKey>(
    x: &X,
    version: Version,
    n: i32,
) -> Result<TensorElement<X, BigInt>> {
    check_bound(n)?;
    let shape = x.shape(version)?;
    let mut groups: BTreeMap<Vec<usize>, TensorPolynomial<BigInt>> = BTreeMap::new();
    for w in enumerate_words(&shape, version, n, true) {
        let mask: Vec<usize> = (0..w.len())
            .filter(|&k| w[k].side == Side::B)
            .map(|k| k + 1)
            .collect();
        groups
            .entry(mask)
            .or_default()
            .add_term(split_sides(w), BigInt::from(1));
    }
    let mut out = FreeElement::zero();
    for (mask, group) in groups {
        let rest: Vec<usize> = (1..=x.size()).filter(|k| !mask.contains(k)).collect();
        let left = x.restrict_to(&rest);
        let right = x.restrict_to(&mask);
        let expected =
            tensor_polynomial(&realize(&left, version, n)?, &realize(&right, version, n)?);
        if group != expected {
            return Err(Error::invalid(format!(
                "the words with B-positions {mask:?} do not factor as S^[{left}](A) S^[{right}](B)"
            )));
        }
        out.add_term((left, right), BigInt::from(1));
    }
    Ok(out)
}

/// Concatenation product of noncommutative polynomials.
pub fn nc_multiply<C: Scalar>(p: &NCPolynomial<C>, q: &NCPolynomial<C>) -> NCPolynomial<C> {
    let mut out = FreeElement::zero();
    for (u, cu) in p.iter() {
        for (v, cv) in q.iter() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            out.add_term(w, cu.clone() * cv.clone());
        }
    }
    out
}

/// Lets all letters commute.
pub fn commutative_image<C: Scalar>(p: &NCPolynomial<C>) -> CommPolynomial<C> {
    p.map_keys(|w| {
        let mut m = w.clone();
        m.sort();
        m
    })
}

/// Image under `a_{ij} ↦ a_j` as a polynomial over `a_1 < a_2 < …`.
pub fn j_image<C: Scalar>(p: &NCPolynomial<C>) -> FreeElement<Vec<i32>, C> {
    p.map_keys(|w| w.iter().map(|l| l.j).collect())
}

/// `Σ c_u M_u(a_1, …, a_n)`: every word over `[n]` whose packing is `u`.
pub fn realize_wqsym<C: Scalar>(
    x: &FreeElement<PackedWord, C>,
    n: i32,
) -> FreeElement<Vec<i32>, C> {
    let mut out = FreeElement::zero();
    for (u, c) in x.iter() {
        for_each_word(u.len(), n, |w| {
            let as_usize: Vec<usize> = w.iter().map(|&x| x as usize).collect();
            if pack(&as_usize) == u.letters() {
                out.add_term(w.to_vec(), c.clone());
            }
        });
    }
    out
}

/// Calls `f` on every word of length `len` over `1..=n`.
pub(crate) fn for_each_word<F: FnMut(&[i32])>(len: usize, n: i32, mut f: F) {
    let mut w = vec![1i32; len];
    loop {
        f(&w);
        let mut k = 0;
        while k < len && w[k] == n {
            w[k] = 1;
            k += 1;
        }
        if k == len {
            return;
        }
        w[k] += 1;
    }
}

/// Result of an independence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub keys: usize,
    pub words: usize,
    pub rank: usize,
}

impl RankReport {
    pub fn full(&self) -> bool {
        self.rank == self.keys
    }
}

/// Exact rank of polynomials viewed as vectors indexed by their monomials.
pub fn rank_of<K: Ord + Clone>(polys: &[FreeElement<K, BigInt>]) -> RankReport {
    let mut index: BTreeMap<&K, usize> = BTreeMap::new();
    for p in polys {
        for k in p.keys() {
            let next = index.len();
            index.entry(k).or_insert(next);
        }
    }
    let rows: Vec<Vec<BigInt>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::from(0); index.len()];
            for (k, c) in p.iter() {
                row[index[k]] = c.clone();
            }
            row
        })
        .collect();
    RankReport {
        keys: polys.len(),
        words: index.len(),
        rank: linalg::rank(&rows),
    }
}

/// Rank of the realizations of `keys`.
pub fn rank_check<X: Realizable>(keys: &[X], version: Version, n: i32) -> Result<RankReport> {
    let polys = keys
        .iter()
        .map(|k| realize::<X, BigInt>(k, version, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(rank_of(&polys))
}

/// Symbolic form of the generic monomial of an ordered forest, with
/// subscripts named after vertices: `a_{i_p i_v}` at position `v`.
///
/// In `V1` the virtual roots are named `0, -1, -2, …` starting from the tree
/// with the greatest root; in `V2` a root `r` carries the loop `a_{i_r i_r}`.
/// Returns the monomial and the strict inequalities between subscripts.
pub fn symbolic_forest(
    f: &OrderedForest,
    version: Version,
) -> Result<(String, Vec<(String, String)>)> {
    f.shape(version)?;
    let mut roots = f.roots();
    roots.sort_unstable_by(|a, b| b.cmp(a));
    let virtual_name = |r: usize| -> String {
        let k = roots.iter().position(|&x| x == r).unwrap() as i64;
        sub(&(-k).to_string())
    };
    let mut mono = String::new();
    let mut ineq = Vec::new();
    for v in 1..=f.len() {
        let me = sub(&v.to_string());
        let below = match (f.parent(v), version) {
            (Some(p), _) => sub(&p.to_string()),
            (None, Version::V1) => virtual_name(v),
            (None, _) => me.clone(),
        };
        if below != me {
            ineq.push((below.clone(), me.clone()));
        }
        mono.push_str(&format!("a_{{{below} {me}}}"));
    }
    Ok((mono, ineq))
}

/// Symbolic generic monomial `a_{i_{σ⁻¹(1)} i_1} ⋯` of a permutation.
pub fn symbolic_permutation(s: &Permutation) -> String {
    let inv = s.inverse();
    (1..=s.len())
        .map(|k| {
            format!(
                "a_{{{} {}}}",
                sub(&inv.apply(k).to_string()),
                sub(&k.to_string())
            )
        })
        .collect()
}

fn sub(name: &str) -> String {
    if name.len() == 1 {
        format!("i_{name}")
    } else {
        format!("i_{{{name}}}")
    }
}

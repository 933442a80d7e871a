//! Free modules over basis keys and the interface shared by the graded
//! bialgebras of the crate.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::structures::{
    Bounds, Endofunction, OrderedForest, PackedWord, Permutation, PlaneForest, RootedForest,
};

/// An index object of a graded basis.
pub trait BasisKey:
    Clone + Ord + Hash + Debug + Display + FromStr<Err = Error> + Send + Sync + 'static
{
    fn degree(&self) -> usize;
}

macro_rules! basis_key {
    ($($t:ty),*) => {$(
        impl BasisKey for $t {
            fn degree(&self) -> usize {
                self.len()
            }
        }
    )*};
}

basis_key!(
    RootedForest,
    PlaneForest,
    OrderedForest,
    PackedWord,
    Permutation,
    Endofunction
);

/// Names of the algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    Ck,
    Nck,
    Ho,
    Wqsym,
    Sgsym,
    Efsym,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 6] = [
        AlgebraTag::Ck,
        AlgebraTag::Nck,
        AlgebraTag::Ho,
        AlgebraTag::Wqsym,
        AlgebraTag::Sgsym,
        AlgebraTag::Efsym,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::Ck => "CK",
            AlgebraTag::Nck => "NCK",
            AlgebraTag::Ho => "Ho",
            AlgebraTag::Wqsym => "WQSym",
            AlgebraTag::Sgsym => "SGSym",
            AlgebraTag::Efsym => "EFSym",
        }
    }
}

impl Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::invalid(format!("unknown algebra {s:?}")))
    }
}

/// A finite linear combination of keys with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeElement<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

/// Linear combination of pairs of keys, read as `left ⊗ right`.
pub type TensorElement<K, C> = FreeElement<(K, K), C>;

impl<K: Ord, C> Default for FreeElement<K, C> {
    fn default() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, C: Scalar> FreeElement<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_key(key: K) -> Self {
        Self::from_term(key, C::one())
    }

    pub fn from_term(key: K, coeff: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Sum of the given keys, each with coefficient one.
    pub fn from_keys<I: IntoIterator<Item = K>>(keys: I) -> Self {
        Self::from_terms(keys.into_iter().map(|k| (k, C::one())))
    }

    pub fn add_term(&mut self, key: K, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    /// Applies `f` to every key, merging coefficients.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> FreeElement<K2, C> {
        FreeElement::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Extends a map on keys linearly.
    pub fn linear_map<K2: Ord + Clone, F: FnMut(&K) -> FreeElement<K2, C>>(
        &self,
        mut f: F,
    ) -> FreeElement<K2, C> {
        let mut out = FreeElement::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut pred: F) -> Self {
        FreeElement {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone, C: Scalar> IntoIterator for FreeElement<K, C> {
    type Item = (K, C);
    type IntoIter = btree_map::IntoIter<K, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone, C: Scalar> FromIterator<(K, C)> for FreeElement<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Ord + Clone, C: Scalar> AddAssign<&FreeElement<K, C>> for FreeElement<K, C> {
    fn add_assign(&mut self, rhs: &FreeElement<K, C>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone, C: Scalar> SubAssign<&FreeElement<K, C>> for FreeElement<K, C> {
    fn sub_assign(&mut self, rhs: &FreeElement<K, C>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v.clone());
        }
    }
}

impl<K: Ord + Clone, C: Scalar> Add for &FreeElement<K, C> {
    type Output = FreeElement<K, C>;

    fn add(self, rhs: Self) -> FreeElement<K, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, C: Scalar> Sub for &FreeElement<K, C> {
    type Output = FreeElement<K, C>;

    fn sub(self, rhs: Self) -> FreeElement<K, C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, C: Scalar> Add for FreeElement<K, C> {
    type Output = FreeElement<K, C>;

    fn add(mut self, rhs: Self) -> FreeElement<K, C> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone, C: Scalar> Sub for FreeElement<K, C> {
    type Output = FreeElement<K, C>;

    fn sub(mut self, rhs: Self) -> FreeElement<K, C> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone, C: Scalar> Neg for &FreeElement<K, C> {
    type Output = FreeElement<K, C>;

    fn neg(self) -> FreeElement<K, C> {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), -v.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone, C: Scalar> Neg for FreeElement<K, C> {
    type Output = FreeElement<K, C>;

    fn neg(self) -> FreeElement<K, C> {
        -&self
    }
}

impl<K: Ord + Clone, C: Scalar> Mul<&C> for &FreeElement<K, C> {
    type Output = FreeElement<K, C>;

    fn mul(self, rhs: &C) -> FreeElement<K, C> {
        self.scale(rhs)
    }
}

impl<K: Ord + Debug, C: Debug> Debug for FreeElement<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Renders as `c [key] + c [key]`, with `0` for the zero element.
impl<K: Ord + Display, C: Scalar> Display for FreeElement<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} [{k}]")?;
        }
        Ok(())
    }
}

/// Display adapter for tensor elements: `c [left | right] + …`.
pub struct TensorDisplay<'a, K: Ord, C>(pub &'a TensorElement<K, C>);

impl<K: Ord + Display + Clone, C: Scalar> Display for TensorDisplay<'_, K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} [{l} | {r}]")?;
        }
        Ok(())
    }
}

/// A graded connected bialgebra with a distinguished basis indexed by
/// `Key`, whose unit is the only key of degree 0.
pub trait GradedBialgebra {
    type Key: BasisKey;
    const TAG: AlgebraTag;

    fn unit() -> Self::Key;

    fn degree(key: &Self::Key) -> usize {
        key.degree()
    }

    /// All keys of degree `n`, in key order.
    fn basis(n: usize, bounds: &Bounds) -> Result<Vec<Self::Key>>;

    fn product<C: Scalar>(a: &Self::Key, b: &Self::Key) -> FreeElement<Self::Key, C>;

    fn coproduct<C: Scalar>(a: &Self::Key) -> TensorElement<Self::Key, C>;
}

pub fn multiply<A: GradedBialgebra, C: Scalar>(
    x: &FreeElement<A::Key, C>,
    y: &FreeElement<A::Key, C>,
) -> FreeElement<A::Key, C> {
    let mut out = FreeElement::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&A::product::<C>(a, b), &(ca.clone() * cb.clone()));
        }
    }
    out
}

pub fn comultiply<A: GradedBialgebra, C: Scalar>(
    x: &FreeElement<A::Key, C>,
) -> TensorElement<A::Key, C> {
    x.linear_map(|k| A::coproduct::<C>(k))
}

/// Product in `A ⊗ A`, componentwise.
pub fn tensor_multiply<A: GradedBialgebra, C: Scalar>(
    x: &TensorElement<A::Key, C>,
    y: &TensorElement<A::Key, C>,
) -> TensorElement<A::Key, C> {
    let mut out = FreeElement::zero();
    for ((a1, a2), ca) in x.iter() {
        for ((b1, b2), cb) in y.iter() {
            let left = A::product::<C>(a1, b1);
            let right = A::product::<C>(a2, b2);
            let c = ca.clone() * cb.clone();
            for (l, cl) in left.iter() {
                for (r, cr) in right.iter() {
                    out.add_term((l.clone(), r.clone()), c.clone() * cl.clone() * cr.clone());
                }
            }
        }
    }
    out
}

/// `(f ⊗ g)` applied to a tensor element.
pub fn tensor_map<K: Ord + Clone, K2: Ord + Clone, C: Scalar, F, G>(
    x: &TensorElement<K, C>,
    mut f: F,
    mut g: G,
) -> TensorElement<K2, C>
where
    F: FnMut(&K) -> FreeElement<K2, C>,
    G: FnMut(&K) -> FreeElement<K2, C>,
{
    let mut out = FreeElement::zero();
    for ((a, b), c) in x.iter() {
        let fa = f(a);
        let gb = g(b);
        for (l, cl) in fa.iter() {
            for (r, cr) in gb.iter() {
                out.add_term((l.clone(), r.clone()), c.clone() * cl.clone() * cr.clone());
            }
        }
    }
    out
}

/// Counit: the coefficient of the unit key.
pub fn counit<A: GradedBialgebra, C: Scalar>(x: &FreeElement<A::Key, C>) -> C {
    x.coeff(&A::unit())
}

/// Antipode on basis keys, memoized across calls on the same value.
pub struct Antipode<A: GradedBialgebra, C: Scalar> {
    memo: BTreeMap<A::Key, FreeElement<A::Key, C>>,
}

impl<A: GradedBialgebra, C: Scalar> Default for Antipode<A, C> {
    fn default() -> Self {
        Antipode {
            memo: BTreeMap::new(),
        }
    }
}

impl<A: GradedBialgebra, C: Scalar> Antipode<A, C> {
    pub fn new() -> Self {
        Self::default()
    }

    /// `S(1) = 1` and `S(x) = -x - Σ S(x′) x″` over the reduced coproduct.
    pub fn of_key(&mut self, key: &A::Key) -> Result<FreeElement<A::Key, C>> {
        if let Some(s) = self.memo.get(key) {
            return Ok(s.clone());
        }
        let unit = A::unit();
        let out = if *key == unit {
            FreeElement::from_key(unit)
        } else if A::degree(key) == 0 {
            return Err(Error::invalid(format!(
                "degree-0 key {key} is not the unit"
            )));
        } else {
            let mut s = -FreeElement::from_key(key.clone());
            for ((l, r), c) in A::coproduct::<C>(key).iter() {
                if *l == unit || *r == unit {
                    continue;
                }
                let sl = self.of_key(l)?;
                let prod = multiply::<A, C>(&sl, &FreeElement::from_key(r.clone()));
                s.add_scaled(&prod, &-c.clone());
            }
            s
        };
        self.memo.insert(key.clone(), out.clone());
        Ok(out)
    }

    pub fn apply(&mut self, x: &FreeElement<A::Key, C>) -> Result<FreeElement<A::Key, C>> {
        let mut out = FreeElement::zero();
        for (k, c) in x.iter() {
            out.add_scaled(&self.of_key(k)?, c);
        }
        Ok(out)
    }
}

pub fn antipode<A: GradedBialgebra, C: Scalar>(
    x: &FreeElement<A::Key, C>,
) -> Result<FreeElement<A::Key, C>> {
    Antipode::<A, C>::new().apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    type E = FreeElement<PackedWord, Int>;

    fn w(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_and_merging() {
        let x = E::from_key(w("1 2"));
        assert!((&x - &x).is_zero());
        assert!((&x + &x.scale(&Int::from(-1))).is_zero());
        let mut y = E::from_term(w("1"), Int::from(2));
        y.add_term(w("1"), Int::from(3));
        assert_eq!(y.coeff(&w("1")), Int::from(5));
        assert_eq!(y.len(), 1);
        let z = &x + &y;
        assert_eq!(z.len(), 2);
        assert!(x.scale(&Int::from(0)).is_zero());
    }

    #[test]
    fn display_order_is_by_degree() {
        let x = E::from_keys([w("1 2"), w("1"), w("2 1")]);
        assert_eq!(x.to_string(), "1 [1] + 1 [1 2] + 1 [2 1]");
        assert_eq!(E::zero().to_string(), "0");
    }

    #[test]
    fn tags_parse() {
        for t in AlgebraTag::ALL {
            assert_eq!(t.name().to_lowercase().parse::<AlgebraTag>().unwrap(), t);
        }
        assert!("pqsym".parse::<AlgebraTag>().is_err());
    }
}

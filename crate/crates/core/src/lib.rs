//! Exact computation in a family of combinatorial Hopf algebras.
//!
//! The crate covers the Connes-Kreimer algebra of rooted forests (commutative
//! and plane versions), the algebra of ordered forests, word quasi-symmetric
//! functions, the permutation algebra with cycle-splitting coproduct and the
//! algebra of endofunctions. Every basis element can be realized as a
//! noncommutative polynomial over an alphabet equipped with a binary relation,
//! and the crate checks the realization theorems by direct enumeration.
//!
//! Coefficients are generic over [`Scalar`]; the aliases below fix them to
//! arbitrary-precision integers, which is what every structure constant in
//! these algebras needs.

pub mod algebra;
pub mod bases;
pub mod check;
pub mod error;
pub mod forests;
pub mod functions;
pub mod golden;
pub mod json;
mod linalg;
pub mod morphisms;
pub mod realization;
pub mod scalar;
pub mod structures;
pub mod verify;
pub mod words;

pub use algebra::{AlgebraTag, FreeElement, GradedBialgebra, TensorElement};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use structures::{
    AdmissibleCut, Bounds, Endofunction, OrderedForest, PackedWord, Permutation, PlaneForest,
    RootedForest,
};

/// Arbitrary-precision integer coefficients.
pub type Int = num_bigint::BigInt;
/// Exact rational coefficients, for callers that need a field.
pub type Rational = num_rational::BigRational;

/// Integer linear combination of basis keys.
pub type Element<K> = FreeElement<K, Int>;
/// Integer linear combination of pairs of basis keys.
pub type Tensor<K> = TensorElement<K, Int>;
/// Integer noncommutative polynomial over bi-indexed letters.
pub type Polynomial = realization::NCPolynomial<Int>;
/// Rational linear combination of basis keys.
pub type RationalElement<K> = FreeElement<K, Rational>;

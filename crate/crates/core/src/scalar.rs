use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient ring for free modules.
///
/// Anything that is a commutative ring with a decimal text form works:
/// `BigInt`, `i64`, `i128`, `BigRational`.
pub trait Scalar:
    Num + FromPrimitive + Clone + Neg<Output = Self> + Debug + Display + Send + Sync + 'static
{
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count fits the coefficient type")
    }

    fn parse_decimal(text: &str) -> Option<Self> {
        Self::from_str_radix(text.trim(), 10).ok()
    }

    /// `(-1)^k`.
    fn sign(k: usize) -> Self {
        if k % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: Num + FromPrimitive + Clone + Neg<Output = T> + Debug + Display + Send + Sync + 'static
{
}

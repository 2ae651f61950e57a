use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer scalar used by the fraction and continued-fraction
/// layer.
///
/// Fixed-width types (`i32`, `i64`, `i128`) are accepted; every arithmetic
/// step goes through the checked operations so an overflow surfaces as an
/// error instead of wrapping. The engine itself runs on [`num_bigint::BigInt`].
pub trait Int:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + FromStr
    + Hash
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
{
    /// `-self`, or `None` when the negation is not representable.
    fn checked_negate(&self) -> Option<Self> {
        Self::zero().checked_sub(self)
    }
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromStr
        + Hash
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
{
}

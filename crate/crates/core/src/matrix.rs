//! Second, independent evaluation of twist words through 2x2 integer
//! matrices. Used to cross-check [`crate::contfrac::cf_eval`].

use crate::contfrac::TwistWord;
use crate::error::FractionError;
use crate::fraction::GenericFraction;
use crate::scalar::Int;

/// 2x2 integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<T>(pub [[T; 2]; 2]);

impl<T: Int> Mat2<T> {
    pub fn identity() -> Self {
        Mat2([[T::one(), T::zero()], [T::zero(), T::one()]])
    }

    /// The twist matrix `[[a, 1], [1, 0]]`.
    pub fn twist(a: T) -> Self {
        Mat2([[a, T::one()], [T::one(), T::zero()]])
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let m = |i: usize, j: usize| -> Option<T> {
            self.0[i][0]
                .checked_mul(&rhs.0[0][j])?
                .checked_add(&self.0[i][1].checked_mul(&rhs.0[1][j])?)
        };
        Some(Mat2([[m(0, 0)?, m(0, 1)?], [m(1, 0)?, m(1, 1)?]]))
    }
}

/// Evaluates `[a1, ..., an, 0]` as the Moebius action of
/// `M(an) ... M(a1)` on the point at infinity, followed by a reciprocal.
///
/// The partial value after `m` twists is `P/Q` where `(P, Q)` is the first
/// column of the partial product; a zero `P` before the next reciprocal means
/// the value is infinite.
pub fn matrix_oracle_eval<T: Int>(
    word: &TwistWord<T>,
) -> Result<GenericFraction<T>, FractionError> {
    let mut prod = Mat2::identity();
    for a in word.entries() {
        prod = Mat2::twist(a.clone())
            .checked_mul(&prod)
            .ok_or(FractionError::Overflow)?;
        if prod.0[0][0].is_zero() {
            return Err(FractionError::InfiniteValue);
        }
    }
    let [[p, _], [q, _]] = prod.0;
    GenericFraction::new(q, p)
}

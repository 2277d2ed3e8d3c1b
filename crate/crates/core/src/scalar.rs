//! Coefficient rings for polynomial arithmetic.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, ToPrimitive, Zero};

/// A signed integer type usable as a polynomial coefficient.
///
/// All arithmetic goes through the `Checked*` traits so that fixed-width
/// types report overflow rather than wrap. For [`num_bigint::BigInt`] the
/// checked operations never fail.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + Zero
        + One
        + Signed
        + Neg<Output = T>
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn assert_coefficient<T: Coefficient>() {}

    #[test]
    fn common_types_are_coefficients() {
        assert_coefficient::<i32>();
        assert_coefficient::<i64>();
        assert_coefficient::<i128>();
        assert_coefficient::<BigInt>();
    }
}

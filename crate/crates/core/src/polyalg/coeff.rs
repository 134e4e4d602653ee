use std::fmt::{Debug, Display};
use std::ops::{Div, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scalar requirements for the algebra kernel: an exact (or approximate)
/// field with the handful of operations the polynomial, group-algebra and
/// operator types actually use. Implemented for arbitrary-precision
/// rationals (the type every verification routine runs on) and for `f64`.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    /// The scalar num/den, the only way constants enter the constructions.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(num: i64) -> Self {
        Self::from_ratio(num, 1)
    }
}

impl Coeff for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(num.into(), den.into())
    }
}

impl Coeff for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }
}

//! Scalar abstraction for the series kernel.
//!
//! The series arithmetic in [`crate::series`] only needs a commutative ring
//! with division by small integers, so it is written against this trait and
//! instantiated at [`crate::Rat`] for all exact computation. `f64` also
//! satisfies the bound, which is occasionally convenient for quick numeric
//! sanity checks.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// The scalar `1/n`, for `n > 0`.
    fn recip_usize(n: usize) -> Self {
        Self::one() / Self::from_usize(n).expect("scalar conversion from usize")
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

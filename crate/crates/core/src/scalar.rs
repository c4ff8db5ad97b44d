//! Scalar abstractions shared by the matrix and algebra code.
//!
//! Everything downstream (3×3 matrices, the cubic field, the division
//! algebra) is written against these traits so the same code runs over
//! `O_K[1/2]`, the finite ring `F_3[t]/(t^2)`, and the rational field `K`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative ring with an involution `x ↦ conj(x)`.
pub trait InvolutiveRing:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn conj(&self) -> Self;

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;
}

/// Rational coefficient types usable for the field `K = Q(λ)` and its
/// extensions: any exact field implementing the `num_traits` arithmetic.
pub trait RationalScalar:
    Clone
    + PartialEq
    + PartialOrd
    + std::fmt::Debug
    + num_traits::Num
    + num_traits::Signed
    + num_traits::FromPrimitive
{
}

impl<T> RationalScalar for T where
    T: Clone
        + PartialEq
        + PartialOrd
        + std::fmt::Debug
        + num_traits::Num
        + num_traits::Signed
        + num_traits::FromPrimitive
{
}

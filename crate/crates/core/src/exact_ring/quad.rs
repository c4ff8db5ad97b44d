//! The field `K = Q(λ)` over an arbitrary exact rational scalar type.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{InvolutiveRing, RationalScalar};

/// `a + bλ` with `λ² = λ - 4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad<T> {
    pub a: T,
    pub b: T,
}

impl<T: RationalScalar> Quad<T> {
    pub fn new(a: T, b: T) -> Self {
        Quad { a, b }
    }

    pub fn from_rational(a: T) -> Self {
        Quad { a, b: T::zero() }
    }

    pub fn from_i64(n: i64) -> Self {
        Quad::from_rational(T::from_i64(n).expect("integer fits the scalar type"))
    }

    pub fn lambda() -> Self {
        Quad::new(T::zero(), T::one())
    }

    pub fn lambda_bar() -> Self {
        Quad::new(T::one(), -T::one())
    }

    pub fn mu() -> Self {
        Quad::lambda() / Quad::lambda_bar()
    }

    /// `N_{K/Q}(x) = a² + ab + 4b²`.
    pub fn norm(&self) -> T {
        let four = T::from_i64(4).unwrap();
        self.a.clone() * self.a.clone() + self.a.clone() * self.b.clone() + four * self.b.clone() * self.b.clone()
    }

    /// `Tr_{K/Q}(x) = 2a + b`.
    pub fn trace(&self) -> T {
        self.a.clone() + self.a.clone() + self.b.clone()
    }

    pub fn rational(&self) -> Option<T> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Quad::new(self.a.clone() * s.clone(), self.b.clone() * s.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Quad::new(c.a / n.clone(), c.b / n))
    }
}

impl<T: RationalScalar + fmt::Display> fmt::Display for Quad<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*l", self.a, self.b)
    }
}

impl<T: RationalScalar> Add for Quad<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Quad::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: RationalScalar> Sub for Quad<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Quad::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: RationalScalar> Neg for Quad<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Quad::new(-self.a, -self.b)
    }
}

impl<T: RationalScalar> Mul for Quad<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let four = T::from_i64(4).unwrap();
        let bd = self.b.clone() * rhs.b.clone();
        Quad::new(
            self.a.clone() * rhs.a.clone() - four * bd.clone(),
            self.a * rhs.b + self.b * rhs.a + bd,
        )
    }
}

impl<T: RationalScalar> Div for Quad<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in K")
    }
}

impl<T: RationalScalar> Zero for Quad<T> {
    fn zero() -> Self {
        Quad::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: RationalScalar> One for Quad<T> {
    fn one() -> Self {
        Quad::new(T::one(), T::zero())
    }
}

impl<T: RationalScalar> InvolutiveRing for Quad<T> {
    fn conj(&self) -> Self {
        Quad::new(self.a.clone() + self.b.clone(), -self.b.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type K64 = Quad<Rational64>;

    #[test]
    fn mu_times_conj_is_one() {
        let mu = K64::mu();
        assert_eq!(mu.clone() * mu.conj(), K64::one());
        assert_eq!(mu.norm(), Rational64::one());
    }

    #[test]
    fn lambda_relation() {
        let l = K64::lambda();
        assert_eq!(l.clone() * l.clone() - l + K64::from_i64(4), K64::zero());
        assert_eq!(K64::lambda().trace(), Rational64::one());
    }
}

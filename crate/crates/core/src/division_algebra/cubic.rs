//! The cubic extension `L = K(η)` with `η³ = 3η − 1`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact_ring::Quad;
use crate::scalar::{InvolutiveRing, RationalScalar};

/// `c₀ + c₁η + c₂η²` with coefficients in `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cubic<T> {
    pub c: [Quad<T>; 3],
}

impl<T: RationalScalar> Cubic<T> {
    pub fn new(c0: Quad<T>, c1: Quad<T>, c2: Quad<T>) -> Self {
        Cubic { c: [c0, c1, c2] }
    }

    pub fn from_k(x: Quad<T>) -> Self {
        Cubic::new(x, Quad::zero(), Quad::zero())
    }

    pub fn from_i64(n: i64) -> Self {
        Cubic::from_k(Quad::from_i64(n))
    }

    pub fn eta() -> Self {
        Cubic::new(Quad::zero(), Quad::one(), Quad::zero())
    }

    /// The value in `K`, when the `η`-coefficients vanish.
    pub fn in_k(&self) -> Option<Quad<T>> {
        (self.c[1].is_zero() && self.c[2].is_zero()).then(|| self.c[0].clone())
    }

    pub fn scale(&self, s: &Quad<T>) -> Self {
        Cubic {
            c: self.c.clone().map(|x| x * s.clone()),
        }
    }

    /// The generator of `Gal(L/K)`: `η ↦ η² − 2`.
    pub fn sigma(&self) -> Self {
        // (η² − 2)² = −η² − η + 4
        let [c0, c1, c2] = self.c.clone();
        let two = Quad::from_i64(2);
        let four = Quad::from_i64(4);
        Cubic::new(
            c0 - c1.clone() * two + c2.clone() * four,
            -c2.clone(),
            c1 - c2,
        )
    }

    pub fn sigma_pow(&self, k: u32) -> Self {
        (0..k % 3).fold(self.clone(), |x, _| x.sigma())
    }

    /// `N_{L/K}(x) = x·σ(x)·σ²(x)`.
    pub fn norm_k(&self) -> Quad<T> {
        let n = self.clone() * self.sigma() * self.sigma_pow(2);
        n.in_k().expect("the norm is fixed by σ")
    }

    /// `Tr_{L/K}(x)`.
    pub fn trace_k(&self) -> Quad<T> {
        let t = self.clone() + self.sigma() + self.sigma_pow(2);
        t.in_k().expect("the trace is fixed by σ")
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_k().inverse()?;
        Some((self.sigma() * self.sigma_pow(2)).scale(&n))
    }
}

impl<T: RationalScalar> Add for Cubic<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2] = self.c;
        let [b0, b1, b2] = rhs.c;
        Cubic::new(a0 + b0, a1 + b1, a2 + b2)
    }
}

impl<T: RationalScalar> Sub for Cubic<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: RationalScalar> Neg for Cubic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Cubic { c: self.c.map(|x| -x) }
    }
}

impl<T: RationalScalar> Mul for Cubic<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut p: [Quad<T>; 5] = std::array::from_fn(|_| Quad::zero());
        for i in 0..3 {
            for j in 0..3 {
                p[i + j] = p[i + j].clone() + self.c[i].clone() * rhs.c[j].clone();
            }
        }
        // η³ = 3η − 1 and η⁴ = 3η² − η.
        let three = Quad::from_i64(3);
        let [p0, p1, p2, p3, p4] = p;
        Cubic::new(
            p0 - p3.clone(),
            p1 + p3 * three.clone() - p4.clone(),
            p2 + p4 * three,
        )
    }
}

impl<T: RationalScalar> Zero for Cubic<T> {
    fn zero() -> Self {
        Cubic::from_k(Quad::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<T: RationalScalar> One for Cubic<T> {
    fn one() -> Self {
        Cubic::from_k(Quad::one())
    }
}

impl<T: RationalScalar> InvolutiveRing for Cubic<T> {
    /// Complex conjugation: fixes `η`, conjugates the `K`-coefficients.
    fn conj(&self) -> Self {
        Cubic {
            c: self.c.clone().map(|x| x.conj()),
        }
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type L = Cubic<BigRational>;

    #[test]
    fn eta_minimal_polynomial() {
        let e = L::eta();
        let f = e.clone() * e.clone() * e.clone() - e.clone() * L::from_i64(3) + L::one();
        assert!(f.is_zero());
    }

    #[test]
    fn sigma_has_order_three() {
        let e = L::eta();
        assert_eq!(e.sigma(), e.clone() * e.clone() - L::from_i64(2));
        assert_eq!(e.sigma().sigma().sigma(), e);
        assert_ne!(e.sigma(), e);
    }

    #[test]
    fn inverse_of_eta() {
        let e = L::eta();
        assert_eq!(e.clone() * e.inverse().unwrap(), L::one());
        // N(η) = −(constant term of η³ − 3η + 1) = −1.
        assert_eq!(e.norm_k(), Quad::from_i64(-1));
    }
}

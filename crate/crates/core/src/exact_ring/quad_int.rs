//! Elements of `O_K[1/2]` for `K = Q(√-15)`, stored as `(a + bλ)/2^e` with
//! `λ = (1 - √-15)/2`, so that `λ² = λ - 4`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::InvolutiveRing;

use super::quad::Quad;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    e: u32,
}

/// 2-adic order of `n`, with zero treated as infinitely divisible.
fn two_adic_order(n: &BigInt) -> u64 {
    n.trailing_zeros().unwrap_or(u64::MAX)
}

impl QuadInt {
    /// `(a + bλ) / 2^e`, normalized.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, e: u32) -> Self {
        let mut x = QuadInt {
            a: a.into(),
            b: b.into(),
            e,
        };
        x.normalize();
        x
    }

    pub fn from_int(n: i64) -> Self {
        QuadInt::new(n, 0, 0)
    }

    pub fn lambda() -> Self {
        QuadInt::new(0, 1, 0)
    }

    pub fn lambda_bar() -> Self {
        QuadInt::new(1, -1, 0)
    }

    /// The 2-adic uniformizer `λ/2`.
    pub fn half_lambda() -> Self {
        QuadInt::new(0, 1, 1)
    }

    /// `μ = λ/λ̄ = λ²/4`.
    pub fn mu() -> Self {
        QuadInt::lambda() * QuadInt::lambda() * QuadInt::new(1, 0, 2)
    }

    /// `√-15 = 1 - 2λ`.
    pub fn sqrt_m15() -> Self {
        QuadInt::new(1, -2, 0)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    fn normalize(&mut self) {
        if self.a.is_zero() && self.b.is_zero() {
            self.e = 0;
            return;
        }
        let k = two_adic_order(&self.a)
            .min(two_adic_order(&self.b))
            .min(u64::from(self.e));
        if k > 0 {
            self.a >>= k;
            self.b >>= k;
            self.e -= k as u32;
        }
    }

    /// Exact product of `self` by `2^k` for any sign of `k`.
    pub fn shift(&self, k: i64) -> Self {
        if k >= 0 {
            let f = BigInt::one() << (k as u64);
            QuadInt::new(&self.a * &f, &self.b * &f, self.e)
        } else {
            QuadInt::new(self.a.clone(), self.b.clone(), self.e + (-k) as u32)
        }
    }

    /// `x·conj(x) = (a² + ab + 4b²)/4^e`.
    pub fn norm(&self) -> BigRational {
        let n = &self.a * &self.a + &self.a * &self.b + BigInt::from(4) * &self.b * &self.b;
        BigRational::new(n, BigInt::one() << (2 * self.e as u64))
    }

    /// Rational value when the `λ`-coefficient vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.b.is_zero() {
            Some(BigRational::new(self.a.clone(), BigInt::one() << self.e as u64))
        } else {
            None
        }
    }

    pub fn to_quad<T: From<BigRational>>(&self) -> Quad<T> {
        let d = BigInt::one() << self.e as u64;
        Quad {
            a: T::from(BigRational::new(self.a.clone(), d.clone())),
            b: T::from(BigRational::new(self.b.clone(), d)),
        }
    }

    /// Valuation at `𝔭 = (2, λ)`, the prime for which `λ/2` is a uniformizer.
    pub fn val_p(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        let k = two_adic_order(&self.a).min(two_adic_order(&self.b));
        let a1: BigInt = &self.a >> k;
        let b1: BigInt = &self.b >> k;
        // a1 + b1·λ ≡ a1 (mod 𝔭); when a1 is even, b1 is odd and the
        // conjugate a1 + b1·λ̄ is a 𝔭-unit, so the norm carries the valuation.
        let rest = if a1.is_odd() {
            0
        } else {
            let n = &a1 * &a1 + &a1 * &b1 + BigInt::from(4) * &b1 * &b1;
            two_adic_order(&n) as i64
        };
        Ok(k as i64 - self.e as i64 + rest)
    }

    /// Valuation at the conjugate prime `𝔭̄`.
    pub fn val_pbar(&self) -> Result<i64> {
        self.conj().val_p()
    }

    /// Membership in the prime `𝔠 = (3, λ + 1)` extended to `O_K[1/2]`.
    pub fn in_c_ideal(&self) -> bool {
        (&self.a - &self.b).is_multiple_of(&BigInt::from(3))
    }

    /// Exact quotient in `O_K[1/2]`, if it exists.
    pub fn checked_div(&self, rhs: &QuadInt) -> Option<QuadInt> {
        if rhs.is_zero() {
            return None;
        }
        // x / y = x·conj(y) / N(y), with N(y) = n / 4^e.
        let num = self.clone() * rhs.conj();
        let n = rhs.norm();
        let (p, q) = (n.numer().clone(), n.denom().clone());
        let tz = two_adic_order(&p);
        let odd = &p >> tz;
        if !num.a.is_multiple_of(&odd) || !num.b.is_multiple_of(&odd) {
            return None;
        }
        // q is a power of two.
        let qe = two_adic_order(&q) as i64;
        let r = QuadInt::new(&num.a / &odd, &num.b / &odd, num.e);
        Some(r.shift(qe - tz as i64))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Small-integer view used by hashing and tests.
    pub fn as_small(&self) -> Option<(i64, i64, u32)> {
        Some((self.a.to_i64()?, self.b.to_i64()?, self.e))
    }

    pub fn is_negative_rational(&self) -> bool {
        self.b.is_zero() && self.a.is_negative()
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*l/2^{}", self.a, self.b, self.e)
    }
}

impl From<i64> for QuadInt {
    fn from(n: i64) -> Self {
        QuadInt::from_int(n)
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        let e = self.e.max(rhs.e);
        let (sa, sb) = (
            self.a << (e - self.e) as u64,
            self.b << (e - self.e) as u64,
        );
        let (ra, rb) = (rhs.a << (e - rhs.e) as u64, rhs.b << (e - rhs.e) as u64);
        QuadInt::new(sa + ra, sb + rb, e)
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        self + (-rhs)
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a,
            b: -self.b,
            e: self.e,
        }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - BigInt::from(4) * &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a + bd;
        QuadInt::new(a, b, self.e + rhs.e)
    }
}

impl Zero for QuadInt {
    fn zero() -> Self {
        QuadInt::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadInt {
    fn one() -> Self {
        QuadInt::from_int(1)
    }
}

impl InvolutiveRing for QuadInt {
    fn conj(&self) -> Self {
        // λ ↦ 1 - λ
        QuadInt::new(&self.a + &self.b, -&self.b, self.e)
    }

    fn try_inverse(&self) -> Option<Self> {
        QuadInt::one().checked_div(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn q(a: i64, b: i64, e: u32) -> QuadInt {
        QuadInt::new(a, b, e)
    }

    #[test]
    fn products() {
        assert_eq!(QuadInt::lambda() * QuadInt::lambda_bar(), QuadInt::from_int(4));
        assert_eq!(QuadInt::half_lambda() * q(1, -1, 1), QuadInt::one());
        assert_eq!(QuadInt::sqrt_m15() * QuadInt::sqrt_m15(), QuadInt::from_int(-15));
    }

    #[test]
    fn conjugation() {
        assert_eq!(QuadInt::lambda().conj(), q(1, -1, 0));
        assert_eq!(QuadInt::from_int(7).conj(), QuadInt::from_int(7));
        assert_eq!(QuadInt::half_lambda().conj(), q(1, -1, 1));
    }

    #[test]
    fn norms() {
        assert_eq!(QuadInt::lambda().norm(), BigRational::from_i64(4).unwrap());
        assert_eq!(QuadInt::sqrt_m15().norm(), BigRational::from_i64(15).unwrap());
        // 1 + λ/2 expands to 1 + 1/2 + 1
        let x = QuadInt::one() + QuadInt::half_lambda();
        assert_eq!(x.norm(), BigRational::new(5.into(), 2.into()));
    }

    #[test]
    fn valuations() {
        assert_eq!(QuadInt::lambda().val_p(), Ok(2));
        assert_eq!(QuadInt::half_lambda().val_p(), Ok(1));
        assert_eq!(QuadInt::lambda_bar().val_p(), Ok(0));
        assert_eq!(QuadInt::from_int(2).val_p(), Ok(1));
        assert_eq!(QuadInt::lambda().val_pbar(), Ok(0));
        assert_eq!(QuadInt::zero().val_p(), Err(Error::ZeroValuation));
        assert_eq!(QuadInt::mu().val_p(), Ok(2));
        assert_eq!(QuadInt::mu().val_pbar(), Ok(-2));
    }

    #[test]
    fn normalization_is_canonical() {
        assert_eq!(q(4, 2, 1), q(2, 1, 0));
        assert_eq!(q(0, 0, 5).exponent(), 0);
        assert_eq!(q(2, 4, 3), q(1, 2, 2));
        assert_eq!(QuadInt::mu(), QuadInt::lambda() * QuadInt::lambda_bar().try_inverse().unwrap());
    }

    #[test]
    fn division() {
        let l = QuadInt::lambda();
        assert_eq!(l.try_inverse(), Some(q(1, -1, 2)));
        assert_eq!(QuadInt::from_int(3).try_inverse(), None);
        assert_eq!(QuadInt::from_int(15).checked_div(&QuadInt::sqrt_m15()), Some(-QuadInt::sqrt_m15()));
    }

    #[test]
    fn c_ideal() {
        assert!(QuadInt::from_int(3).in_c_ideal());
        assert!((QuadInt::lambda() + QuadInt::one()).in_c_ideal());
        assert!(!QuadInt::lambda().in_c_ideal());
        assert!(QuadInt::sqrt_m15().in_c_ideal());
    }

    #[test]
    fn display_format() {
        assert_eq!(QuadInt::half_lambda().to_string(), "0+1*l/2^1");
        assert_eq!(QuadInt::lambda_bar().to_string(), "1+-1*l/2^0");
    }
}

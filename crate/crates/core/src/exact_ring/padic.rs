//! Capped-relative-precision 2-adic numbers and the embedding
//! `K ↪ Q_2` along the prime `𝔭`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::quad_int::QuadInt;

pub const MAX_PRECISION: u32 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicConfig {
    /// Relative precision in bits of every embedded scalar.
    pub precision: u32,
    /// Bits of slack required between a certified result and the precision cap.
    pub guard: u32,
}

impl Default for PadicConfig {
    fn default() -> Self {
        PadicConfig {
            precision: 64,
            guard: 8,
        }
    }
}

impl PadicConfig {
    pub fn new(precision: u32, guard: u32) -> Result<Self> {
        if !(8..=MAX_PRECISION).contains(&precision) || guard >= precision {
            return Err(Error::BadPrecision(precision));
        }
        Ok(PadicConfig { precision, guard })
    }
}

fn mask(x: u128, bits: u32) -> u128 {
    if bits >= 128 {
        x
    } else {
        x & ((1u128 << bits) - 1)
    }
}

/// Inverse of an odd number modulo `2^128`.
fn inv_odd(a: u128) -> u128 {
    debug_assert!(a & 1 == 1);
    let mut x = a;
    for _ in 0..7 {
        x = x.wrapping_mul(2u128.wrapping_sub(a.wrapping_mul(x)));
    }
    x
}

fn bigint_mod_2_128(n: &BigInt) -> u128 {
    let m = BigInt::from(1u8) << 128u32;
    let r = ((n % &m) + &m) % &m;
    r.to_u128().expect("reduced below 2^128")
}

/// An element of `Q_2` known to a fixed number of bits.
///
/// A nonzero value is `2^valuation · unit` with `unit` odd and known modulo
/// `2^precision`. A zero value only records that it is divisible by
/// `2^valuation`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Padic2 {
    unit: u128,
    valuation: i64,
    precision: u32,
    zero: bool,
}

impl Padic2 {
    pub fn zero_to(abs_precision: i64) -> Self {
        Padic2 {
            unit: 0,
            valuation: abs_precision,
            precision: 0,
            zero: true,
        }
    }

    fn from_residue(s: u128, base_val: i64, bits: u32) -> Self {
        let s = mask(s, bits);
        if s == 0 {
            return Padic2::zero_to(base_val + i64::from(bits));
        }
        let v = s.trailing_zeros();
        Padic2 {
            unit: s >> v,
            valuation: base_val + i64::from(v),
            precision: bits - v,
            zero: false,
        }
    }

    /// An integer with `precision` bits of relative precision.
    pub fn from_bigint(n: &BigInt, precision: u32) -> Self {
        if n.is_zero() {
            return Padic2::zero_to(i64::MAX / 4);
        }
        let v = n.trailing_zeros().unwrap_or(0);
        let u: BigInt = n >> v;
        Padic2 {
            unit: mask(bigint_mod_2_128(&u), precision),
            valuation: v as i64,
            precision,
            zero: false,
        }
    }

    pub fn from_i64(n: i64, precision: u32) -> Self {
        Padic2::from_bigint(&BigInt::from(n), precision)
    }

    /// `2^k` exactly (to `precision` relative bits).
    pub fn power_of_two(k: i64, precision: u32) -> Self {
        Padic2 {
            unit: 1,
            valuation: k,
            precision,
            zero: false,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn valuation(&self) -> Option<i64> {
        if self.zero {
            None
        } else {
            Some(self.valuation)
        }
    }

    pub fn unit_part(&self) -> u128 {
        self.unit
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Largest `k` such that the value is known modulo `2^k`.
    pub fn abs_precision(&self) -> i64 {
        if self.zero {
            self.valuation
        } else {
            self.valuation + i64::from(self.precision)
        }
    }

    /// The value modulo `2^bits`, for an element of `Z_2` known that far.
    pub fn residue_mod(&self, bits: u32) -> Option<u128> {
        if self.abs_precision() < i64::from(bits) {
            return None;
        }
        if self.zero {
            return Some(0);
        }
        if self.valuation < 0 {
            return None;
        }
        if self.valuation >= i64::from(bits) {
            return Some(0);
        }
        Some(mask(self.unit << self.valuation, bits))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.zero {
            return None;
        }
        Some(Padic2 {
            unit: mask(inv_odd(self.unit), self.precision),
            valuation: -self.valuation,
            precision: self.precision,
            zero: false,
        })
    }

    /// Multiplies by `2^k` exactly.
    pub fn shift(&self, k: i64) -> Self {
        let mut r = *self;
        r.valuation += k;
        r
    }

    /// Unit part divided out: `2^-v · self`.
    pub fn normalize_unit(&self) -> Self {
        let mut r = *self;
        if !r.zero {
            r.valuation = 0;
        }
        r
    }
}

impl Add for Padic2 {
    type Output = Padic2;
    fn add(self, rhs: Padic2) -> Padic2 {
        let abs = self.abs_precision().min(rhs.abs_precision());
        match (self.zero, rhs.zero) {
            (true, true) => Padic2::zero_to(abs),
            (true, false) | (false, true) => {
                let y = if self.zero { rhs } else { self };
                if abs <= y.valuation {
                    Padic2::zero_to(abs)
                } else {
                    Padic2 {
                        precision: (abs - y.valuation) as u32,
                        unit: mask(y.unit, (abs - y.valuation) as u32),
                        ..y
                    }
                }
            }
            (false, false) => {
                let m = self.valuation.min(rhs.valuation);
                if abs <= m {
                    return Padic2::zero_to(abs);
                }
                let bits = (abs - m) as u32;
                let term = |x: &Padic2| {
                    let d = x.valuation - m;
                    if d >= i64::from(bits) {
                        0
                    } else {
                        x.unit << d
                    }
                };
                Padic2::from_residue(term(&self).wrapping_add(term(&rhs)), m, bits)
            }
        }
    }
}

impl Neg for Padic2 {
    type Output = Padic2;
    fn neg(self) -> Padic2 {
        if self.zero {
            return self;
        }
        Padic2 {
            unit: mask(self.unit.wrapping_neg(), self.precision),
            ..self
        }
    }
}

impl Sub for Padic2 {
    type Output = Padic2;
    fn sub(self, rhs: Padic2) -> Padic2 {
        self + (-rhs)
    }
}

impl Mul for Padic2 {
    type Output = Padic2;
    fn mul(self, rhs: Padic2) -> Padic2 {
        match (self.zero, rhs.zero) {
            (true, true) => Padic2::zero_to(self.valuation.saturating_add(rhs.valuation)),
            (true, false) | (false, true) => {
                Padic2::zero_to(self.valuation.saturating_add(rhs.valuation))
            }
            (false, false) => {
                let p = self.precision.min(rhs.precision);
                Padic2 {
                    unit: mask(self.unit.wrapping_mul(rhs.unit), p),
                    valuation: self.valuation + rhs.valuation,
                    precision: p,
                    zero: false,
                }
            }
        }
    }
}

/// The root of `X² - X + 4` in `Z_2` with positive valuation, modulo `2^128`.
pub fn lambda_root() -> u128 {
    let mut r: u128 = 0;
    for _ in 0..8 {
        let f = r.wrapping_mul(r).wrapping_sub(r).wrapping_add(4);
        let df = r.wrapping_mul(2).wrapping_sub(1);
        r = r.wrapping_sub(f.wrapping_mul(inv_odd(df)));
    }
    debug_assert_eq!(r.wrapping_mul(r).wrapping_sub(r).wrapping_add(4), 0);
    r
}

/// Image of `x` under the completion of `K` at `𝔭`.
///
/// Fails when the computed valuation is not separated from the precision cap
/// by the configured guard, so every returned value has a certified
/// valuation.
pub fn embed_2adic(x: &QuadInt, config: PadicConfig) -> Result<Padic2> {
    let n = config.precision;
    if x.is_zero() {
        return Ok(Padic2::zero_to(i64::MAX / 4));
    }
    let r = lambda_root();
    let num = bigint_mod_2_128(x.a()).wrapping_add(bigint_mod_2_128(x.b()).wrapping_mul(r));
    let num = mask(num, n);
    if num == 0 || num.trailing_zeros() + config.guard >= n {
        return Err(Error::PrecisionExhausted {
            needed: num.trailing_zeros().max(n) + config.guard,
            available: n,
        });
    }
    let v = num.trailing_zeros();
    Ok(Padic2 {
        unit: num >> v,
        valuation: i64::from(v) - i64::from(x.exponent()),
        precision: n - v,
        zero: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn lambda_root_mod_32() {
        assert_eq!(lambda_root() % 32, 20);
        assert_eq!((1u128.wrapping_sub(lambda_root())) % 32, 13);
    }

    #[test]
    fn embedding_examples() {
        let c = PadicConfig::default();
        let l = embed_2adic(&QuadInt::lambda(), c).unwrap();
        assert_eq!(l.valuation(), Some(2));
        assert_eq!(l.residue_mod(5), Some(20));
        let lb = embed_2adic(&QuadInt::lambda_bar(), c).unwrap();
        assert_eq!(lb.residue_mod(5), Some(13));
        let one = embed_2adic(&QuadInt::one(), c).unwrap();
        assert_eq!(one.residue_mod(64), Some(1));
        let h = embed_2adic(&QuadInt::half_lambda(), c).unwrap();
        assert_eq!(h.valuation(), Some(1));
    }

    #[test]
    fn guard_violation_is_reported() {
        let c = PadicConfig::new(16, 8).unwrap();
        let x = QuadInt::lambda();
        let mut p = QuadInt::one();
        for _ in 0..5 {
            p = p * x.clone();
        }
        assert!(matches!(embed_2adic(&p, c), Err(Error::PrecisionExhausted { .. })));
    }

    #[test]
    fn cancellation_loses_precision() {
        let a = Padic2::from_i64(5, 16);
        let b = Padic2::from_i64(-1, 16);
        let s = a + b;
        assert_eq!(s.valuation(), Some(2));
        assert_eq!(s.abs_precision(), 16);
        assert_eq!(s.residue_mod(16), Some(4));
        let z = a - a;
        assert!(z.is_zero());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::InvolutiveRing;

/// `x0 + x1·t` in `F₃[t]/(t²)`, coordinates kept in `0..3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct R1Elem {
    pub x0: u8,
    pub x1: u8,
}

impl R1Elem {
    pub const ZERO: R1Elem = R1Elem { x0: 0, x1: 0 };
    pub const ONE: R1Elem = R1Elem { x0: 1, x1: 0 };
    pub const T: R1Elem = R1Elem { x0: 0, x1: 1 };

    pub fn new(x0: i64, x1: i64) -> Self {
        R1Elem {
            x0: x0.rem_euclid(3) as u8,
            x1: x1.rem_euclid(3) as u8,
        }
    }

    /// The image in `R₀ = R₁/(t)`, as an element of `R₁`.
    pub fn level0(self) -> Self {
        R1Elem { x0: self.x0, x1: 0 }
    }

    pub fn is_unit(self) -> bool {
        self.x0 != 0
    }

    /// Index in `0..9`, used for packing matrices.
    pub fn index(self) -> u32 {
        u32::from(self.x0) + 3 * u32::from(self.x1)
    }

    pub fn from_index(i: u32) -> Self {
        R1Elem {
            x0: (i % 3) as u8,
            x1: (i / 3) as u8,
        }
    }

    pub fn all() -> impl Iterator<Item = R1Elem> {
        (0..9).map(R1Elem::from_index)
    }

    pub fn units() -> impl Iterator<Item = R1Elem> {
        R1Elem::all().filter(|x| x.is_unit())
    }
}

impl fmt::Display for R1Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*t", self.x0, self.x1)
    }
}

impl Add for R1Elem {
    type Output = R1Elem;
    #[inline]
    fn add(self, o: R1Elem) -> R1Elem {
        R1Elem {
            x0: (self.x0 + o.x0) % 3,
            x1: (self.x1 + o.x1) % 3,
        }
    }
}

impl Neg for R1Elem {
    type Output = R1Elem;
    #[inline]
    fn neg(self) -> R1Elem {
        R1Elem {
            x0: (3 - self.x0) % 3,
            x1: (3 - self.x1) % 3,
        }
    }
}

impl Sub for R1Elem {
    type Output = R1Elem;
    #[inline]
    fn sub(self, o: R1Elem) -> R1Elem {
        self + (-o)
    }
}

impl Mul for R1Elem {
    type Output = R1Elem;
    #[inline]
    fn mul(self, o: R1Elem) -> R1Elem {
        R1Elem {
            x0: (self.x0 * o.x0) % 3,
            x1: (self.x0 * o.x1 + self.x1 * o.x0) % 3,
        }
    }
}

impl Zero for R1Elem {
    fn zero() -> Self {
        R1Elem::ZERO
    }
    fn is_zero(&self) -> bool {
        *self == R1Elem::ZERO
    }
}

impl One for R1Elem {
    fn one() -> Self {
        R1Elem::ONE
    }
}

impl InvolutiveRing for R1Elem {
    fn conj(&self) -> Self {
        R1Elem {
            x0: self.x0,
            x1: (3 - self.x1) % 3,
        }
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.x0 == 0 {
            return None;
        }
        // (x0 + x1 t)^-1 = x0^-1 - x1 x0^-2 t, and x0^-1 = x0 in F₃.
        Some(R1Elem::new(i64::from(self.x0), -i64::from(self.x1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_units_with_cubes_pm_one() {
        let units: Vec<_> = R1Elem::units().collect();
        assert_eq!(units.len(), 6);
        for u in units {
            let c = u * u * u;
            assert!(c == R1Elem::ONE || c == -R1Elem::ONE);
            assert_eq!(u * u.try_inverse().unwrap(), R1Elem::ONE);
        }
        assert_eq!(R1Elem::T * R1Elem::T, R1Elem::ZERO);
    }

    #[test]
    fn conj_is_ring_involution() {
        for x in R1Elem::all() {
            assert_eq!(x.conj().conj(), x);
            for y in R1Elem::all() {
                assert_eq!((x * y).conj(), x.conj() * y.conj());
                assert_eq!((x + y).conj(), x.conj() + y.conj());
            }
        }
    }
}

//! The cyclic algebra `D = L ⊕ LΠ ⊕ LΠ²` with `Π³ = μ` and `Πz = σ(z)Π`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact_ring::Quad;
use crate::hermitian_core::RingMat3;
use crate::scalar::{InvolutiveRing, RationalScalar};

use super::cubic::Cubic;

/// `x₀ + x₁Π + x₂Π²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DElem<T> {
    pub x: [Cubic<T>; 3],
}

/// `μ = λ/λ̄ = λ²/4`.
pub fn mu<T: RationalScalar>() -> Quad<T> {
    let l = Quad::<T>::lambda();
    (l.clone() * l).scale(&(T::one() / T::from_i64(4).unwrap()))
}

impl<T: RationalScalar> DElem<T> {
    pub fn new(x0: Cubic<T>, x1: Cubic<T>, x2: Cubic<T>) -> Self {
        DElem { x: [x0, x1, x2] }
    }

    pub fn from_l(z: Cubic<T>) -> Self {
        DElem::new(z, Cubic::zero(), Cubic::zero())
    }

    pub fn from_k(z: Quad<T>) -> Self {
        DElem::from_l(Cubic::from_k(z))
    }

    pub fn from_i64(n: i64) -> Self {
        DElem::from_k(Quad::from_i64(n))
    }

    pub fn pi() -> Self {
        DElem::new(Cubic::zero(), Cubic::one(), Cubic::zero())
    }

    /// `z·Π^i`.
    pub fn monomial(z: Cubic<T>, i: usize) -> Self {
        let mut x: [Cubic<T>; 3] = std::array::from_fn(|_| Cubic::zero());
        x[i] = z;
        DElem { x }
    }

    /// The value in `K`, when `self` is central.
    pub fn in_k(&self) -> Option<Quad<T>> {
        if self.x[1].is_zero() && self.x[2].is_zero() {
            self.x[0].in_k()
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Quad<T>) -> Self {
        DElem {
            x: self.x.clone().map(|z| z.scale(s)),
        }
    }

    /// The involution of the second kind: `z* = z̄` on `L`, `Π* = μ̄Π²`.
    pub fn star(&self) -> Self {
        let pi_star = DElem::monomial(Cubic::from_k(mu::<T>().conj()), 2);
        let mut p = DElem::one();
        let mut acc = DElem::zero();
        for i in 0..3 {
            acc = acc + p.clone() * DElem::from_l(self.x[i].conj());
            p = p * pi_star.clone();
        }
        acc
    }

    /// Image in `M₃(L)`: `z ↦ diag(z, σ²z, σz)`, `Π ↦ [[0,0,μ],[1,0,0],[0,1,0]]`.
    pub fn embed(&self) -> RingMat3<Cubic<T>> {
        let d = |z: &Cubic<T>| RingMat3::diag([z.clone(), z.sigma_pow(2), z.sigma()]);
        let o = Cubic::<T>::zero;
        let l = Cubic::<T>::one;
        let p = RingMat3::new([
            [o(), o(), Cubic::from_k(mu())],
            [l(), o(), o()],
            [o(), l(), o()],
        ]);
        let p2 = &p * &p;
        &(&d(&self.x[0]) + &(&d(&self.x[1]) * &p)) + &(&d(&self.x[2]) * &p2)
    }

    /// Coefficients `(t, s, n)` of the reduced characteristic polynomial
    /// `X³ − tX² + sX − n`, all in `K`.
    pub fn reduced_charpoly(&self) -> Option<(Quad<T>, Quad<T>, Quad<T>)> {
        let m = self.embed();
        Some((
            m.trace().in_k()?,
            m.principal_minor_sum().in_k()?,
            m.det().in_k()?,
        ))
    }

    pub fn nrd(&self) -> Option<Quad<T>> {
        self.embed().det().in_k()
    }

    pub fn trd(&self) -> Option<Quad<T>> {
        self.embed().trace().in_k()
    }

    /// `x⁻¹ = (x² − t·x + s)/n` from the reduced characteristic polynomial.
    pub fn inverse(&self) -> Option<Self> {
        let (t, s, n) = self.reduced_charpoly()?;
        let ninv = n.inverse()?;
        let x2 = self.clone() * self.clone();
        Some((x2 - self.scale(&t) + DElem::from_k(s)).scale(&ninv))
    }

    /// Rational coordinates on the basis `λ^a η^b Π^c`, indexed `6c + 2b + a`.
    pub fn coords(&self) -> [T; 18] {
        std::array::from_fn(|k| {
            let q = &self.x[k / 6].c[(k % 6) / 2];
            if k % 2 == 0 {
                q.a.clone()
            } else {
                q.b.clone()
            }
        })
    }

    pub fn from_coords(y: &[T; 18]) -> Self {
        DElem {
            x: std::array::from_fn(|c| {
                Cubic {
                    c: std::array::from_fn(|b| Quad::new(y[6 * c + 2 * b].clone(), y[6 * c + 2 * b + 1].clone())),
                }
            }),
        }
    }

    pub fn basis(k: usize) -> Self {
        let mut y: [T; 18] = std::array::from_fn(|_| T::zero());
        y[k] = T::one();
        DElem::from_coords(&y)
    }

    /// `tr_{D/Q}`: the trace of left multiplication on `D ≅ Q^18`.
    pub fn trace_q(&self) -> T {
        (0..18).fold(T::zero(), |acc, k| {
            acc + (self.clone() * DElem::basis(k)).coords()[k].clone()
        })
    }
}

impl<T: RationalScalar> Add for DElem<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2] = self.x;
        let [b0, b1, b2] = rhs.x;
        DElem::new(a0 + b0, a1 + b1, a2 + b2)
    }
}

impl<T: RationalScalar> Sub for DElem<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: RationalScalar> Neg for DElem<T> {
    type Output = Self;
    fn neg(self) -> Self {
        DElem { x: self.x.map(|z| -z) }
    }
}

impl<T: RationalScalar> Mul for DElem<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (aΠ^i)(bΠ^j) = a·σ^i(b)·Π^{i+j}, folding Π³ = μ.
        let m = Cubic::from_k(mu::<T>());
        let mut out: [Cubic<T>; 3] = std::array::from_fn(|_| Cubic::zero());
        for i in 0..3 {
            if self.x[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                let mut p = self.x[i].clone() * rhs.x[j].sigma_pow(i as u32);
                if i + j >= 3 {
                    p = p * m.clone();
                }
                let k = (i + j) % 3;
                out[k] = out[k].clone() + p;
            }
        }
        DElem { x: out }
    }
}

impl<T: RationalScalar> Zero for DElem<T> {
    fn zero() -> Self {
        DElem::from_l(Cubic::zero())
    }
    fn is_zero(&self) -> bool {
        self.x.iter().all(Zero::is_zero)
    }
}

impl<T: RationalScalar> One for DElem<T> {
    fn one() -> Self {
        DElem::from_l(Cubic::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type D = DElem<BigRational>;
    type K = Quad<BigRational>;

    #[test]
    fn pi_twists_eta() {
        let e = D::from_l(Cubic::eta());
        let lhs = D::pi() * e;
        let rhs = D::monomial(Cubic::eta().sigma(), 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pi_cubed_is_mu() {
        let p = D::pi();
        assert_eq!(p.clone() * p.clone() * p, D::from_k(mu()));
        assert_eq!(mu::<BigRational>(), K::lambda() / K::lambda_bar());
    }

    #[test]
    fn lambda_bar_pi_product() {
        let lb = Cubic::from_k(K::lambda_bar());
        let x = D::monomial(lb.clone(), 1) * D::monomial(lb, 2);
        assert_eq!(x, D::from_i64(4));
    }

    #[test]
    fn star_on_pi() {
        let p = D::pi();
        assert_eq!(p.star() * p.clone(), D::one());
        assert_eq!(D::from_l(Cubic::eta()).star(), D::from_l(Cubic::eta()));
        assert_eq!(p.nrd(), Some(mu()));
    }

    #[test]
    fn trace_comparison() {
        let x = D::from_l(Cubic::eta() + Cubic::one());
        let t = x.trd().unwrap().trace() * BigRational::from_integer(3.into());
        assert_eq!(x.trace_q(), t);
    }
}

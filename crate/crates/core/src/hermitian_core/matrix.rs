//! 3×3 matrices over an involutive ring.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::InvolutiveRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingMat3<R> {
    pub m: [[R; 3]; 3],
}

impl<R: InvolutiveRing> RingMat3<R> {
    pub fn new(m: [[R; 3]; 3]) -> Self {
        RingMat3 { m }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> R) -> Self {
        RingMat3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| R::zero())
    }

    pub fn identity() -> Self {
        Self::scalar(R::one())
    }

    pub fn scalar(c: R) -> Self {
        Self::from_fn(|i, j| if i == j { c.clone() } else { R::zero() })
    }

    pub fn diag(d: [R; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { R::zero() })
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.m[i][j]
    }

    pub fn map<S: InvolutiveRing>(&self, f: impl Fn(&R) -> S) -> RingMat3<S> {
        RingMat3::from_fn(|i, j| f(&self.m[i][j]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].clone())
    }

    /// Conjugate transpose.
    pub fn star(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].conj())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_fn(|i, j| c.clone() * self.m[i][j].clone())
    }

    pub fn trace(&self) -> R {
        self.m[0][0].clone() + self.m[1][1].clone() + self.m[2][2].clone()
    }

    fn minor(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> R {
        self.m[r0][c0].clone() * self.m[r1][c1].clone()
            - self.m[r0][c1].clone() * self.m[r1][c0].clone()
    }

    pub fn det(&self) -> R {
        let m = &self.m;
        m[0][0].clone() * self.minor(1, 2, 1, 2) - m[0][1].clone() * self.minor(1, 2, 0, 2)
            + m[0][2].clone() * self.minor(1, 2, 0, 1)
    }

    pub fn adjugate(&self) -> Self {
        let others = |k: usize| match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        Self::from_fn(|i, j| {
            // cofactor of entry (j, i)
            let (r0, r1) = others(j);
            let (c0, c1) = others(i);
            let c = self.minor(r0, r1, c0, c1);
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    /// Sum of the principal 2×2 minors.
    pub fn principal_minor_sum(&self) -> R {
        self.minor(0, 1, 0, 1) + self.minor(0, 2, 0, 2) + self.minor(1, 2, 1, 2)
    }

    /// Inverse by adjugate; `None` unless the determinant is a ring unit.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().try_inverse()?;
        Some(self.adjugate().scale(&d))
    }

    /// `Some(c)` when `self = c·I`.
    pub fn as_scalar(&self) -> Option<R> {
        let c = self.m[0][0].clone();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { c.clone() } else { R::zero() };
                if self.m[i][j] != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_scalar(&self) -> bool {
        self.as_scalar().is_some()
    }

    pub fn is_hermitian(&self) -> bool {
        self.star() == *self
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents through the ring inverse.
    pub fn zpow(&self, n: i64) -> Option<Self> {
        if n >= 0 {
            Some(self.pow(n as u64))
        } else {
            Some(self.inverse()?.pow(n.unsigned_abs()))
        }
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> [R; 3] {
        std::array::from_fn(|i| self.m[i][j].clone())
    }

    pub fn from_columns(cols: &[[R; 3]; 3]) -> Self {
        Self::from_fn(|i, j| cols[j][i].clone())
    }

    pub fn mul_vec(&self, v: &[R; 3]) -> [R; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(R::zero(), |acc, k| acc + self.m[i][k].clone() * v[k].clone())
        })
    }
}

/// `x* · form · y` for column vectors.
pub fn sesquilinear<R: InvolutiveRing>(form: &RingMat3<R>, x: &[R; 3], y: &[R; 3]) -> R {
    let fy = form.mul_vec(y);
    (0..3).fold(R::zero(), |acc, i| acc + x[i].conj() * fy[i].clone())
}

impl<R: InvolutiveRing> Mul for &RingMat3<R> {
    type Output = RingMat3<R>;
    fn mul(self, rhs: &RingMat3<R>) -> RingMat3<R> {
        RingMat3::from_fn(|i, j| {
            self.m[i][0].clone() * rhs.m[0][j].clone()
                + self.m[i][1].clone() * rhs.m[1][j].clone()
                + self.m[i][2].clone() * rhs.m[2][j].clone()
        })
    }
}

impl<R: InvolutiveRing> Mul for RingMat3<R> {
    type Output = RingMat3<R>;
    fn mul(self, rhs: RingMat3<R>) -> RingMat3<R> {
        &self * &rhs
    }
}

impl<R: InvolutiveRing> Add for &RingMat3<R> {
    type Output = RingMat3<R>;
    fn add(self, rhs: &RingMat3<R>) -> RingMat3<R> {
        RingMat3::from_fn(|i, j| self.m[i][j].clone() + rhs.m[i][j].clone())
    }
}

impl<R: InvolutiveRing> Sub for &RingMat3<R> {
    type Output = RingMat3<R>;
    fn sub(self, rhs: &RingMat3<R>) -> RingMat3<R> {
        RingMat3::from_fn(|i, j| self.m[i][j].clone() - rhs.m[i][j].clone())
    }
}

impl<R: InvolutiveRing> Neg for &RingMat3<R> {
    type Output = RingMat3<R>;
    fn neg(self) -> RingMat3<R> {
        RingMat3::from_fn(|i, j| -self.m[i][j].clone())
    }
}

/// Product of a sequence of matrices, left to right.
pub fn product<'a, R: InvolutiveRing + 'a>(
    factors: impl IntoIterator<Item = &'a RingMat3<R>>,
) -> RingMat3<R> {
    factors
        .into_iter()
        .fold(RingMat3::identity(), |acc, f| &acc * f)
}

impl<R: InvolutiveRing> Default for RingMat3<R> {
    fn default() -> Self {
        Self::identity()
    }
}

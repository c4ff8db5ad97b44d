//! The Hermitian forms `Q`, `Q′` and the twist `Φ` relating them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_ring::{Quad, QuadInt};
use crate::scalar::InvolutiveRing;

use super::matrix::RingMat3;

pub type QuadMat = RingMat3<QuadInt>;
pub type KMat = RingMat3<Quad<BigRational>>;

fn qi(a: i64, b: i64, e: u32) -> QuadInt {
    QuadInt::new(a, b, e)
}

fn int(n: i64) -> QuadInt {
    QuadInt::from_int(n)
}

/// The Hermitian matrix `Q` defining the unitary group.
pub fn q_form() -> QuadMat {
    let l = QuadInt::lambda();
    let lb = QuadInt::lambda_bar();
    let two = int(2);
    let p = l.clone() + two.clone(); // λ + 2
    let pb = lb + two; // λ̄ + 2
    RingMat3::new([
        [int(10), -(int(2) * p.clone()), p.clone()],
        [-(int(2) * pb.clone()), int(10), -(int(2) * p)],
        [pb.clone(), -(int(2) * pb), int(10)],
    ])
}

/// The change of basis `Φ` with `det Φ = 28`.
pub fn phi() -> QuadMat {
    RingMat3::new([
        [int(1), qi(-1, 2, 0), int(-2)],
        [qi(3, -4, 1), qi(1, 2, 1), int(-1)],
        [qi(1, -2, 1), qi(1, 0, 1), int(-2)],
    ])
}

/// `Q′` as written out entry by entry, independent of `Φ`.
pub fn q_prime_expected() -> QuadMat {
    let s = qi(-1, 2, 0); // 2λ - 1
    let sb = s.conj(); // 2λ̄ - 1
    RingMat3::new([
        [int(90), sb.clone(), int(-15)],
        [s.clone(), int(90), int(15) * s],
        [int(-15), int(15) * sb, int(70)],
    ])
}

/// `Φ* Q Φ`.
pub fn q_prime() -> QuadMat {
    let p = phi();
    &(&p.star() * &q_form()) * &p
}

pub fn to_k(g: &QuadMat) -> KMat {
    g.map(|x| x.to_quad::<BigRational>())
}

/// The rational `c` with `g* · form · g = c · form`.
pub fn similitude_factor(g: &QuadMat, form: &QuadMat) -> Result<BigRational> {
    if !form.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let lhs = to_k(&(&(&g.star() * form) * g));
    let f = to_k(form);
    let (i, j) = (0..9)
        .map(|k| (k / 3, k % 3))
        .find(|&(i, j)| !f.m[i][j].is_zero())
        .ok_or(Error::NotSimilitude)?;
    let c = lhs.m[i][j].clone() / f.m[i][j].clone();
    let c_rat = c.rational().ok_or(Error::NotSimilitude)?;
    if lhs != f.scale(&c) || c_rat.is_zero() {
        return Err(Error::NotSimilitude);
    }
    Ok(c_rat)
}

/// Coefficients `[1, c2, c1, c0]` of the characteristic polynomial
/// `t³ + c2·t² + c1·t + c0` of a Hermitian matrix.
pub fn charpoly(form: &QuadMat) -> Result<[BigRational; 4]> {
    if !form.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let rat = |x: QuadInt| x.to_rational().ok_or(Error::NotHermitian);
    let tr = rat(form.trace())?;
    let m2 = rat(form.principal_minor_sum())?;
    let det = rat(form.det())?;
    Ok([BigRational::one(), -tr, m2, -det])
}

/// Evaluates a polynomial with coefficients from highest degree down.
pub fn eval_poly(coeffs: &[BigRational], t: &BigRational) -> BigRational {
    coeffs
        .iter()
        .fold(BigRational::zero(), |acc, c| acc * t + c)
}

#[derive(Clone, Debug)]
pub struct TwistReport {
    pub det_phi: QuadInt,
    pub computed: QuadMat,
    pub expected: QuadMat,
    /// Entries `(i, j)` where the two disagree.
    pub mismatches: Vec<(usize, usize)>,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.det_phi == QuadInt::from_int(28)
    }
}

pub fn twist_check() -> TwistReport {
    let computed = q_prime();
    let expected = q_prime_expected();
    let mismatches = (0..9)
        .map(|k| (k / 3, k % 3))
        .filter(|&(i, j)| computed.m[i][j] != expected.m[i][j])
        .collect();
    TwistReport {
        det_phi: phi().det(),
        computed,
        expected,
        mismatches,
    }
}

/// Rational number helper used throughout the checks.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_is_hermitian_with_known_charpoly() {
        let q = q_form();
        assert!(q.is_hermitian());
        let cp = charpoly(&q).unwrap();
        assert_eq!(cp, [rat(1, 1), rat(-30, 1), rat(210, 1), rat(-300, 1)]);
        let id = RingMat3::<QuadInt>::identity();
        assert_eq!(
            charpoly(&id).unwrap(),
            [rat(1, 1), rat(-3, 1), rat(3, 1), rat(-1, 1)]
        );
    }

    #[test]
    fn cayley_hamilton_for_q() {
        let q = q_form();
        let q2 = &q * &q;
        let q3 = &q2 * &q;
        let r = &(&(&q3 - &q2.scale(&int(30))) + &q.scale(&int(210)))
            - &RingMat3::scalar(int(300));
        assert_eq!(r, RingMat3::zero());
    }

    #[test]
    fn twist_matches_expected_form() {
        let r = twist_check();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.computed.m[0][0], int(90));
        assert_eq!(r.computed.m[2][2], int(70));
    }

    #[test]
    fn similitude_factors() {
        let q = q_form();
        let id = RingMat3::<QuadInt>::identity();
        assert_eq!(similitude_factor(&id, &q).unwrap(), rat(1, 1));
        assert_eq!(similitude_factor(&id.scale(&int(2)), &q).unwrap(), rat(4, 1));
        let non = RingMat3::diag([int(1), int(2), int(1)]);
        assert_eq!(similitude_factor(&non, &q), Err(Error::NotSimilitude));
    }

    #[test]
    fn adjugate_determinant_identity() {
        let p = phi();
        let d = p.det();
        assert_eq!(p.adjugate().det(), d.clone() * d.clone());
        assert_eq!(&p * &p.adjugate(), RingMat3::scalar(d));
    }
}

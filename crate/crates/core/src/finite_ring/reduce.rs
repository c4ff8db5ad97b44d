use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exact_ring::QuadInt;
use crate::hermitian_core::{phi, q_prime, QuadMat, RingMat3};
use crate::scalar::InvolutiveRing;

use super::r1::R1Elem;

pub type R1Mat = RingMat3<R1Elem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Modulo `𝔠`, landing in `F₃`.
    Zero,
    /// Modulo `𝔠² = (3)`, landing in `F₃[t]/(t²)`.
    One,
}

fn mod3(n: &BigInt) -> i64 {
    n.mod_floor(&BigInt::from(3)).to_i64().unwrap()
}

/// Reduction of `O_K[1/2]` onto `R₁`, sending `λ ↦ 2 + t` and `1/2 ↦ 2`.
pub fn reduce_scalar(x: &QuadInt) -> R1Elem {
    let a = mod3(x.a());
    let b = mod3(x.b());
    let r = R1Elem::new(a + 2 * b, b);
    if x.exponent() % 2 == 1 {
        -r
    } else {
        r
    }
}

/// The image of `λ` in `R₁`.
pub fn reduce_lambda() -> R1Elem {
    reduce_scalar(&QuadInt::lambda())
}

/// `π′_n(g) = Φ⁻¹ g Φ` reduced at the given level.
pub fn reduce_matrix(g: &QuadMat, level: Level) -> R1Mat {
    let p = phi();
    // Φ⁻¹ = adj(Φ) / 28 and 28 ≡ 1 (mod 3).
    let inv28 = reduce_scalar(&p.det())
        .try_inverse()
        .expect("det Φ is prime to 3");
    let adj = p.adjugate().map(reduce_scalar);
    let r = &(&adj * &g.map(reduce_scalar)) * &p.map(reduce_scalar);
    let r = r.scale(&inv28);
    match level {
        Level::One => r,
        Level::Zero => r.map(|x| x.level0()),
    }
}

/// `Q′₁`, the reduction of `Q′` modulo `3`.
pub fn q1_form() -> R1Mat {
    q_prime().map(reduce_scalar)
}

/// Reductions of `−1`, `2` and `λ/2`, which generate the scalar image.
pub fn scalar_image() -> Vec<R1Elem> {
    let gens = [
        QuadInt::from_int(-1),
        QuadInt::from_int(2),
        QuadInt::half_lambda(),
    ]
    .map(|x| reduce_scalar(&x));
    let mut out = vec![R1Elem::ONE];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = out[i] * g;
            if !out.contains(&y) {
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_image() {
        let l = reduce_lambda();
        assert_eq!(l, R1Elem::new(2, 1));
        assert_eq!(reduce_scalar(&QuadInt::lambda_bar()), R1Elem::new(2, -1));
        assert_eq!(l * l - l + R1Elem::new(4, 0), R1Elem::ZERO);
        assert_eq!(reduce_scalar(&QuadInt::sqrt_m15()), R1Elem::T);
    }

    #[test]
    fn halves_reduce_consistently() {
        let h = QuadInt::new(1, 0, 1);
        assert_eq!(reduce_scalar(&h) * R1Elem::new(2, 0), R1Elem::ONE);
        assert_eq!(reduce_scalar(&QuadInt::half_lambda()), R1Elem::new(1, -1));
    }

    #[test]
    fn q1_display() {
        let q = q1_form();
        assert_eq!(q.m[0][1], R1Elem::T);
        assert_eq!(q.m[1][0], -R1Elem::T);
        assert_eq!(q.m[2][2], R1Elem::ONE);
        assert!(q.is_hermitian());
        let q0 = q_prime().map(|x| reduce_scalar(x).level0());
        assert_eq!(q0, R1Mat::diag([R1Elem::ZERO, R1Elem::ZERO, R1Elem::ONE]));
    }

    #[test]
    fn scalars_are_all_units() {
        let s = scalar_image();
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|x| x.is_unit()));
        assert_eq!(s[0].conj(), s[0]);
    }
}

//! The half-lattice `𝕃 = Z + (λ/2)Z`, the quadratic form `F(a, b) = v*Qv`
//! on `𝕃³`, and the set `V` of candidate columns.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cmsz_generators::tau;
use crate::error::{Error, Result};
use crate::exact_ring::QuadInt;
use crate::hermitian_core::{charpoly, eval_poly, q_form, rat, sesquilinear, QuadMat};

/// `x_i = a_i + (λ/2)·b_i` for `i = 1, 2, 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfLatticeVec {
    pub a: [i64; 3],
    pub b: [i64; 3],
}

impl HalfLatticeVec {
    pub const fn new(a: [i64; 3], b: [i64; 3]) -> Self {
        HalfLatticeVec { a, b }
    }

    /// Coordinates in the order `(a₁, a₂, a₃, b₁, b₂, b₃)`.
    pub fn coords(&self) -> [i64; 6] {
        [self.a[0], self.a[1], self.a[2], self.b[0], self.b[1], self.b[2]]
    }

    pub fn from_coords(y: [i64; 6]) -> Self {
        HalfLatticeVec::new([y[0], y[1], y[2]], [y[3], y[4], y[5]])
    }

    pub fn to_quad(&self) -> [QuadInt; 3] {
        std::array::from_fn(|i| QuadInt::new(2 * self.a[i], self.b[i], 1))
    }

    /// The inverse of [`HalfLatticeVec::to_quad`] on `𝕃³`.
    pub fn from_quad(v: &[QuadInt; 3]) -> Option<Self> {
        let mut a = [0; 3];
        let mut b = [0; 3];
        for i in 0..3 {
            let (ai, bi) = half_lattice_coords(&v[i])?;
            a[i] = ai;
            b[i] = bi;
        }
        Some(HalfLatticeVec { a, b })
    }

    pub fn neg(&self) -> Self {
        HalfLatticeVec::new(self.a.map(|x| -x), self.b.map(|x| -x))
    }
}

impl fmt::Display for HalfLatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..3)
            .map(|i| match (self.a[i], self.b[i]) {
                (a, 0) => a.to_string(),
                (0, b) => format!("{b}*l/2"),
                (a, b) => format!("{a}{b:+}*l/2"),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `(a, b)` with `x = a + (λ/2)b`, when `x ∈ 𝕃`.
pub fn half_lattice_coords(x: &QuadInt) -> Option<(i64, i64)> {
    let (a, b, e) = x.as_small()?;
    match e {
        0 => Some((a, 2 * b)),
        1 if a % 2 == 0 => Some((a / 2, b)),
        _ => None,
    }
}

pub fn in_half_lattice(x: &QuadInt) -> bool {
    half_lattice_coords(x).is_some()
}

/// `Q'` evaluated at the six coordinates: `Σ y_i² − Σ_{i<j} |y_i y_j|`.
pub fn f_prime(y: [i64; 6]) -> i64 {
    let sq: i64 = y.iter().map(|v| v * v).sum();
    let mut cross = 0;
    for i in 0..6 {
        for j in i + 1..6 {
            cross += (y[i] * y[j]).abs();
        }
    }
    sq - cross
}

/// The symmetric `6×6` Gram matrix of `F` on the coordinates
/// `(a₁, a₂, a₃, b₁, b₂, b₃)`, assembled entrywise from `Q`.
pub fn gram_f() -> [[BigRational; 6]; 6] {
    let q = q_form();
    let basis = |k: usize| -> [QuadInt; 3] {
        std::array::from_fn(|i| {
            if i != k % 3 {
                QuadInt::zero()
            } else if k < 3 {
                QuadInt::one()
            } else {
                QuadInt::half_lambda()
            }
        })
    };
    std::array::from_fn(|k| {
        std::array::from_fn(|l| {
            // The real part of `e_k* Q e_l`.
            let s = sesquilinear(&q, &basis(k), &basis(l));
            let re = s.clone() + crate::scalar::InvolutiveRing::conj(&s);
            re.to_rational().expect("trace is rational") / rat(2, 1)
        })
    })
}

/// `F(a, b) = yᵀ G y` with `G` from [`gram_f`].
pub fn quadratic_form_f(y: [i64; 6]) -> BigRational {
    let g = gram_f();
    let mut acc = BigRational::zero();
    for k in 0..6 {
        for l in 0..6 {
            acc += g[k][l].clone() * rat(y[k] * y[l], 1);
        }
    }
    acc
}

/// `v*Qv` computed directly in `K`.
pub fn norm_q(v: &HalfLatticeVec) -> BigRational {
    let x = v.to_quad();
    sesquilinear(&q_form(), &x, &x)
        .to_rational()
        .expect("Hermitian value is rational")
}

#[derive(Clone, Debug)]
pub struct EigenBound {
    /// Coefficients of `f = det(t − Q)`, highest degree first.
    pub charpoly: [BigRational; 4],
    pub bound: BigRational,
    pub f_at_bound: BigRational,
    pub f_at_two: BigRational,
    pub f_at_zero: BigRational,
    /// `f′(bound) > 0` and `f″ < 0` on `[0, bound]`, so `f′ > 0` there.
    pub increasing: bool,
    /// The coefficients alternate in sign, so `f` has no root `≤ 0`.
    pub no_nonpositive_root: bool,
}

impl EigenBound {
    pub fn passed(&self) -> bool {
        self.f_at_bound.is_negative()
            && self.f_at_two.is_positive()
            && self.increasing
            && self.no_nonpositive_root
    }
}

/// Certifies that every eigenvalue of `Q` exceeds `48/25` using exact signs.
pub fn eigen_bound_certificate() -> Result<EigenBound> {
    let cp = charpoly(&q_form())?;
    let bound = rat(48, 25);
    let d1 = [cp[0].clone() * rat(3, 1), cp[1].clone() * rat(2, 1), cp[2].clone()];
    let d2 = [cp[0].clone() * rat(6, 1), cp[1].clone() * rat(2, 1)];
    let increasing = eval_poly(&d1, &bound).is_positive()
        && eval_poly(&d2, &BigRational::zero()).is_negative()
        && eval_poly(&d2, &bound).is_negative();
    let no_nonpositive_root = cp
        .iter()
        .enumerate()
        .all(|(i, c)| if i % 2 == 0 { c.is_positive() } else { c.is_negative() });
    Ok(EigenBound {
        f_at_bound: eval_poly(&cp, &bound),
        f_at_two: eval_poly(&cp, &rat(2, 1)),
        f_at_zero: eval_poly(&cp, &BigRational::zero()),
        charpoly: cp,
        bound,
        increasing,
        no_nonpositive_root,
    })
}

/// The six matrices `±τ^i`.
pub fn g2() -> Vec<QuadMat> {
    let t = tau();
    let t2 = &t * &t;
    let pos = [QuadMat::identity(), t, t2];
    let mut out: Vec<QuadMat> = pos.iter().cloned().collect();
    out.extend(pos.iter().map(|m| -m));
    out
}

/// The seeds whose `±τ^i`-orbits make up `V`.
pub const SEEDS: [HalfLatticeVec; 4] = [
    HalfLatticeVec::new([0, 1, 0], [1, 0, 0]),
    HalfLatticeVec::new([0, 0, 1], [0, 0, 0]),
    HalfLatticeVec::new([0, 1, 1], [0, 0, 0]),
    HalfLatticeVec::new([-1, -1, 0], [0, 0, 0]),
];

/// Membership in `V` straight from its definition.
pub fn in_v(v: &HalfLatticeVec) -> bool {
    if norm_q(v) != rat(10, 1) {
        return false;
    }
    // v ∈ (λ/2)Z³ exactly when every a_i vanishes.
    if v.a == [0, 0, 0] {
        return false;
    }
    let t = tau();
    let x = v.to_quad();
    let Some(ti) = t.inverse() else { return false };
    t.mul_vec(&x).iter().all(in_half_lattice) && ti.mul_vec(&x).iter().all(in_half_lattice)
}

/// Box candidates in lexicographic order of `(a₁, b₁, a₂, b₂, a₃, b₃)`.
fn box_candidates(bound: i64, b3_zero: bool) -> impl Iterator<Item = HalfLatticeVec> {
    let w = 2 * bound + 1;
    let last = if b3_zero { 1 } else { w };
    (0..w.pow(5) * last).map(move |mut n| {
        let mut d = [0i64; 6];
        d[5] = if b3_zero { 0 } else { n % w - bound };
        n /= last;
        for k in (0..5).rev() {
            d[k] = n % w - bound;
            n /= w;
        }
        HalfLatticeVec::new([d[0], d[2], d[4]], [d[1], d[3], d[5]])
    })
}

#[derive(Clone, Debug)]
pub struct VEnumeration {
    /// `V` from the pruned box `|a_i|, |b_i| ≤ 1`, `b₃ = 0`.
    pub v: BTreeSet<HalfLatticeVec>,
    pub pruned_candidates: usize,
    /// `V` from the coarse box `Σ(a_i² + b_i²) ≤ 6` with no pruning.
    pub coarse: BTreeSet<HalfLatticeVec>,
    /// Union of the `±τ^i`-orbits of [`SEEDS`].
    pub orbits: BTreeSet<HalfLatticeVec>,
    /// Candidates of the coarse box with some coordinate of size 2 and
    /// `F = 10` (none are expected).
    pub large_hits: usize,
}

impl VEnumeration {
    pub fn routes_agree(&self) -> bool {
        self.v == self.coarse && self.v == self.orbits
    }
}

fn orbit_union(seeds: &[HalfLatticeVec]) -> Result<BTreeSet<HalfLatticeVec>> {
    let mut out = BTreeSet::new();
    for s in seeds {
        let x = s.to_quad();
        for g in g2() {
            let y = HalfLatticeVec::from_quad(&g.mul_vec(&x))
                .ok_or_else(|| Error::Invalid(format!("orbit of {s} leaves the half-lattice")))?;
            out.insert(y);
        }
    }
    Ok(out)
}

/// Enumerates `V` by two independent box searches and by the seed orbits.
pub fn enumerate_v() -> Result<VEnumeration> {
    let pruned: Vec<HalfLatticeVec> = box_candidates(1, true)
        .filter(|v| v.a != [0, 0, 0])
        .collect();
    let v: BTreeSet<_> = pruned.iter().copied().filter(in_v).collect();
    let mut coarse = BTreeSet::new();
    let mut large_hits = 0;
    for c in box_candidates(2, false) {
        let y = c.coords();
        if y.iter().map(|t| t * t).sum::<i64>() > 6 {
            continue;
        }
        if y.iter().any(|t| t.abs() == 2) && quadratic_form_f(y) == rat(10, 1) {
            large_hits += 1;
        }
        if in_v(&c) {
            coarse.insert(c);
        }
    }
    let en = VEnumeration {
        v,
        pruned_candidates: pruned.len(),
        coarse,
        orbits: orbit_union(&SEEDS)?,
        large_hits,
    };
    if en.v.len() != 24 {
        return Err(Error::CountMismatch {
            what: "V".into(),
            expected: 24,
            found: en.v.len(),
        });
    }
    Ok(en)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_prime_values() {
        assert_eq!(f_prime([2, 1, 1, 0, 0, 0]), 1);
        assert_eq!(f_prime([2, 1, 0, 0, 0, 0]), 3);
        assert_eq!(f_prime([2, 0, 0, 0, 0, 0]), 4);
    }

    #[test]
    fn f_on_unit_vectors() {
        assert_eq!(quadratic_form_f([1, 0, 0, 0, 0, 0]), rat(10, 1));
        assert_eq!(quadratic_form_f([0, 0, 0, 1, 0, 0]), rat(10, 1));
    }

    #[test]
    fn eigen_bound_signs() {
        let e = eigen_bound_certificate().unwrap();
        assert!(e.passed());
        assert_eq!(e.f_at_two, rat(8, 1));
        assert_eq!(e.f_at_zero, rat(-300, 1));
        assert!(e.f_at_bound < BigRational::zero());
    }

    #[test]
    fn half_lattice_round_trip() {
        let v = HalfLatticeVec::new([1, -1, 0], [1, 0, -1]);
        assert_eq!(HalfLatticeVec::from_quad(&v.to_quad()), Some(v));
        assert!(!in_half_lattice(&QuadInt::new(1, 0, 1)));
        assert!(in_half_lattice(&QuadInt::lambda_bar()));
    }
}

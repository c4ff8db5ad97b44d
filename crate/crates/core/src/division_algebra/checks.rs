//! Exact checks on `L`, `D`, the involutions, `b`, `ψ` and `O_D`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::exact_ring::{Quad, QuadInt};
use crate::hermitian_core::{q_form, rat, RingMat3};

use super::algebra::{mu, DElem};
use super::cubic::Cubic;

pub type KElem = Quad<BigRational>;
pub type LElem = Cubic<BigRational>;
pub type DElemQ = DElem<BigRational>;

/// Seed of the random samples in the embedding and involution checks.
pub const SAMPLE_SEED: u64 = 0x5eed;
pub const SAMPLE_PAIRS: usize = 1000;

fn k(n: i64) -> KElem {
    KElem::from_i64(n)
}

/// A random element with integer coordinates in `[-bound, bound]`.
pub fn random_d(rng: &mut impl Rng, bound: i64) -> DElemQ {
    let y: [BigRational; 18] = std::array::from_fn(|_| rat(rng.gen_range(-bound..=bound), 1));
    DElemQ::from_coords(&y)
}

/// 2-adic valuation of a nonzero rational.
pub fn nu2(x: &BigRational) -> Option<i64> {
    let n = x.numer().trailing_zeros()? as i64;
    let d = x.denom().trailing_zeros()? as i64;
    Some(n - d)
}

/// Leading principal minors by fraction-exact elimination; stops at the
/// first vanishing pivot.
pub fn leading_minors(mut m: Vec<Vec<BigRational>>) -> Vec<BigRational> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    let mut acc = BigRational::one();
    for i in 0..n {
        let p = m[i][i].clone();
        acc *= p.clone();
        out.push(acc.clone());
        if p.is_zero() {
            break;
        }
        for r in i + 1..n {
            let f = m[r][i].clone() / p.clone();
            if f.is_zero() {
                continue;
            }
            for c in i..n {
                let v = m[i][c].clone() * f.clone();
                m[r][c] -= v;
            }
        }
    }
    out
}

/// Determinant with row pivoting.
pub fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for i in 0..n {
        let Some(p) = (i..n).find(|&r| !m[r][i].is_zero()) else {
            return BigRational::zero();
        };
        if p != i {
            m.swap(p, i);
            det = -det;
        }
        let piv = m[i][i].clone();
        det *= piv.clone();
        for r in i + 1..n {
            let f = m[r][i].clone() / piv.clone();
            if f.is_zero() {
                continue;
            }
            for c in i..n {
                let v = m[i][c].clone() * f.clone();
                m[r][c] -= v;
            }
        }
    }
    det
}

#[derive(Clone, Debug)]
pub struct SigmaCheck {
    pub sigma_eta: LElem,
    pub order_three: bool,
    pub fixes_k: bool,
    pub minpoly_preserved: bool,
}

impl SigmaCheck {
    pub fn passed(&self) -> bool {
        let e = LElem::eta();
        self.sigma_eta == e.clone() * e - LElem::from_i64(2)
            && self.order_three
            && self.fixes_k
            && self.minpoly_preserved
    }
}

pub fn sigma_check() -> SigmaCheck {
    let e = LElem::eta();
    let minpoly = |x: &LElem| x.clone() * x.clone() * x.clone() - x.clone() * LElem::from_i64(3) + LElem::one();
    let l = LElem::from_k(KElem::lambda());
    let generic = LElem::new(k(1), KElem::lambda(), k(-2));
    SigmaCheck {
        sigma_eta: e.sigma(),
        order_three: e.sigma_pow(3) == e && e.sigma() != e && generic.sigma().sigma().sigma() == generic,
        fixes_k: l.sigma() == l,
        minpoly_preserved: minpoly(&e).is_zero() && minpoly(&e.sigma()).is_zero(),
    }
}

#[derive(Clone, Debug)]
pub struct EmbedCheck {
    pub pairs: usize,
    pub multiplicative_failures: usize,
    pub associativity_failures: usize,
    /// Reduced norms of the samples that fail to land in `K`.
    pub nrd_outside_k: usize,
    pub pi_cubed_is_mu: bool,
}

impl EmbedCheck {
    pub fn passed(&self) -> bool {
        self.multiplicative_failures == 0
            && self.associativity_failures == 0
            && self.nrd_outside_k == 0
            && self.pi_cubed_is_mu
    }
}

pub fn embed_check(pairs: usize) -> EmbedCheck {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let mut mult = 0;
    let mut assoc = 0;
    let mut outside = 0;
    for _ in 0..pairs {
        let x = random_d(&mut rng, 3);
        let y = random_d(&mut rng, 3);
        let z = random_d(&mut rng, 3);
        let xy = x.clone() * y.clone();
        if xy.embed() != &x.embed() * &y.embed() {
            mult += 1;
        }
        if xy * z.clone() != x.clone() * (y * z) {
            assoc += 1;
        }
        if x.nrd().is_none() {
            outside += 1;
        }
    }
    let p = DElemQ::pi();
    EmbedCheck {
        pairs,
        multiplicative_failures: mult,
        associativity_failures: assoc,
        nrd_outside_k: outside,
        pi_cubed_is_mu: p.clone() * p.clone() * p == DElemQ::from_k(mu()),
    }
}

#[derive(Clone, Debug)]
pub struct StarCheck {
    pub pairs: usize,
    pub involutive_failures: usize,
    pub anti_multiplicative_failures: usize,
    pub pi_star_pi: DElemQ,
    /// Leading principal minors of `(x, y) ↦ tr_{D/Q}(x·y*)` on the basis
    /// `λ^a η^b Π^c`.
    pub gram_minors: Vec<BigRational>,
}

impl StarCheck {
    pub fn positive_definite(&self) -> bool {
        self.gram_minors.len() == 18 && self.gram_minors.iter().all(Signed::is_positive)
    }

    pub fn passed(&self) -> bool {
        self.involutive_failures == 0
            && self.anti_multiplicative_failures == 0
            && self.pi_star_pi == DElemQ::one()
            && self.positive_definite()
    }
}

pub fn star_check(pairs: usize) -> StarCheck {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED ^ 1);
    let mut inv = 0;
    let mut anti = 0;
    for _ in 0..pairs {
        let x = random_d(&mut rng, 3);
        let y = random_d(&mut rng, 3);
        if x.star().star() != x {
            inv += 1;
        }
        if (x.clone() * y.clone()).star() != y.star() * x.star() {
            anti += 1;
        }
    }
    let basis: Vec<DElemQ> = (0..18).map(DElemQ::basis).collect();
    let stars: Vec<DElemQ> = basis.iter().map(DElemQ::star).collect();
    let gram = basis
        .iter()
        .map(|x| stars.iter().map(|ys| (x.clone() * ys.clone()).trace_q()).collect())
        .collect();
    let p = DElemQ::pi();
    StarCheck {
        pairs,
        involutive_failures: inv,
        anti_multiplicative_failures: anti,
        pi_star_pi: p.star() * p,
        gram_minors: leading_minors(gram),
    }
}

/// `b = (λ̄ − λ) − λ̄Π + λ̄Π²`.
pub fn b_element() -> DElemQ {
    let l = KElem::lambda();
    let lb = KElem::lambda_bar();
    DElemQ::new(
        LElem::from_k(lb.clone() - l),
        LElem::from_k(-lb.clone()),
        LElem::from_k(lb),
    )
}

/// `x ∈ K` as an element of `O_K[1/2]`, when its denominators are powers of 2.
pub fn k_to_quad_int(x: &KElem) -> Option<QuadInt> {
    let d = x.a.denom().lcm_with(x.b.denom());
    let e = d.trailing_zeros().unwrap_or(0);
    if d != (BigInt::one() << e) {
        return None;
    }
    let a = x.a.numer() * (&d / x.a.denom());
    let b = x.b.numer() * (&d / x.b.denom());
    Some(QuadInt::new(a, b, e as u32))
}

trait Lcm {
    fn lcm_with(&self, other: &BigInt) -> BigInt;
}

impl Lcm for BigInt {
    fn lcm_with(&self, other: &BigInt) -> BigInt {
        num_integer::Integer::lcm(self, other)
    }
}

#[derive(Clone, Debug)]
pub struct BCheck {
    pub b: DElemQ,
    pub b_star_plus_b: DElemQ,
    pub nrd_b: KElem,
    pub expected: KElem,
    pub val_p: Option<i64>,
    pub val_pbar: Option<i64>,
    /// `★★ = id` on the random samples.
    pub star2_failures: usize,
    /// `tr_{D/Q}(b)` and `3·Tr_{K/Q}(Trd b)`.
    pub trace_q: BigRational,
    pub trace_via_trd: BigRational,
}

impl BCheck {
    pub fn passed(&self) -> bool {
        self.b_star_plus_b.is_zero()
            && self.nrd_b == self.expected
            && self.val_p == Some(0)
            && self.val_pbar == Some(0)
            && self.star2_failures == 0
            && self.trace_q == self.trace_via_trd
    }
}

/// `α ↦ b⁻¹α*b`.
pub fn involution_b(alpha: &DElemQ, b_inv: &DElemQ, b: &DElemQ) -> DElemQ {
    b_inv.clone() * alpha.star() * b.clone()
}

pub fn b_checks(samples: usize) -> BCheck {
    let b = b_element();
    let nrd = b.nrd().expect("reduced norm lies in K");
    let q = k_to_quad_int(&nrd);
    let b_inv = b.inverse().expect("b is invertible");
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED ^ 2);
    let mut star2 = 0;
    for _ in 0..samples {
        let x = random_d(&mut rng, 3);
        if involution_b(&involution_b(&x, &b_inv, &b), &b_inv, &b) != x {
            star2 += 1;
        }
    }
    BCheck {
        b_star_plus_b: b.star() + b.clone(),
        expected: (KElem::lambda_bar() - KElem::lambda()).scale(&rat(-7, 1)),
        val_p: q.as_ref().and_then(|x| x.val_p().ok()),
        val_pbar: q.as_ref().and_then(|x| x.val_pbar().ok()),
        star2_failures: star2,
        trace_q: b.trace_q(),
        trace_via_trd: b.trd().expect("reduced trace lies in K").trace() * rat(3, 1),
        nrd_b: nrd,
        b,
    }
}

/// `ψ(α, β) = tr_{D/Q}(α*·b·β)`.
pub fn psi(alpha: &DElemQ, beta: &DElemQ) -> BigRational {
    (alpha.star() * b_element() * beta.clone()).trace_q()
}

/// The `Z`-basis `λ^a η^b`, `λ^a η^b λ̄Π`, `λ^a η^b λ̄Π²` of `O_D`, indexed
/// `6c + 2b + a`.
pub fn order_basis() -> Vec<DElemQ> {
    (0..18)
        .map(|k| {
            let lb = KElem::lambda_bar();
            let c = k / 6;
            let z = DElemQ::basis(k);
            if c == 0 {
                z
            } else {
                z.scale(&lb)
            }
        })
        .collect()
}

/// Integer coordinates on [`order_basis`], when `x ∈ O_D`.
pub fn order_coords(x: &DElemQ) -> Option<[BigInt; 18]> {
    let lb_inv = KElem::lambda_bar().inverse()?;
    let y = DElemQ::new(x.x[0].clone(), x.x[1].scale(&lb_inv), x.x[2].scale(&lb_inv)).coords();
    let mut out: [BigInt; 18] = std::array::from_fn(|_| BigInt::zero());
    for (o, v) in out.iter_mut().zip(y.iter()) {
        if !v.is_integer() {
            return None;
        }
        *o = v.to_integer();
    }
    Some(out)
}

#[derive(Clone, Debug)]
pub struct OrderCheck {
    /// `O_L = Z[λ, η]` is closed under multiplication.
    pub ol_closed: bool,
    /// First basis pair whose product leaves `O_D`.
    pub non_integral: Option<(usize, usize)>,
    pub psi_gram_det: BigRational,
    pub psi_alternating: bool,
}

impl OrderCheck {
    pub fn passed(&self) -> bool {
        self.ol_closed
            && self.non_integral.is_none()
            && self.psi_alternating
            && nu2(&self.psi_gram_det) == Some(0)
    }
}

pub fn order_and_pairing_checks() -> OrderCheck {
    let basis = order_basis();
    let ol_closed = (0..6).all(|i| (0..6).all(|j| order_coords(&(basis[i].clone() * basis[j].clone())).is_some()));
    let non_integral = (0..18)
        .flat_map(|i| (0..18).map(move |j| (i, j)))
        .find(|&(i, j)| order_coords(&(basis[i].clone() * basis[j].clone())).is_none());
    let stars: Vec<DElemQ> = basis.iter().map(DElemQ::star).collect();
    let b = b_element();
    let bb: Vec<DElemQ> = basis.iter().map(|y| b.clone() * y.clone()).collect();
    let gram: Vec<Vec<BigRational>> = stars
        .iter()
        .map(|xs| bb.iter().map(|y| (xs.clone() * y.clone()).trace_q()).collect())
        .collect();
    let psi_alternating = (0..18).all(|i| (0..18).all(|j| gram[i][j] == -gram[j][i].clone()));
    OrderCheck {
        ol_closed,
        non_integral,
        psi_gram_det: determinant(gram),
        psi_alternating,
    }
}

fn is_square(x: &BigRational) -> bool {
    let sq = |n: &BigInt| !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    };
    sq(x.numer()) && sq(x.denom())
}

#[derive(Clone, Debug)]
pub struct NormalizedDet {
    pub label: &'static str,
    pub det: KElem,
    /// `None` when the determinant is not rational.
    pub rational: Option<BigRational>,
    pub is_square: bool,
    /// Norms from `K` are positive; squares are norms. `None` if undecided.
    pub is_norm: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct DetSquareCheck {
    pub det_3q: BigRational,
    pub det_3q_square: bool,
    pub b_side: Vec<NormalizedDet>,
}

impl DetSquareCheck {
    pub fn passed(&self) -> bool {
        self.det_3q == rat(8100, 1) && self.det_3q_square
    }
}

pub fn det_square_check() -> DetSquareCheck {
    let det_3q = q_form()
        .scale(&QuadInt::from_int(3))
        .det()
        .to_rational()
        .expect("Hermitian determinant is rational");
    let m7b = b_element().scale(&k(-7));
    let d = KElem::lambda_bar() - KElem::lambda();
    let cases = [
        ("-7b", m7b.clone()),
        ("(lb-l)^-1*(-7b)", m7b.scale(&d.inverse().expect("nonzero"))),
        ("(lb-l)*(-7b)", m7b.scale(&d)),
    ];
    let b_side = cases
        .into_iter()
        .map(|(label, x)| {
            let det = x.nrd().expect("reduced norm lies in K");
            let rational = det.rational();
            let is_square = rational.as_ref().is_some_and(is_square);
            let is_norm = match &rational {
                Some(r) if !r.is_positive() => Some(false),
                Some(_) if is_square => Some(true),
                _ => None,
            };
            NormalizedDet {
                label,
                det,
                rational,
                is_square,
                is_norm,
            }
        })
        .collect();
    DetSquareCheck {
        det_3q_square: is_square(&det_3q),
        det_3q,
        b_side,
    }
}

/// `γ★γ = b⁻¹γ*bγ` when it is a nonzero rational scalar.
pub fn gstar_membership(gamma: &DElemQ) -> Option<BigRational> {
    if gamma.is_zero() {
        return None;
    }
    let b = b_element();
    let v = involution_b(gamma, &b.inverse()?, &b) * gamma.clone();
    v.in_k()?.rational().filter(|r| !r.is_zero())
}

/// The embedded matrix of an element, for reports.
pub fn embedded(x: &DElemQ) -> RingMat3<LElem> {
    x.embed()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_identities() {
        let r = b_checks(20);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn det_values() {
        let r = det_square_check();
        assert_eq!(r.det_3q, rat(8100, 1));
        assert_eq!(r.b_side[1].rational, Some(rat(-2401, 15)));
        assert_eq!(r.b_side[2].rational, Some(rat(540225, 1)));
        assert!(r.b_side[2].is_square);
        let d = KElem::lambda_bar() - KElem::lambda();
        assert_eq!(r.b_side[0].det, d.scale(&rat(2401, 1)));
    }

    #[test]
    fn gstar_examples() {
        assert_eq!(gstar_membership(&DElemQ::one()), Some(rat(1, 1)));
        assert_eq!(gstar_membership(&DElemQ::from_i64(3)), Some(rat(9, 1)));
        assert_eq!(gstar_membership(&DElemQ::zero()), None);
    }

    #[test]
    fn elimination_helpers() {
        let m = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        assert_eq!(leading_minors(m.clone()), vec![rat(2, 1), rat(5, 1)]);
        assert_eq!(determinant(m), rat(5, 1));
        let p = vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]];
        assert_eq!(determinant(p), rat(-1, 1));
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use cmsz_core::appendix_search::{norm_q, quadratic_form_f, HalfLatticeVec};
use cmsz_core::building::{act, label, label_cocycle, Vertex};
use cmsz_core::cmsz_generators::{rho, tau};
use cmsz_core::division_algebra::{involution_b, psi, b_element, DElemQ};
use cmsz_core::exact_ring::{embed_2adic, PadicConfig, QuadInt};
use cmsz_core::finite_ring::{q1_form, reduce_matrix, reduce_scalar, Level, R1Elem};
use cmsz_core::finite_unitary::unitary_factor;
use cmsz_core::hermitian_core::{q_form, rat, similitude_factor, QuadMat};
use cmsz_core::scalar::InvolutiveRing;

fn quad_int() -> impl Strategy<Value = QuadInt> {
    (-60i64..=60, -60i64..=60, 0u32..=3).prop_map(|(a, b, e)| QuadInt::new(a, b, e))
}

fn nonzero_quad_int() -> impl Strategy<Value = QuadInt> {
    quad_int().prop_filter("nonzero", |x| !x.is_zero())
}

/// Letters: ρ, ρ⁻¹, τ, τ⁻¹, 2, λ/2, −1.
fn letter(i: u8) -> QuadMat {
    match i {
        0 => rho(),
        1 => rho().inverse().unwrap(),
        2 => tau(),
        3 => tau().inverse().unwrap(),
        4 => QuadMat::scalar(QuadInt::from_int(2)),
        5 => QuadMat::scalar(QuadInt::half_lambda()),
        _ => QuadMat::scalar(QuadInt::from_int(-1)),
    }
}

fn word(max: usize) -> impl Strategy<Value = QuadMat> {
    prop::collection::vec(0u8..7, 0..=max)
        .prop_map(|w| w.iter().fold(QuadMat::identity(), |g, &l| &g * &letter(l)))
}

fn nu2(x: &BigRational) -> i64 {
    x.numer().trailing_zeros().unwrap() as i64 - x.denom().trailing_zeros().unwrap() as i64
}

fn d_elem() -> impl Strategy<Value = DElemQ> {
    prop::array::uniform18(-3i64..=3).prop_map(|y| DElemQ::from_coords(&y.map(|v| rat(v, 1))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conj_is_multiplicative(x in quad_int(), y in quad_int()) {
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
    }

    #[test]
    fn valuations_sum_to_norm_valuation(x in nonzero_quad_int()) {
        let n = x.norm();
        prop_assert_eq!(x.val_p().unwrap() + x.conj().val_p().unwrap(), nu2(&n));
    }

    #[test]
    fn c_ideal_membership(a in -60i64..=60, b in -60i64..=60) {
        let x = QuadInt::new(a, b, 0);
        let n = x.norm().to_integer();
        let in_c = x.in_c_ideal();
        prop_assert_eq!(in_c, reduce_scalar(&x).x0 == 0);
        if in_c {
            prop_assert!((n % BigInt::from(3)).is_zero());
        }
    }

    #[test]
    fn similitude_factor_is_multiplicative(g in word(5), h in word(5)) {
        let q = q_form();
        let cg = similitude_factor(&g, &q).unwrap();
        let ch = similitude_factor(&h, &q).unwrap();
        prop_assert_eq!(similitude_factor(&(&g * &h), &q).unwrap(), cg.clone() * ch);
        let nd = g.det().norm();
        prop_assert_eq!(nd, cg.clone() * cg.clone() * cg);
    }

    #[test]
    fn reduction_is_multiplicative(g in word(5), h in word(5)) {
        let lhs = reduce_matrix(&(&g * &h), Level::One);
        prop_assert_eq!(lhs, &reduce_matrix(&g, Level::One) * &reduce_matrix(&h, Level::One));
    }

    #[test]
    fn reduction_commutes_with_star(g in word(5)) {
        prop_assert_eq!(g.star().map(reduce_scalar), g.map(reduce_scalar).star());
    }

    #[test]
    fn reduced_similitudes_have_sign_factor(g in word(6)) {
        let c = unitary_factor(&reduce_matrix(&g, Level::One), &q1_form());
        prop_assert!(c == Some(R1Elem::ONE) || c == Some(-R1Elem::ONE));
    }

    #[test]
    fn quadratic_form_matches_hermitian_core(y in prop::array::uniform6(-3i64..=3)) {
        let v = HalfLatticeVec::from_coords(y);
        prop_assert_eq!(quadratic_form_f(y), norm_q(&v));
        prop_assert_eq!(quadratic_form_f(y) / rat(10, 1), expanded_tenth_of_f(y));
    }

    #[test]
    fn reduced_norm_lies_in_k(x in d_elem()) {
        prop_assert!(x.nrd().is_some());
    }

    #[test]
    fn psi_is_alternating(x in d_elem(), y in d_elem()) {
        prop_assert_eq!(psi(&x, &y), -psi(&y, &x));
    }

    #[test]
    fn b_involution_squares_to_identity(x in d_elem()) {
        let b = b_element();
        let bi = b.inverse().unwrap();
        prop_assert_eq!(involution_b(&involution_b(&x, &bi, &b), &bi, &b), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn embedding_is_a_ring_map(x in nonzero_quad_int(), y in nonzero_quad_int()) {
        let cfg = PadicConfig::default();
        let (ex, ey) = (embed_2adic(&x, cfg).unwrap(), embed_2adic(&y, cfg).unwrap());
        let prod = embed_2adic(&(x.clone() * y.clone()), cfg).unwrap();
        prop_assert!((ex * ey - prod).is_zero());
        if !(x.clone() + y.clone()).is_zero() {
            let sum = embed_2adic(&(x + y), cfg).unwrap();
            prop_assert!((ex + ey - sum).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn action_is_a_group_action(g in word(4), h in word(4)) {
        let cfg = PadicConfig::default();
        let base = Vertex::base();
        let hv = act(&h, &base, cfg).unwrap();
        prop_assert_eq!(act(&(&g * &h), &base, cfg).unwrap(), act(&g, &hv, cfg).unwrap());
        let c = label_cocycle(&g).unwrap();
        prop_assert_eq!(label(&act(&g, &hv, cfg).unwrap()), (label(&hv) + c) % 3);
    }

    #[test]
    fn scalars_act_trivially(h in word(4), a in -20i64..=20, b in -20i64..=20, e in 0u32..3) {
        let s = QuadInt::new(a, b, e);
        prop_assume!(!s.is_zero());
        let cfg = PadicConfig::default();
        let v = act(&h, &Vertex::base(), cfg).unwrap();
        prop_assert_eq!(act(&QuadMat::scalar(s), &v, cfg).unwrap(), v);
    }
}

/// `(1/10)F` as written out coefficient by coefficient.
fn expanded_tenth_of_f(y: [i64; 6]) -> BigRational {
    let [a1, a2, a3, b1, b2, b3] = y;
    let h = |n: i64| rat(n, 2);
    let q = |n: i64| rat(n, 4);
    let i = |n: i64| rat(n, 1);
    i(a1 * a1 + a2 * a2 + a3 * a3 + b1 * b1 + b2 * b2 + b3 * b3)
        - i(a1 * a2) - i(a2 * a3) + h(a3 * a1) - i(b1 * b2) - i(b2 * b3) + h(b3 * b1)
        + h(a1 * b1) + h(a1 * b2) - q(a1 * b3) - i(a2 * b1)
        + h(a2 * b2) + h(a2 * b3) + h(a3 * b1) - i(a3 * b2) + h(a3 * b3)
}

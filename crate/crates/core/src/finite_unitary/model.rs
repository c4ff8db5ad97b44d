//! The mod-3 image of the integral model and the words expressing the
//! special elements through the images of `ρ` and `τ`.

use crate::cmsz_generators::{rho, tau};
use crate::finite_ring::{reduce_matrix, scalar_image, Level, R1Mat};

use super::enumerate::{enumerate_u0, level0_image};
use super::group::{closure, commutator, conjugate, inverse, FiniteGroup};
use super::special::{mul_all, r1mat, Relation, SpecialElements};

pub const MODEL_ORDER: usize = 34_992;

/// Expected reductions of `ρ` and `τ`.
pub fn expected_rho_bar() -> R1Mat {
    r1mat([["0", "-1+t", "-t"], ["1-t", "-1-t", "1+t"], ["0", "-t", "1+t"]])
}

pub fn expected_tau_bar() -> R1Mat {
    r1mat([["1+t", "1-t", "1+t"], ["0", "1+t", "0"], ["0", "-t", "1+t"]])
}

pub fn rho_bar() -> R1Mat {
    reduce_matrix(&rho(), Level::One)
}

pub fn tau_bar() -> R1Mat {
    reduce_matrix(&tau(), Level::One)
}

pub fn scalar_matrices() -> Vec<R1Mat> {
    scalar_image().into_iter().map(R1Mat::scalar).collect()
}

#[derive(Clone, Debug)]
pub struct ModelImage {
    pub rho_bar: R1Mat,
    pub tau_bar: R1Mat,
    /// Generated by the images of `ρ`, `τ` and the scalars.
    pub image: FiniteGroup,
    /// Generated by `T`, `H`, `S`, `d₁d₂` and the scalars.
    pub described: FiniteGroup,
    pub level0: FiniteGroup,
    pub level0_is_u0: bool,
    pub words: Vec<Relation>,
}

impl ModelImage {
    pub fn descriptions_agree(&self) -> bool {
        self.image.same_elements(&self.described)
    }
}

pub fn described_generators(s: &SpecialElements) -> Vec<R1Mat> {
    let mut g = s.t_gens();
    g.extend(s.h_gens());
    g.extend(s.s_gens());
    g.push(s.d1d2());
    g.extend(scalar_matrices());
    g
}

fn word(statement: &str, lhs: &R1Mat, rhs: R1Mat) -> Relation {
    Relation {
        group: "words",
        statement: statement.to_string(),
        holds: *lhs == rhs,
    }
}

/// The word identities relating `ρ̄`, `τ̄` to the special elements, as
/// stated, followed by corrected forms where the statement fails.
pub fn word_identities(s: &SpecialElements, r: &R1Mat, t: &R1Mat) -> Vec<Relation> {
    let ri = inverse(r);
    let ti = inverse(t);
    let d12 = s.d1d2();
    let mut out = vec![
        word("rho = expected matrix", r, expected_rho_bar()),
        word("tau = expected matrix", t, expected_tau_bar()),
        word(
            "rho = b1^-1 c2 w u^-1 (d1d2)^-1",
            r,
            mul_all(&[&inverse(&s.b1), &s.c2, &s.w, &inverse(&s.u), &inverse(&d12)]),
        ),
        word(
            "tau = z^-1 c1 u (d1d2)^-1",
            t,
            mul_all(&[&inverse(&s.z), &s.c1, &s.u, &inverse(&d12)]),
        ),
        word("z = rho^-3", &s.z, ri.pow(3)),
    ];
    let x = mul_all(&[t, &ri, &ti, &ri]);
    out.push(word("w = rho^4 (tau rho^-1 tau^-1 rho^-1)^2", &s.w, &r.pow(4) * &x.pow(2)));
    let a = mul_all(&[t, r, t, r, r, t, r, &ti]);
    let b = mul_all(&[r, t, r, &ti, r, t, r, t]);
    out.push(word(
        "b1 = [tau rho tau rho^2 tau rho tau^-1, rho tau rho tau^-1 rho tau rho tau]",
        &s.b1,
        commutator(&a, &b),
    ));
    out.push(word("b2 = w b1 w^-1", &s.b2, mul_all(&[&s.w, &s.b1, &inverse(&s.w)])));
    let inner = mul_all(&[&ti, r, t, r, &ti]);
    let rtr = mul_all(&[r, t, r]);
    let tr = t * r;
    out.push(word(
        "c1 = rho^-3 (tau^-1 rho tau rho tau^-1)^((rho tau rho)^-1) (tau rho)^-2 b1 b2^-1",
        &s.c1,
        mul_all(&[
            &ri.pow(3),
            &conjugate(&inner, &inverse(&rtr)),
            &inverse(&tr).pow(2),
            &s.b1,
            &inverse(&s.b2),
        ]),
    ));
    out.push(word("c2 = w c1 w^-1", &s.c2, mul_all(&[&s.w, &s.c1, &inverse(&s.w)])));
    out.push(word(
        "u = tau rho^-1 tau^-1 rho^-1 tau^-1 b1^-1 b2 c2^-1 w^2",
        &s.u,
        mul_all(&[
            t,
            &ri,
            &ti,
            &ri,
            &ti,
            &inverse(&s.b1),
            &s.b2,
            &inverse(&s.c2),
            &s.w,
            &s.w,
        ]),
    ));
    out
}

/// Corrected form of the `b₁` word: the commutator with its arguments
/// swapped.
pub fn corrected_b1_word(s: &SpecialElements, r: &R1Mat, t: &R1Mat) -> Vec<Relation> {
    let ti = inverse(t);
    let a = mul_all(&[t, r, t, r, r, t, r, &ti]);
    let b = mul_all(&[r, t, r, &ti, r, t, r, t]);
    vec![
        word(
            "b1 = [rho tau rho tau^-1 rho tau rho tau, tau rho tau rho^2 tau rho tau^-1]",
            &s.b1,
            commutator(&b, &a),
        ),
        word(
            "b1^-1 = [tau rho tau rho^2 tau rho tau^-1, rho tau rho tau^-1 rho tau rho tau]",
            &inverse(&s.b1),
            commutator(&a, &b),
        ),
    ]
}

pub fn model_image(s: &SpecialElements) -> ModelImage {
    let r = rho_bar();
    let t = tau_bar();
    let mut gens = vec![r.clone(), t.clone()];
    gens.extend(scalar_matrices());
    let image = closure(&gens);
    let described = closure(&described_generators(s));
    let level0 = level0_image(&image);
    let level0_is_u0 = level0.same_elements(&enumerate_u0());
    let words = word_identities(s, &r, &t);
    ModelImage {
        rho_bar: r,
        tau_bar: t,
        image,
        described,
        level0,
        level0_is_u0,
        words,
    }
}

//! The groups `U′₀`, `U′₁` and `U′₁⁺`, each computed two ways.

use crate::error::{Error, Result};
use crate::finite_ring::{q1_form, R1Elem, R1Mat};

use super::group::{closure, commutator, conjugate, key, unitary_factor, FiniteGroup, Key};
use super::special::SpecialElements;

pub const U1_ORDER: usize = 944_784;
pub const U1_PLUS_ORDER: usize = 472_392;
pub const U0_ORDER: usize = 432;

fn f3(x: i64) -> R1Elem {
    R1Elem::new(x, 0)
}

/// `SL₂(F₃)` as integer matrices with entries in `0..3`.
pub fn sl2_f3() -> Vec<[[i64; 2]; 2]> {
    let mut out = Vec::new();
    for a in 0..3i64 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    if (a * d - b * c).rem_euclid(3) == 1 {
                        out.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}

/// The explicit block description of `U′₀`: `[[A, B], [0, ±1]]` with
/// `A ∈ SL₂(F₃)`.
pub fn enumerate_u0() -> FiniteGroup {
    let mut keys = Vec::new();
    for a in sl2_f3() {
        for b0 in 0..3 {
            for b1 in 0..3 {
                for d in [1, -1] {
                    let m = R1Mat::new([
                        [f3(a[0][0]), f3(a[0][1]), f3(b0)],
                        [f3(a[1][0]), f3(a[1][1]), f3(b1)],
                        [f3(0), f3(0), f3(d)],
                    ]);
                    keys.push(key(&m));
                }
            }
        }
    }
    FiniteGroup::from_keys(keys, Vec::new())
}

/// Size of the full similitude group of the degenerate form `diag(0,0,1)`
/// over `F₃`, by brute force over `GL₃(F₃)`.
pub fn degenerate_form_group_order() -> usize {
    let q0 = R1Mat::diag([R1Elem::ZERO, R1Elem::ZERO, R1Elem::ONE]);
    let mut n = 0;
    for code in 0..3u32.pow(9) {
        let mut c = code;
        let m = R1Mat::from_fn(|_, _| {
            let v = f3(i64::from(c % 3));
            c /= 3;
            v
        });
        if m.det().is_unit() && unitary_factor(&m, &q0).is_some() {
            n += 1;
        }
    }
    n
}

/// The symplectic matrix used in the block description of `U′₁`.
pub const J: [[i64; 2]; 2] = [[0, -1], [1, 0]];

/// `U′₁` from its block description: `[[A, B], [tC, d]]` with
/// `A mod t ∈ SL₂(F₃)` and `ᵗC = −d⁻¹ J A⁻¹ B mod t`. Every candidate is
/// checked against `Q′₁`; the count of failures is returned alongside.
pub fn enumerate_u1_parametrized() -> (FiniteGroup, usize) {
    let q1 = q1_form();
    let mut keys: Vec<Key> = Vec::with_capacity(U1_ORDER);
    let mut rejected = 0;
    for a0 in sl2_f3() {
        // inverse of a determinant-one matrix
        let ai = [[a0[1][1], -a0[0][1]], [-a0[1][0], a0[0][0]]];
        for a1 in 0..81i64 {
            let a1m = [[a1 % 3, (a1 / 3) % 3], [(a1 / 9) % 3, (a1 / 27) % 3]];
            for bcode in 0..81u32 {
                let b = [
                    R1Elem::from_index(bcode % 9),
                    R1Elem::from_index(bcode / 9),
                ];
                let b0 = [i64::from(b[0].x0), i64::from(b[1].x0)];
                for d in R1Elem::units() {
                    let dinv0 = i64::from(d.x0); // x0⁻¹ = x0 in F₃
                    let aib = [
                        ai[0][0] * b0[0] + ai[0][1] * b0[1],
                        ai[1][0] * b0[0] + ai[1][1] * b0[1],
                    ];
                    let jaib = [
                        J[0][0] * aib[0] + J[0][1] * aib[1],
                        J[1][0] * aib[0] + J[1][1] * aib[1],
                    ];
                    let c = [-dinv0 * jaib[0], -dinv0 * jaib[1]];
                    let g = R1Mat::new([
                        [R1Elem::new(a0[0][0], a1m[0][0]), R1Elem::new(a0[0][1], a1m[0][1]), b[0]],
                        [R1Elem::new(a0[1][0], a1m[1][0]), R1Elem::new(a0[1][1], a1m[1][1]), b[1]],
                        [R1Elem::new(0, c[0]), R1Elem::new(0, c[1]), d],
                    ]);
                    if unitary_factor(&g, &q1).is_some() {
                        keys.push(key(&g));
                    } else {
                        rejected += 1;
                    }
                }
            }
        }
    }
    (FiniteGroup::from_keys(keys, Vec::new()), rejected)
}

#[derive(Clone, Debug)]
pub struct U1Enumeration {
    pub u1: FiniteGroup,
    pub u1_plus: FiniteGroup,
    pub parametrized: FiniteGroup,
    pub rejected_candidates: usize,
    pub routes_agree: bool,
    /// Elements of `U′₁` with `det ≡ 1 (mod t)` are exactly `U′₁⁺`.
    pub det_kernel_is_plus: bool,
    /// Every element satisfies `g* Q′₁ g = ±Q′₁`.
    pub all_unitary: bool,
}

/// Both routes to `U′₁`; fails when they disagree.
pub fn enumerate_u1(s: &SpecialElements) -> Result<U1Enumeration> {
    let mut gens = s.t_gens();
    gens.extend(s.h_gens());
    gens.extend(s.m_gens());
    gens.extend(s.s_gens());
    let u1_plus = closure(&gens);
    let minus = R1Mat::scalar(-R1Elem::ONE);
    let mut keys: Vec<Key> = u1_plus.keys().to_vec();
    keys.extend(u1_plus.matrices().map(|m| key(&(&minus * &m))));
    let mut all_gens = gens.clone();
    all_gens.push(minus);
    let u1 = FiniteGroup::from_keys(keys, all_gens);
    let (parametrized, rejected) = enumerate_u1_parametrized();
    let routes_agree = u1.same_elements(&parametrized);
    let q1 = q1_form();
    let all_unitary = u1.matrices().all(|m| unitary_factor(&m, &q1).is_some());
    let kernel: Vec<Key> = u1
        .matrices()
        .filter(|m| m.det().x0 == 1)
        .map(|m| key(&m))
        .collect();
    let det_kernel_is_plus = kernel.len() == u1_plus.order()
        && kernel.iter().all(|&k| u1_plus.contains_key(k));
    if !routes_agree {
        return Err(Error::CountMismatch {
            what: "U'1 generator closure vs block description".into(),
            expected: parametrized.order(),
            found: u1.order(),
        });
    }
    Ok(U1Enumeration {
        u1,
        u1_plus,
        parametrized,
        rejected_candidates: rejected,
        routes_agree,
        det_kernel_is_plus,
        all_unitary,
    })
}

/// The image of a group under reduction modulo `t`.
pub fn level0_image(g: &FiniteGroup) -> FiniteGroup {
    FiniteGroup::from_keys(
        g.matrices().map(|m| key(&m.map(|x| x.level0()))).collect(),
        Vec::new(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

fn check(name: &str, holds: bool, detail: String) -> StructureCheck {
    StructureCheck {
        name: name.into(),
        holds,
        detail,
    }
}

fn normalizes(s_gens: &[R1Mat], target: &FiniteGroup) -> bool {
    s_gens.iter().all(|s| {
        target
            .generators
            .iter()
            .all(|g| target.contains(&conjugate(g, s)))
    })
}

/// Orders, intersections, commutation and normality among `T`, `H`, `M`, `S`.
pub fn structure_check(s: &SpecialElements, en: &U1Enumeration) -> Vec<StructureCheck> {
    let t = closure(&s.t_gens());
    let h = closure(&s.h_gens());
    let m = closure(&s.m_gens());
    let sg = closure(&s.s_gens());
    let mut out = Vec::new();
    for (name, g, n) in [("T", &t, 9), ("H", &h, 27), ("M", &m, 81), ("S", &sg, 24)] {
        out.push(check(
            &format!("|{name}| = {n}"),
            g.order() == n,
            format!("{}", g.order()),
        ));
    }
    let groups = [("T", &t), ("H", &h), ("M", &m), ("S", &sg)];
    for (i, (an, a)) in groups.iter().enumerate() {
        for (bn, b) in groups.iter().skip(i + 1) {
            let k = a.intersection_order(b);
            out.push(check(
                &format!("{an} meets {bn} trivially"),
                k == 1,
                format!("{k}"),
            ));
        }
    }
    let mut tm_gens = s.t_gens();
    tm_gens.extend(s.m_gens());
    let tm = closure(&tm_gens);
    let tm_abelian = tm_gens
        .iter()
        .all(|a| tm_gens.iter().all(|b| a * b == b * a));
    let tm_exp3 = tm.matrices().all(|x| x.pow(3) == R1Mat::identity());
    out.push(check(
        "T x M is elementary abelian of order 729",
        tm.order() == 729 && tm_abelian && tm_exp3,
        format!("{}", tm.order()),
    ));
    let commute = |xs: &[R1Mat], ys: &[R1Mat]| {
        xs.iter()
            .all(|a| ys.iter().all(|b| commutator(a, b) == R1Mat::identity()))
    };
    out.push(check("[T,H] = 1", commute(&s.t_gens(), &s.h_gens()), String::new()));
    out.push(check("[T,M] = 1", commute(&s.t_gens(), &s.m_gens()), String::new()));
    let centre: Vec<R1Mat> = h
        .matrices()
        .filter(|x| s.h_gens().iter().all(|g| x * g == g * x))
        .collect();
    let z_group = closure(&[s.z.clone()]);
    out.push(check(
        "centre of H is <z>",
        centre.len() == 3 && centre.iter().all(|x| z_group.contains(x)),
        format!("{}", centre.len()),
    ));
    out.push(check("S normalizes T", normalizes(&s.s_gens(), &t), String::new()));
    let mut th_gens = s.t_gens();
    th_gens.extend(s.h_gens());
    let th = closure(&th_gens);
    out.push(check("S normalizes <T,H>", normalizes(&s.s_gens(), &th), String::new()));
    out.push(check("S normalizes M", normalizes(&s.s_gens(), &m), String::new()));
    out.push(check("H normalizes M x T", normalizes(&s.h_gens(), &tm), String::new()));
    let sl2_orders = {
        let mut counts = [0usize; 7];
        for x in sg.matrices() {
            let o = super::group::element_order(&x);
            if o < 7 {
                counts[o] += 1;
            }
        }
        counts
    };
    // SL₂(F₃): 1 identity, 1 involution, 6 of order 4, 8 of order 3, 8 of order 6.
    out.push(check(
        "S has the element orders of SL2(F3)",
        sl2_orders == [0, 1, 1, 8, 6, 0, 8],
        format!("{sl2_orders:?}"),
    ));
    let product = t.order() * m.order() * h.order() * sg.order() * 2;
    out.push(check(
        "9*81*27*24*2 = |U'1|",
        product == en.u1.order() && product == U1_ORDER,
        format!("{product}"),
    ));
    out.push(check(
        "det mod t has kernel U'1+",
        en.det_kernel_is_plus,
        String::new(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u0_block_description() {
        assert_eq!(enumerate_u0().order(), U0_ORDER);
        assert_eq!(sl2_f3().len(), 24);
    }

    #[test]
    fn degenerate_form_has_twice_the_order() {
        assert_eq!(degenerate_form_group_order(), 2 * U0_ORDER);
    }
}

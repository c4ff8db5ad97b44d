//! Index-3 subgroups of the model image, the torsion certificate and the
//! determinant image.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::finite_ring::{R1Elem, R1Mat};

use super::group::{closure, conjugate, element_order, inverse, key, Ambient, FiniteGroup};
use super::model::scalar_matrices;
use super::special::SpecialElements;

/// A subgroup of the ambient group: sorted element indices and the
/// generator indices it was built from.
#[derive(Clone, Debug)]
pub struct Sub {
    pub elements: Vec<u32>,
    pub gens: Vec<u32>,
}

fn membership(n: usize, elements: &[u32]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &e in elements {
        m[e as usize] = true;
    }
    m
}

/// Representatives of the double cosets `A x A` not contained in `A`.
fn double_coset_reps(amb: &Ambient, a: &Sub) -> Vec<u32> {
    let n = amb.order();
    let mut seen = membership(n, &a.elements);
    let mut reps = Vec::new();
    for x in 0..n as u32 {
        if seen[x as usize] {
            continue;
        }
        reps.push(x);
        seen[x as usize] = true;
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &g in &a.gens {
                for z in [amb.mul(g, y), amb.mul(y, g)] {
                    if !seen[z as usize] {
                        seen[z as usize] = true;
                        stack.push(z);
                    }
                }
            }
        }
    }
    reps
}

/// The conjugate `g⁻¹ A g` as a sorted index list.
fn conjugate_sub(amb: &Ambient, a: &[u32], g: u32) -> Vec<u32> {
    let gm = amb.mat(g).clone();
    let gi = inverse(&gm);
    let mut v: Vec<u32> = a
        .iter()
        .map(|&x| {
            amb.index_of(&(&(&gi * amb.mat(x)) * &gm))
                .expect("closed under conjugation")
        })
        .collect();
    v.sort_unstable();
    v
}

#[derive(Clone, Debug)]
pub struct Classification {
    /// Number of subgroups containing the 2-Sylow seed with index at least 3.
    pub overgroups_examined: usize,
    /// Index-3 subgroups containing the seed, in discovery order.
    pub index3: Vec<Vec<u32>>,
    /// Conjugacy classes of index-3 subgroups, each a sorted list of
    /// member subgroups (all conjugates, not only those containing the seed).
    pub classes: Vec<Vec<Vec<u32>>>,
}

/// All index-3 subgroups up to conjugacy, found by growing overgroups of
/// the 2-Sylow seed one generator at a time.
pub fn classify_index3(amb: &Ambient, seed_gens: &[R1Mat]) -> Classification {
    let n = amb.order();
    let limit = n / 3;
    let seed_idx: Vec<u32> = seed_gens
        .iter()
        .map(|g| amb.index_of(g).expect("seed inside ambient"))
        .collect();
    let seed = Sub {
        elements: amb.closure(&seed_idx, limit).expect("seed is small"),
        gens: seed_idx,
    };
    let mut known: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut subs: Vec<Sub> = vec![seed.clone()];
    known.insert(seed.elements.clone(), 0);
    let mut head = 0;
    while head < subs.len() {
        let a = subs[head].clone();
        head += 1;
        let reps = double_coset_reps(amb, &a);
        let found: Vec<Option<Sub>> = reps
            .par_iter()
            .map(|&x| {
                let mut gens = a.gens.clone();
                gens.push(x);
                amb.closure(&gens, limit).map(|elements| Sub { elements, gens })
            })
            .collect();
        for b in found.into_iter().flatten() {
            if !known.contains_key(&b.elements) {
                known.insert(b.elements.clone(), subs.len());
                subs.push(b);
            }
        }
    }
    let index3: Vec<Vec<u32>> = subs
        .iter()
        .filter(|s| s.elements.len() == limit)
        .map(|s| s.elements.clone())
        .collect();
    // Conjugates by representatives of the cosets of each subgroup.
    let mut classes: Vec<Vec<Vec<u32>>> = Vec::new();
    for h in &index3 {
        if classes.iter().any(|c| c.contains(h)) {
            continue;
        }
        // g⁻¹Hg depends only on the right coset Hg, and there are three.
        let mut covered = membership(n, h);
        let mut members = vec![h.clone()];
        for g in 0..n as u32 {
            if covered[g as usize] {
                continue;
            }
            for &x in h {
                covered[amb.mul(x, g) as usize] = true;
            }
            let c = conjugate_sub(amb, h, g);
            if !members.contains(&c) {
                members.push(c);
            }
        }
        members.sort();
        classes.push(members);
    }
    Classification {
        overgroups_examined: subs.len(),
        index3,
        classes,
    }
}

/// The four subgroups `J₁ … J₄` from their generators.
pub fn j_groups(s: &SpecialElements) -> Vec<(String, FiniteGroup)> {
    let d12 = s.d1d2();
    let extra = [
        ("J1", s.u.clone()),
        ("J2", d12.clone()),
        ("J3", &s.u * &d12),
        ("J4", &s.u * &inverse(&d12)),
    ];
    extra
        .into_iter()
        .map(|(name, x)| {
            let mut g = base_generators(s);
            g.push(x);
            (name.to_string(), closure(&g))
        })
        .collect()
}

/// Generators of `⟨T, H, P, scalars⟩`.
pub fn base_generators(s: &SpecialElements) -> Vec<R1Mat> {
    let mut g = s.t_gens();
    g.extend(s.h_gens());
    g.extend(s.p_gens());
    g.extend(scalar_matrices());
    g
}

/// The seed `P₂ = ⟨w, w^u, −I⟩`.
pub fn sylow2_generators(s: &SpecialElements) -> Vec<R1Mat> {
    let mut g = s.p_gens();
    g.push(R1Mat::scalar(-R1Elem::ONE));
    g
}

#[derive(Clone, Debug)]
pub struct TorsionCertificate {
    /// Number of scalar-twisted conjugates of `ρ̄^{±1}, τ̄^{±1}` inside `J`.
    pub hits: usize,
    pub first_hit: Option<R1Mat>,
}

impl TorsionCertificate {
    pub fn passed(&self) -> bool {
        self.hits == 0
    }
}

/// Checks that no `s · h⁻¹ x h` lies in `j`, for `h` in the ambient group,
/// `s` a scalar and `x ∈ {ρ̄^{±1}, τ̄^{±1}}`.
pub fn torsion_certificate(
    amb: &Ambient,
    j: &FiniteGroup,
    rho_bar: &R1Mat,
    tau_bar: &R1Mat,
) -> TorsionCertificate {
    let xs = [
        rho_bar.clone(),
        inverse(rho_bar),
        tau_bar.clone(),
        inverse(tau_bar),
    ];
    let scalars = scalar_matrices();
    let hits: Vec<R1Mat> = (0..amb.order() as u32)
        .into_par_iter()
        .flat_map_iter(|h| {
            let hm = amb.mat(h).clone();
            let mut out = Vec::new();
            for x in &xs {
                let c = conjugate(x, &hm);
                for s in &scalars {
                    let y = s * &c;
                    if j.contains(&y) {
                        out.push(y);
                    }
                }
            }
            out
        })
        .collect();
    let mut first = hits.clone();
    first.sort_by_key(key);
    TorsionCertificate {
        hits: hits.len(),
        first_hit: first.into_iter().next(),
    }
}

#[derive(Clone, Debug)]
pub struct DetImage {
    /// Distinct determinants of elements with similitude factor 1.
    pub values: Vec<R1Elem>,
    /// The subgroup of `R₁^×` generated by those values and `−1`.
    pub generated: Vec<R1Elem>,
    pub det_u: R1Elem,
}

impl DetImage {
    pub fn passed(&self) -> bool {
        self.generated.len() == 6 && self.values.contains(&R1Elem::new(1, -1))
    }
}

pub fn det_image_check(j: &FiniteGroup, s: &SpecialElements) -> DetImage {
    let q1 = crate::finite_ring::q1_form();
    let mut values: Vec<R1Elem> = j
        .matrices()
        .filter(|m| super::group::unitary_factor(m, &q1) == Some(R1Elem::ONE))
        .map(|m| m.det())
        .collect();
    values.sort();
    values.dedup();
    let mut generated = vec![R1Elem::ONE];
    let mut gens = values.clone();
    gens.push(-R1Elem::ONE);
    let mut i = 0;
    while i < generated.len() {
        for g in &gens {
            let y = generated[i] * *g;
            if !generated.contains(&y) {
                generated.push(y);
            }
        }
        i += 1;
    }
    generated.sort();
    DetImage {
        values,
        generated,
        det_u: s.u.det(),
    }
}

#[derive(Clone, Debug)]
pub struct QuaternionCheck {
    pub order: usize,
    pub involutions: usize,
    pub order_four: usize,
    /// Elements of 2-power order in `S`; 8 means the 2-Sylow is unique.
    pub two_elements_in_s: usize,
    pub sylow_with_sign_order: usize,
}

impl QuaternionCheck {
    pub fn passed(&self) -> bool {
        self.order == 8
            && self.involutions == 1
            && self.order_four == 6
            && self.two_elements_in_s == 8
            && self.sylow_with_sign_order == 16
    }
}

pub fn quaternion_check(s: &SpecialElements) -> QuaternionCheck {
    let p = closure(&s.p_gens());
    let orders: Vec<usize> = p.matrices().map(|m| element_order(&m)).collect();
    let sg = closure(&s.s_gens());
    let two_elements_in_s = sg
        .matrices()
        .filter(|m| element_order(m).is_power_of_two())
        .count();
    QuaternionCheck {
        order: p.order(),
        involutions: orders.iter().filter(|&&o| o == 2).count(),
        order_four: orders.iter().filter(|&&o| o == 4).count(),
        two_elements_in_s,
        sylow_with_sign_order: closure(&sylow2_generators(s)).order(),
    }
}

/// Whether the mod-`t` image of `H`, a 9-element group, has no proper
/// nontrivial subgroup stable under conjugation by `P`.
pub fn h_image_irreducible(s: &SpecialElements) -> bool {
    let lvl0 = |m: &R1Mat| m.map(|x| x.level0());
    let h: Vec<R1Mat> = {
        let g = closure(&s.h_gens());
        let mut v: Vec<R1Mat> = g.matrices().map(|m| lvl0(&m)).collect();
        v.sort_by_key(key);
        v.dedup();
        v
    };
    if h.len() != 9 {
        return false;
    }
    let p: Vec<R1Mat> = closure(&s.p_gens()).matrices().map(|m| lvl0(&m)).collect();
    let id = R1Mat::identity();
    h.iter().filter(|x| **x != id).all(|x| {
        let orbit: Vec<R1Mat> = p.iter().map(|g| conjugate(x, g)).collect();
        closure(&orbit).order() == 9
    })
}

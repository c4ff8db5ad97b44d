//! The column-pairing search for matrices fixing `Z₂³`, its case reports,
//! the normalization of the similitude factor and the entry domain.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::building::{act, Vertex};
use crate::cmsz_generators::tau;
use crate::error::{Error, Result};
use crate::exact_ring::{PadicConfig, QuadInt};
use crate::hermitian_core::{q_form, rat, sesquilinear, similitude_factor, QuadMat};

use super::vectors::{enumerate_v, g2, in_half_lattice, HalfLatticeVec, VEnumeration};

fn q12() -> QuadInt {
    q_form().m[0][1].clone()
}

fn q13() -> QuadInt {
    q_form().m[0][2].clone()
}

fn pair(x: &HalfLatticeVec, y: &HalfLatticeVec) -> QuadInt {
    sesquilinear(&q_form(), &x.to_quad(), &y.to_quad())
}

fn matrix_of(cols: [&HalfLatticeVec; 3]) -> QuadMat {
    QuadMat::from_columns(&[cols[0].to_quad(), cols[1].to_quad(), cols[2].to_quad()])
}

/// Whether `det g` is a unit of `Z₂` under the embedding along `𝔭`.
fn det_is_2adic_unit(g: &QuadMat) -> bool {
    g.det().val_p().map(|v| v == 0).unwrap_or(false)
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub v2: HalfLatticeVec,
    /// `v₁ ∈ V` with `v₁*Qv₂ = −2(λ+2)`.
    pub v1: Vec<HalfLatticeVec>,
    /// `v₃ ∈ V` with `v₂*Qv₃ = −2(λ+2)`.
    pub v3: Vec<HalfLatticeVec>,
    /// Pairs also meeting `v₁*Qv₃ = λ+2`.
    pub paired: Vec<(HalfLatticeVec, HalfLatticeVec)>,
    /// Paired matrices with a `2`-adic unit determinant.
    pub invertible: Vec<QuadMat>,
}

impl CaseReport {
    fn build(v: &BTreeSet<HalfLatticeVec>, v2: HalfLatticeVec) -> Self {
        let v1: Vec<_> = v.iter().copied().filter(|x| pair(x, &v2) == q12()).collect();
        let v3: Vec<_> = v.iter().copied().filter(|x| pair(&v2, x) == q12()).collect();
        let paired: Vec<_> = v1
            .iter()
            .flat_map(|a| v3.iter().map(move |c| (*a, *c)))
            .filter(|(a, c)| pair(a, c) == q13())
            .collect();
        let invertible = paired
            .iter()
            .map(|(a, c)| matrix_of([a, &v2, c]))
            .filter(det_is_2adic_unit)
            .collect();
        CaseReport {
            v2,
            v1,
            v3,
            paired,
            invertible,
        }
    }
}

/// The second columns of the four case analyses.
pub const CASE_COLUMNS: [HalfLatticeVec; 4] = [
    HalfLatticeVec::new([0, 1, 0], [1, 0, 0]),
    HalfLatticeVec::new([0, 0, 1], [0, 0, 0]),
    HalfLatticeVec::new([0, -1, -1], [0, 0, 0]),
    HalfLatticeVec::new([0, 1, 0], [0, 0, 0]),
];

#[derive(Clone, Debug)]
pub struct CaseOutcomes {
    pub cases: [CaseReport; 4],
    /// Every element of `V` is a `±τ^i`-translate of one of the case columns.
    pub columns_cover_v: bool,
}

impl CaseOutcomes {
    /// No `v₁` in the first case, nothing invertible in the next two, and
    /// only the identity in the last.
    pub fn match_expected(&self) -> bool {
        let [c1, c2, c3, c4] = &self.cases;
        c1.v1.is_empty()
            && c2.invertible.is_empty()
            && c3.invertible.is_empty()
            && c4.invertible == vec![QuadMat::identity()]
            && self.columns_cover_v
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerSearch {
    pub enumeration: VEnumeration,
    /// Triples `(v₁, v₂, v₃)` meeting all three pairing conditions.
    pub paired_triples: usize,
    /// Matrices that are exactly `Q`-unitary with a `2`-adic unit determinant.
    pub found: Vec<QuadMat>,
    pub equals_g2: bool,
    /// Each found matrix fixes the base vertex and has factor `1`.
    pub fixes_base: bool,
    pub outcomes: CaseOutcomes,
}

impl StabilizerSearch {
    pub fn passed(&self) -> bool {
        self.enumeration.routes_agree()
            && self.found.len() == 6
            && self.equals_g2
            && self.fixes_base
            && self.outcomes.match_expected()
    }
}

/// Runs the column search over `V³` and the four case analyses.
pub fn stabilizer_search(cfg: PadicConfig) -> Result<StabilizerSearch> {
    let enumeration = enumerate_v()?;
    let v = &enumeration.v;
    let q = q_form();
    let mut paired_triples = 0;
    let mut found = Vec::new();
    for v2 in v {
        let v1s: Vec<_> = v.iter().filter(|x| pair(x, v2) == q12()).collect();
        let v3s: Vec<_> = v.iter().filter(|x| pair(v2, x) == q12()).collect();
        for a in &v1s {
            for c in &v3s {
                if pair(a, c) != q13() {
                    continue;
                }
                paired_triples += 1;
                let g = matrix_of([a, v2, c]);
                if &(&g.star() * &q) * &g == q && det_is_2adic_unit(&g) {
                    found.push(g);
                }
            }
        }
    }
    let g2_set: BTreeSet<String> = g2().iter().map(mat_key).collect();
    let found_set: BTreeSet<String> = found.iter().map(mat_key).collect();
    let mut fixes_base = true;
    for g in &found {
        fixes_base &= act(g, &Vertex::base(), cfg)? == Vertex::base()
            && similitude_factor(g, &q)? == BigRational::one();
    }
    if found_set.len() != found.len() || !found_set.is_subset(&g2_set) {
        return Err(Error::Invalid(format!(
            "column search produced {} matrices outside ±τ^i",
            found_set.difference(&g2_set).count()
        )));
    }
    let cases = CASE_COLUMNS.map(|c| CaseReport::build(v, c));
    let mut covered = BTreeSet::new();
    for c in CASE_COLUMNS {
        for g in g2() {
            if let Some(y) = HalfLatticeVec::from_quad(&g.mul_vec(&c.to_quad())) {
                covered.insert(y);
            }
        }
    }
    Ok(StabilizerSearch {
        equals_g2: found_set == g2_set,
        paired_triples,
        found,
        fixes_base,
        outcomes: CaseOutcomes {
            cases,
            columns_cover_v: &covered == v,
        },
        enumeration,
    })
}

fn mat_key(g: &QuadMat) -> String {
    g.m.iter()
        .flatten()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Clone, Debug)]
pub struct FactorNormalization {
    /// `N(λ) = N(λ̄) = 4`, `ν_𝔭(λ) = 2`, `ν_𝔭(λ̄) = 0`.
    pub unit_data: bool,
    /// Rationals `c` with `40c, 40/c ∈ Z` whose cube is a power of `4`.
    pub admissible: Vec<BigRational>,
    /// Each admissible `c = 4^k` becomes `1` after dividing by `λ̄^k`.
    pub all_reduce_to_one: bool,
    /// `λ̄τ` fixes `Λ₀`, preserves `Z₂³`, and has factor `4`.
    pub witness_factor: BigRational,
    pub witness_fixes_base: bool,
}

impl FactorNormalization {
    pub fn passed(&self) -> bool {
        self.unit_data
            && self.all_reduce_to_one
            && self.admissible == vec![rat(1, 4), rat(1, 1), rat(4, 1)]
            && self.witness_factor == rat(4, 1)
            && self.witness_fixes_base
    }
}

fn power_of_four(c: &BigRational) -> Option<i64> {
    let (n, d) = (c.numer(), c.denom());
    let is_pow2 = |x: &BigInt| x.bits() > 0 && x.trailing_zeros() == Some(x.bits() - 1);
    if !is_pow2(n) || !is_pow2(d) {
        return None;
    }
    let e = n.trailing_zeros()? as i64 - d.trailing_zeros()? as i64;
    (e % 2 == 0).then_some(e / 2)
}

/// Reduces every `g` fixing `Z₂³` to similitude factor `1`.
///
/// `det g` is a unit `±λ^a λ̄^b` of `O_K[1/2]` and a `𝔭`-adic unit, so
/// `a = 0` and `c³ = N(det g) = 4^b`, giving `c = 4^k` with `λ̄^{-k}g` of
/// factor `1`.
pub fn factor_normalization(cfg: PadicConfig) -> Result<FactorNormalization> {
    let l = QuadInt::lambda();
    let lb = QuadInt::lambda_bar();
    let unit_data = l.norm() == rat(4, 1)
        && lb.norm() == rat(4, 1)
        && l.val_p()? == 2
        && lb.val_p()? == 0;
    let mut admissible = Vec::new();
    for n in 1..=1600i64 {
        if 1600 % n == 0 {
            let c = rat(n, 40);
            let cube = c.clone() * c.clone() * c.clone();
            if power_of_four(&cube).is_some() && power_of_four(&c).is_some() {
                admissible.push(c);
            }
        }
    }
    let all_reduce_to_one = admissible.iter().all(|c| {
        power_of_four(c).is_some_and(|k| {
            let s = if k >= 0 { lb.norm() } else { rat(1, 4) };
            let mut f = c.clone();
            for _ in 0..k.abs() {
                f /= s.clone();
            }
            f.is_one()
        })
    });
    let w = tau().scale(&lb);
    Ok(FactorNormalization {
        unit_data,
        admissible,
        all_reduce_to_one,
        witness_factor: similitude_factor(&w, &q_form())?,
        witness_fixes_base: act(&w, &Vertex::base(), cfg)? == Vertex::base()
            && det_is_2adic_unit(&w),
    })
}

#[derive(Clone, Debug)]
pub struct EntryDomain {
    /// `30Q⁻¹` computed exactly.
    pub thirty_q_inv: QuadMat,
    /// Entries of `30Q⁻¹` lie in `O_K[1/2]` with `ν_𝔭 ≥ 0`.
    pub in_z_lambda_bar: bool,
    /// Entries of every found stabilizer lie in `𝕃`.
    pub stabilizer_in_half_lattice: bool,
}

pub fn entry_domain(found: &[QuadMat]) -> Result<EntryDomain> {
    let q = q_form();
    let adj = q.adjugate();
    let ten = QuadInt::from_int(10);
    let mut entries = Vec::with_capacity(9);
    let mut in_ring = true;
    for row in &adj.m {
        for x in row {
            match x.checked_div(&ten) {
                Some(y) => entries.push(y),
                None => {
                    in_ring = false;
                    entries.push(QuadInt::zero());
                }
            }
        }
    }
    // det Q = 300, so 30Q⁻¹ = adj(Q)/10.
    if q.det() != QuadInt::from_int(300) {
        return Err(Error::Invalid("det Q differs from 300".into()));
    }
    let m = QuadMat::from_fn(|i, j| entries[3 * i + j].clone());
    let in_z_lambda_bar =
        in_ring && m.m.iter().flatten().all(|x| x.is_zero() || x.val_p().is_ok_and(|v| v >= 0));
    Ok(EntryDomain {
        thirty_q_inv: m,
        in_z_lambda_bar,
        stabilizer_in_half_lattice: found
            .iter()
            .all(|g| g.m.iter().flatten().all(in_half_lattice)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_of_four_detection() {
        assert_eq!(power_of_four(&rat(4, 1)), Some(1));
        assert_eq!(power_of_four(&rat(1, 4)), Some(-1));
        assert_eq!(power_of_four(&rat(2, 1)), None);
        assert_eq!(power_of_four(&rat(3, 1)), None);
    }
}

//! The generators `ρ`, `τ`, the seven elements `g_i`, the triangle
//! presentation and the chamber-stabilizer computations.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact_ring::QuadInt;
use crate::hermitian_core::{product, q_form, similitude_factor, QuadMat, RingMat3};

fn qi(a: i64, b: i64, e: u32) -> QuadInt {
    QuadInt::new(a, b, e)
}

pub fn rho() -> QuadMat {
    let h = QuadInt::half_lambda();
    RingMat3::new([
        [qi(0, 0, 0), qi(0, 0, 0), h.clone()],
        [qi(0, 0, 0), qi(-1, 0, 0), qi(1, 0, 0) + h],
        [qi(1, 0, 0), qi(-1, 0, 0), qi(1, 0, 0)],
    ])
}

pub fn tau() -> QuadMat {
    let h = QuadInt::half_lambda();
    RingMat3::new([
        [qi(0, 0, 0), qi(-1, 0, 0), h.clone()],
        [qi(1, 0, 0), qi(-1, 0, 0), qi(1, 0, 0) + h],
        [qi(0, 0, 0), qi(0, 0, 0), qi(1, 0, 0)],
    ])
}

/// The scalar `λ/2 · I₃`.
pub fn half_lambda_scalar() -> QuadMat {
    RingMat3::scalar(QuadInt::half_lambda())
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub rho: QuadMat,
    pub tau: QuadMat,
    pub tau_inv: QuadMat,
    pub g: [QuadMat; 7],
}

/// The nine products `g_i g_j g_k` prescribed to be scalar, with the
/// expected scalar (`true` for `λ/2`, `false` for `1`).
pub const SCALAR_PRODUCTS: [((usize, usize, usize), bool); 9] = [
    ((3, 3, 3), true),
    ((6, 6, 6), true),
    ((5, 5, 5), true),
    ((1, 1, 0), false),
    ((2, 2, 0), false),
    ((4, 4, 0), false),
    ((1, 3, 6), false),
    ((2, 6, 5), false),
    ((4, 5, 3), false),
];

impl GeneratorSet {
    pub fn triple(&self, (i, j, k): (usize, usize, usize)) -> QuadMat {
        product([&self.g[i], &self.g[j], &self.g[k]])
    }

    /// `τ⁻¹ g_{2i} τ = g_i` for the given `i`.
    pub fn tau_relation_holds(&self, i: usize) -> bool {
        product([&self.tau_inv, &self.g[(2 * i) % 7], &self.tau]) == self.g[i]
    }

    pub fn inverse(&self, i: usize) -> QuadMat {
        self.g[i].inverse().expect("generators are invertible")
    }
}

fn inv(m: &QuadMat, what: &str) -> Result<QuadMat> {
    m.inverse()
        .ok_or_else(|| Error::NotInvertible(what.to_string()))
}

/// Builds the seven `g_i` from `ρ` and `τ` and verifies every defining
/// relation, failing on the first one that does not hold.
pub fn derive_generators() -> Result<GeneratorSet> {
    let rho = rho();
    let tau = tau();
    let tau_inv = inv(&tau, "tau")?;
    let conj = |m: &QuadMat| product([&tau, m, &tau_inv]);
    let g3 = rho.clone();
    let g6 = conj(&g3);
    let g5 = conj(&g6);
    let g1 = inv(&(&g3 * &g6), "g3 g6")?;
    let g0 = inv(&(&g1 * &g1), "g1^2")?;
    let g2 = conj(&g1);
    let g4 = conj(&g2);
    let set = GeneratorSet {
        rho,
        tau,
        tau_inv,
        g: [g0, g1, g2, g3, g4, g5, g6],
    };
    for i in 0..7 {
        if !set.tau_relation_holds(i) {
            return Err(Error::RelationFailed(format!("tau^-1 g_{} tau = g_{}", (2 * i) % 7, i)));
        }
    }
    let one = RingMat3::identity();
    let hl = half_lambda_scalar();
    for (t, is_hl) in SCALAR_PRODUCTS {
        let expect = if is_hl { &hl } else { &one };
        if set.triple(t) != *expect {
            return Err(Error::RelationFailed(format!("g_{} g_{} g_{}", t.0, t.1, t.2)));
        }
    }
    let q = q_form();
    for (i, g) in set.g.iter().enumerate() {
        let c = similitude_factor(g, &q)?;
        if !c.is_positive() {
            return Err(Error::RelationFailed(format!("similitude factor of g_{i}")));
        }
    }
    Ok(set)
}

/// Similitude factors of the seven generators.
pub fn generator_factors(set: &GeneratorSet) -> Result<Vec<BigRational>> {
    let q = q_form();
    set.g.iter().map(|g| similitude_factor(g, &q)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePresentation {
    pub triples: BTreeSet<(usize, usize, usize)>,
}

impl TrianglePresentation {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: (usize, usize, usize)) -> bool {
        self.triples.contains(&t)
    }

    pub fn rotation_closed(&self) -> bool {
        self.triples
            .iter()
            .all(|&(i, j, k)| self.triples.contains(&(j, k, i)))
    }
}

/// All cyclic rotations of the nine scalar products, each checked to
/// multiply to `I₃` or `(λ/2)I₃`.
pub fn triangle_presentation(set: &GeneratorSet) -> Result<TrianglePresentation> {
    let mut triples = BTreeSet::new();
    for ((i, j, k), _) in SCALAR_PRODUCTS {
        triples.insert((i, j, k));
        triples.insert((j, k, i));
        triples.insert((k, i, j));
    }
    if triples.len() != 21 {
        return Err(Error::CountMismatch {
            what: "triangle presentation".into(),
            expected: 21,
            found: triples.len(),
        });
    }
    let one = RingMat3::identity();
    let hl = half_lambda_scalar();
    for &t in &triples {
        let p = set.triple(t);
        if p != one && p != hl {
            return Err(Error::RelationFailed(format!("triple {t:?} is not scalar")));
        }
    }
    Ok(TrianglePresentation { triples })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberCase {
    pub i: usize,
    pub j: usize,
    pub ninth_power_scalar: bool,
}

/// `(g_i τ^j)⁹` for `i ∈ {1, 3}` and `j ∈ {0, 1, 2}`.
pub fn chamber_stabilizer_certificate(set: &GeneratorSet) -> Vec<ChamberCase> {
    let mut out = Vec::new();
    for i in [1, 3] {
        for j in 0..3 {
            let m = &set.g[i] * &set.tau.pow(j);
            out.push(ChamberCase {
                i,
                j: j as usize,
                ninth_power_scalar: m.pow(9).is_scalar(),
            });
        }
    }
    out
}

/// The expected outcome: only `(g₃)⁹` is scalar.
pub fn chamber_certificate_passes(cases: &[ChamberCase]) -> bool {
    cases.len() == 6
        && cases
            .iter()
            .all(|c| c.ninth_power_scalar == (c.i == 3 && c.j == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_and_tau_cubes() {
        assert_eq!(rho().pow(3), half_lambda_scalar());
        assert_eq!(tau().pow(3), RingMat3::identity());
    }

    #[test]
    fn generators_derive() {
        let set = derive_generators().unwrap();
        assert_eq!(set.g[3], rho());
        let f = triangle_presentation(&set).unwrap();
        assert_eq!(f.len(), 21);
        assert!(f.contains((3, 3, 3)));
        assert!(!f.contains((0, 0, 0)));
        assert!(!set.triple((0, 0, 0)).is_scalar());
        assert!(f.rotation_closed());
    }

    #[test]
    fn chamber_cases() {
        let set = derive_generators().unwrap();
        let cases = chamber_stabilizer_certificate(&set);
        assert!(chamber_certificate_passes(&cases), "{cases:?}");
        assert_eq!(
            set.g[3].pow(9),
            RingMat3::scalar(QuadInt::half_lambda()).pow(3)
        );
    }
}

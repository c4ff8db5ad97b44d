//! Vertices of the building as canonical 2-adic Hermite forms.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_ring::{embed_2adic, Padic2, PadicConfig, QuadInt};
use crate::hermitian_core::QuadMat;

/// The homothety class of a `Z₂`-lattice of rank 3.
///
/// The representative is the unique lattice in the class contained in
/// `Z₂³` but not in `2Z₂³`. Its upper-triangular basis has columns
/// `(2^a₁,0,0)`, `(x₁₂,2^a₂,0)`, `(x₁₃,x₂₃,2^a₃)` with `0 ≤ x_ij < 2^a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub exps: [u32; 3],
    /// `[x₁₂, x₁₃, x₂₃]`.
    pub off: [u128; 3],
}

impl Vertex {
    pub fn base() -> Self {
        Vertex {
            exps: [0, 0, 0],
            off: [0, 0, 0],
        }
    }

    /// Basis matrix, columns as described on the type.
    pub fn basis(&self) -> [[BigInt; 3]; 3] {
        let p = |e: u32| BigInt::from(1u8) << e;
        let z = BigInt::zero;
        [
            [p(self.exps[0]), BigInt::from(self.off[0]), BigInt::from(self.off[1])],
            [z(), p(self.exps[1]), BigInt::from(self.off[2])],
            [z(), z(), p(self.exps[2])],
        ]
    }

    pub fn basis_quad(&self) -> QuadMat {
        let b = self.basis();
        QuadMat::from_fn(|i, j| QuadInt::new(b[i][j].clone(), 0, 0))
    }

    /// `ν(det)` of the representative, which gives the label mod 3.
    pub fn det_valuation(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Combinatorial distance to the base vertex.
    pub fn distance_to_base(&self) -> u32 {
        // Elementary divisors 2^0 | 2^e₂ | 2^e₃; e₂ + 0 is the least
        // valuation of a 2×2 minor and e₃ the remaining part of the det.
        let b = self.basis();
        let mut min2 = u64::MAX;
        let rows = [(0, 1), (0, 2), (1, 2)];
        for &(r0, r1) in &rows {
            for &(c0, c1) in &rows {
                let m = &b[r0][c0] * &b[r1][c1] - &b[r0][c1] * &b[r1][c0];
                if let Some(v) = m.trailing_zeros() {
                    min2 = min2.min(v);
                }
            }
        }
        self.det_valuation() - min2 as u32
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[2^{} {} {}; 0 2^{} {}; 0 0 2^{}]",
            self.exps[0], self.off[0], self.off[1], self.exps[1], self.off[2], self.exps[2]
        )
    }
}

fn exhausted(needed: i64, cfg: PadicConfig) -> Error {
    Error::PrecisionExhausted {
        needed: needed.max(0) as u32,
        available: cfg.precision,
    }
}

/// The vertex spanned by the given columns in `Q₂³`.
pub fn hermite_vertex(cols: &[[Padic2; 3]], cfg: PadicConfig) -> Result<Vertex> {
    let mut cols: Vec<[Padic2; 3]> = cols.to_vec();
    let m = cols
        .iter()
        .flatten()
        .filter_map(|x| x.valuation())
        .min()
        .ok_or_else(|| Error::Invalid("lattice generators are all zero".into()))?;
    if cols.iter().flatten().any(|x| x.is_zero() && x.abs_precision() <= m) {
        return Err(exhausted(m, cfg));
    }
    for c in cols.iter_mut() {
        for x in c.iter_mut() {
            *x = x.shift(-m);
        }
    }
    let mut pivots: [Option<[Padic2; 3]>; 3] = [None, None, None];
    let mut exps = [0u32; 3];
    for r in (0..3).rev() {
        let (p, v) = cols
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c[r].valuation().map(|v| (j, v)))
            .min_by_key(|&(j, v)| (v, j))
            .ok_or_else(|| Error::Invalid("lattice is not of full rank".into()))?;
        let piv = cols.remove(p);
        let pv = piv[r];
        if i64::from(pv.precision()) < i64::from(cfg.guard) {
            return Err(exhausted(v + i64::from(cfg.guard), cfg));
        }
        if cols.iter().any(|c| c[r].is_zero() && c[r].abs_precision() <= v) {
            return Err(exhausted(v + 1, cfg));
        }
        let unit_inv = pv.normalize_unit().inverse().expect("pivot is nonzero");
        let piv: [Padic2; 3] = std::array::from_fn(|i| piv[i] * unit_inv);
        for c in cols.iter_mut() {
            if c[r].is_zero() {
                continue;
            }
            let q = c[r] * Padic2::power_of_two(-v, pv.precision());
            for i in 0..3 {
                c[i] = c[i] - q * piv[i];
            }
        }
        exps[r] = v as u32;
        pivots[r] = Some(piv);
    }
    let [_, c2, c3] = pivots.map(|p| p.expect("all rows pivoted"));
    let residue = |x: Padic2, bits: u32| -> Result<u128> {
        if bits == 0 {
            return Ok(0);
        }
        x.residue_mod(bits).ok_or_else(|| exhausted(i64::from(bits), cfg))
    };
    let (a1, a2) = (exps[0], exps[1]);
    // Reduce the row-1 entry of c3 using c2, then the row-0 entries.
    let y = c3[1];
    let y_res = residue(y, a2)?;
    let q = if y.is_zero() && y_res == 0 {
        Padic2::zero_to(y.abs_precision() - i64::from(a2))
    } else {
        (y - Padic2::from_bigint(&BigInt::from(y_res), 128)) * Padic2::power_of_two(-i64::from(a2), 128)
    };
    let x13 = c3[0] - q * c2[0];
    Ok(Vertex {
        exps,
        off: [residue(c2[0], a1)?, residue(x13, a1)?, y_res],
    })
}

/// The vertex spanned by the columns of an exact matrix with `n` columns.
pub fn vertex_of_columns(cols: &[[QuadInt; 3]], cfg: PadicConfig) -> Result<Vertex> {
    let p: Vec<[Padic2; 3]> = cols
        .iter()
        .map(|c| {
            let mut out = [Padic2::zero_to(0); 3];
            for i in 0..3 {
                out[i] = if c[i].is_zero() {
                    Padic2::zero_to(i64::MAX / 4)
                } else {
                    embed_2adic(&c[i], cfg)?
                };
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    hermite_vertex(&p, cfg)
}

pub fn vertex_of_matrix(g: &QuadMat, cfg: PadicConfig) -> Result<Vertex> {
    let cols: Vec<[QuadInt; 3]> = (0..3).map(|j| g.column(j)).collect();
    vertex_of_columns(&cols, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PadicConfig {
        PadicConfig::default()
    }

    fn m(rows: [[i64; 3]; 3]) -> QuadMat {
        QuadMat::from_fn(|i, j| QuadInt::from_int(rows[i][j]))
    }

    #[test]
    fn identity_is_base() {
        let v = vertex_of_matrix(&m([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), cfg()).unwrap();
        assert_eq!(v, Vertex::base());
        let v = vertex_of_matrix(&m([[4, 0, 0], [0, 4, 0], [0, 0, 4]]), cfg()).unwrap();
        assert_eq!(v, Vertex::base());
        let v = vertex_of_matrix(&m([[3, 1, 5], [0, 7, 2], [1, 1, 1]]), cfg());
        // det = 3·5 - 1·(-2) + 5·(-7) = -18, not a unit: a different class
        assert_ne!(v.unwrap(), Vertex::base());
    }

    #[test]
    fn canonical_across_bases() {
        let a = vertex_of_matrix(&m([[2, 1, 0], [0, 1, 0], [0, 0, 1]]), cfg()).unwrap();
        let b = vertex_of_matrix(&m([[2, 3, 0], [0, 3, 0], [0, 0, 5]]), cfg()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.exps, [1, 0, 0]);
        assert_eq!(a.distance_to_base(), 1);
    }

    #[test]
    fn primitive_scaling() {
        let a = vertex_of_matrix(&m([[4, 0, 0], [0, 2, 0], [0, 0, 2]]), cfg()).unwrap();
        assert_eq!(a.exps, [1, 0, 0]);
        let b = vertex_of_matrix(&m([[2, 0, 0], [0, 1, 0], [0, 0, 1]]), cfg()).unwrap();
        assert_eq!(a, b);
    }
}

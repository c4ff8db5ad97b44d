//! The action of the integral model on vertices, adjacency, labels and
//! finite balls.

use std::collections::{BTreeSet, VecDeque};

use crate::error::Result;
use crate::exact_ring::{PadicConfig, QuadInt};
use crate::hermitian_core::QuadMat;

use super::lattice::{vertex_of_columns, vertex_of_matrix, Vertex};

/// `g · v`, through the 2-adic embedding.
pub fn act(g: &QuadMat, v: &Vertex, cfg: PadicConfig) -> Result<Vertex> {
    vertex_of_matrix(&(g * &v.basis_quad()), cfg)
}

/// Like [`act`], retrying once at the maximal precision when the
/// configured one is exhausted.
pub fn act_retry(g: &QuadMat, v: &Vertex, cfg: PadicConfig) -> Result<Vertex> {
    match act(g, v, cfg) {
        Err(crate::Error::PrecisionExhausted { .. }) if cfg.precision < 128 => {
            act(g, v, PadicConfig::new(128, cfg.guard)?)
        }
        r => r,
    }
}

/// Nonzero vectors of `F₂³` and the 2-dimensional subspaces, as integer
/// generator lists.
fn subspaces() -> Vec<Vec<[i64; 3]>> {
    let vecs: Vec<[i64; 3]> = (1..8)
        .map(|k| [(k & 1) as i64, ((k >> 1) & 1) as i64, ((k >> 2) & 1) as i64])
        .collect();
    let mut out: Vec<Vec<[i64; 3]>> = vecs.iter().map(|v| vec![*v]).collect();
    // A plane is the kernel of a nonzero functional f.
    for f in &vecs {
        let plane: Vec<[i64; 3]> = vecs
            .iter()
            .filter(|v| (v[0] * f[0] + v[1] * f[1] + v[2] * f[2]) % 2 == 0)
            .copied()
            .collect();
        out.push(plane);
    }
    out
}

/// The 14 vertices adjacent to `v`: lattices strictly between `2L` and `L`.
pub fn neighbors(v: &Vertex, cfg: PadicConfig) -> Result<Vec<Vertex>> {
    let b = v.basis_quad();
    let mut out = BTreeSet::new();
    for sub in subspaces() {
        let mut gens: Vec<[i64; 3]> = sub;
        gens.extend([[2, 0, 0], [0, 2, 0], [0, 0, 2]]);
        let cols: Vec<[QuadInt; 3]> = gens
            .iter()
            .map(|e| {
                let e = e.map(QuadInt::from_int);
                b.mul_vec(&e)
            })
            .collect();
        out.insert(vertex_of_columns(&cols, cfg)?);
    }
    Ok(out.into_iter().collect())
}

pub fn label(v: &Vertex) -> u32 {
    v.det_valuation() % 3
}

/// `ν(det g) mod 3`.
pub fn label_cocycle(g: &QuadMat) -> Result<u32> {
    Ok(g.det().val_p()?.rem_euclid(3) as u32)
}

/// All vertices within distance `r` of the base vertex, sorted.
pub fn ball(r: u32, cfg: PadicConfig) -> Result<Vec<Vertex>> {
    let mut seen = BTreeSet::from([Vertex::base()]);
    let mut queue = VecDeque::from([(Vertex::base(), 0u32)]);
    while let Some((v, d)) = queue.pop_front() {
        if d == r {
            continue;
        }
        for n in neighbors(&v, cfg)? {
            if seen.insert(n.clone()) {
                queue.push_back((n, d + 1));
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourteen_neighbors_split_by_label() {
        let cfg = PadicConfig::default();
        let n = neighbors(&Vertex::base(), cfg).unwrap();
        assert_eq!(n.len(), 14);
        assert_eq!(n.iter().filter(|v| label(v) == 1).count(), 7);
        assert_eq!(n.iter().filter(|v| label(v) == 2).count(), 7);
        for v in &n {
            assert_eq!(v.distance_to_base(), 1);
            assert!(neighbors(v, cfg).unwrap().contains(&Vertex::base()));
        }
    }

    #[test]
    fn ball_sizes() {
        let cfg = PadicConfig::default();
        let b = ball(2, cfg).unwrap();
        assert!(b.iter().all(|v| v.distance_to_base() <= 2));
        assert_eq!(b.iter().filter(|v| v.distance_to_base() == 1).count(), 14);
    }
}

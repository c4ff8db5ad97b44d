//! Chambers through the base vertex and their labelling by the triangle
//! presentation.

use std::collections::{BTreeMap, BTreeSet};

use crate::cmsz_generators::{GeneratorSet, TrianglePresentation};
use crate::error::Result;
use crate::exact_ring::PadicConfig;

use super::lattice::Vertex;
use super::ops::{act, label, neighbors};

pub type Chamber = BTreeSet<Vertex>;

#[derive(Clone, Debug)]
pub struct ChamberReport {
    /// `C(i,j,k)` for each triple.
    pub chambers: BTreeMap<(usize, usize, usize), Chamber>,
    /// Chambers through the base vertex found from adjacency alone.
    pub geometric_count: usize,
    /// The map from triples to chambers is a bijection onto those.
    pub bijective: bool,
    pub labels_bijective: bool,
    /// `g_i⁻¹ C(i,j,k) = C(j,k,i)` for every triple.
    pub rotation_rule: bool,
    /// `τ C(i,j,k) = C(2i,2j,2k)` for every triple.
    pub tau_rule: bool,
}

impl ChamberReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.labels_bijective && self.rotation_rule && self.tau_rule
    }
}

fn act_set(g: &crate::hermitian_core::QuadMat, c: &Chamber, cfg: PadicConfig) -> Result<Chamber> {
    c.iter().map(|v| act(g, v, cfg)).collect()
}

pub fn chamber_report(
    set: &GeneratorSet,
    f: &TrianglePresentation,
    cfg: PadicConfig,
) -> Result<ChamberReport> {
    let base = Vertex::base();
    let inv: Vec<_> = (0..7).map(|i| set.inverse(i)).collect();
    let mut chambers = BTreeMap::new();
    for &(i, j, k) in &f.triples {
        let c: Chamber = [act(&set.g[i], &base, cfg)?, base.clone(), act(&inv[k], &base, cfg)?]
            .into_iter()
            .collect();
        chambers.insert((i, j, k), c);
    }
    let nbrs = neighbors(&base, cfg)?;
    let mut geometric = BTreeSet::new();
    for a in &nbrs {
        let na = neighbors(a, cfg)?;
        for b in &nbrs {
            if a < b && na.contains(b) {
                let c: Chamber = [base.clone(), a.clone(), b.clone()].into_iter().collect();
                geometric.insert(c);
            }
        }
    }
    let images: BTreeSet<Chamber> = chambers.values().cloned().collect();
    let bijective = images.len() == chambers.len() && images == geometric;
    let labels_bijective = chambers.values().all(|c| {
        let ls: BTreeSet<u32> = c.iter().map(label).collect();
        c.len() == 3 && ls.len() == 3
    });
    let mut rotation_rule = true;
    let mut tau_rule = true;
    for (&(i, j, k), c) in &chambers {
        rotation_rule &= chambers.get(&(j, k, i)) == Some(&act_set(&inv[i], c, cfg)?);
        let t = ((2 * i) % 7, (2 * j) % 7, (2 * k) % 7);
        tau_rule &= chambers.get(&t) == Some(&act_set(&set.tau, c, cfg)?);
    }
    Ok(ChamberReport {
        chambers,
        geometric_count: geometric.len(),
        bijective,
        labels_bijective,
        rotation_rule,
        tau_rule,
    })
}

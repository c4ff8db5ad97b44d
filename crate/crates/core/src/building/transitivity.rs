//! Covering a ball of the building by images of the base vertex under
//! words in `ρ^{±1}, τ^{±1}`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::cmsz_generators::GeneratorSet;
use crate::error::{Error, Result};
use crate::exact_ring::PadicConfig;
use crate::finite_ring::R1Mat;
use crate::finite_unitary::{inverse, FiniteGroup};
use crate::hermitian_core::QuadMat;

use super::lattice::Vertex;
use super::ops::{act_retry, ball};

/// Letters of words: `0 = ρ, 1 = ρ⁻¹, 2 = τ, 3 = τ⁻¹`.
pub type Word = Vec<u8>;

const R: u8 = 0;
const RI: u8 = 1;
const T: u8 = 2;
const TI: u8 = 3;

pub fn invert_word(w: &[u8]) -> Word {
    w.iter().rev().map(|&l| l ^ 1).collect()
}

/// `g_i` as words, using `τ² = τ⁻¹`.
pub fn generator_words() -> [Word; 7] {
    let g1 = vec![T, RI, TI, RI];
    let g0 = [invert_word(&g1), invert_word(&g1)].concat();
    [
        g0,
        g1,
        vec![TI, RI, TI, RI, TI],
        vec![R],
        vec![RI, TI, RI, T],
        vec![TI, R, T],
        vec![T, R, TI],
    ]
}

/// The fourteen words `g_i^{±1}`, which carry the base vertex onto its
/// neighbours.
pub fn neighbor_words() -> Vec<Word> {
    generator_words()
        .iter()
        .flat_map(|w| [w.clone(), invert_word(w)])
        .collect()
}

pub struct Letters {
    pub rho: QuadMat,
    pub tau: QuadMat,
    pub rho_bar: R1Mat,
    pub tau_bar: R1Mat,
}

impl Letters {
    fn mats(&self) -> Result<[(QuadMat, R1Mat); 4]> {
        Ok([
            (self.rho.clone(), self.rho_bar.clone()),
            (
                self.rho.inverse().ok_or_else(|| Error::NotInvertible("rho".into()))?,
                inverse(&self.rho_bar),
            ),
            (self.tau.clone(), self.tau_bar.clone()),
            (
                self.tau.inverse().ok_or_else(|| Error::NotInvertible("tau".into()))?,
                inverse(&self.tau_bar),
            ),
        ])
    }

    pub fn eval(&self, w: &[u8]) -> Result<(QuadMat, R1Mat)> {
        let m = self.mats()?;
        Ok(w.iter().fold(
            (QuadMat::identity(), R1Mat::identity()),
            |(g, gb), &l| (&g * &m[l as usize].0, &gb * &m[l as usize].1),
        ))
    }
}

/// Whether the words of [`generator_words`] evaluate to the `g_i`.
pub fn generator_words_match(letters: &Letters, set: &GeneratorSet) -> Result<bool> {
    for (i, w) in generator_words().iter().enumerate() {
        if letters.eval(w)?.0 != set.g[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
struct State {
    g: QuadMat,
    g_bar: R1Mat,
    word: Word,
}

#[derive(Clone, Debug)]
pub struct FilterReport {
    pub index_three: bool,
    pub tau_powers_excluded: bool,
    /// Vertices for which exactly one of `g, gτ, gτ²` reduces into the filter.
    pub unique_vertices: usize,
    pub failing_vertices: usize,
}

impl FilterReport {
    pub fn passed(&self) -> bool {
        self.index_three && self.tau_powers_excluded && self.failing_vertices == 0
    }
}

#[derive(Clone, Debug)]
pub struct TransitivityReport {
    pub radius: u32,
    pub ball_size: usize,
    pub reached: usize,
    /// Longest word used to reach a vertex of the ball.
    pub max_word: usize,
    /// A word reaching each vertex of the ball.
    pub words: BTreeMap<Vertex, Word>,
    pub filter: Option<FilterReport>,
}

impl TransitivityReport {
    pub fn covered(&self) -> bool {
        self.reached == self.ball_size
    }

    pub fn passed(&self) -> bool {
        self.covered() && self.filter.as_ref().is_none_or(|f| f.passed())
    }
}

/// The filter `J` with the order of the group it sits in.
pub struct Filter<'a> {
    pub group: &'a FiniteGroup,
    pub ambient_order: usize,
}

/// Walks outward from the base vertex, each step right-multiplying by one
/// of the fourteen neighbour words, so that depth `r` reaches the whole
/// ball of radius `r`.
pub fn transitivity_certificate(
    letters: &Letters,
    radius: u32,
    filter: Option<Filter<'_>>,
    cfg: PadicConfig,
) -> Result<TransitivityReport> {
    let target = ball(radius, cfg)?;
    let steps: Vec<(Word, QuadMat, R1Mat)> = neighbor_words()
        .into_iter()
        .map(|w| letters.eval(&w).map(|(g, gb)| (w, g, gb)))
        .collect::<Result<_>>()?;
    let base = Vertex::base();
    let start = State {
        g: QuadMat::identity(),
        g_bar: R1Mat::identity(),
        word: Vec::new(),
    };
    let mut first: BTreeMap<Vertex, State> = BTreeMap::from([(base, start.clone())]);
    let mut frontier = vec![start];
    for _ in 0..radius {
        let candidates: Vec<(Vertex, State)> = frontier
            .par_iter()
            .flat_map_iter(|s| {
                steps.iter().map(move |(w, m, mb)| State {
                    g: &s.g * m,
                    g_bar: &s.g_bar * mb,
                    word: [s.word.clone(), w.clone()].concat(),
                })
            })
            .map(|s| act_retry(&s.g, &Vertex::base(), cfg).map(|v| (v, s)))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (v, s) in candidates {
            if !first.contains_key(&v) {
                first.insert(v, s.clone());
                next.push(s);
            }
        }
        frontier = next;
    }
    let reached = target.iter().filter(|v| first.contains_key(v)).count();
    let filter = filter.map(|f| {
        let tau2 = &letters.tau_bar * &letters.tau_bar;
        let tau_powers = [R1Mat::identity(), letters.tau_bar.clone(), tau2.clone()];
        let mut unique = 0;
        let mut failing = 0;
        for v in &target {
            if let Some(s) = first.get(v) {
                let hits = tau_powers
                    .iter()
                    .filter(|t| f.group.contains(&(&s.g_bar * t)))
                    .count();
                if hits == 1 {
                    unique += 1;
                } else {
                    failing += 1;
                }
            }
        }
        FilterReport {
            index_three: f.ambient_order == 3 * f.group.order(),
            tau_powers_excluded: !f.group.contains(&letters.tau_bar) && !f.group.contains(&tau2),
            unique_vertices: unique,
            failing_vertices: failing,
        }
    });
    let words: BTreeMap<Vertex, Word> = target
        .iter()
        .filter_map(|v| first.get(v).map(|s| (v.clone(), s.word.clone())))
        .collect();
    Ok(TransitivityReport {
        radius,
        ball_size: target.len(),
        reached,
        max_word: words.values().map(Vec::len).max().unwrap_or(0),
        words,
        filter,
    })
}

#[derive(Clone, Debug)]
pub struct LetterSearch {
    pub budget: usize,
    pub ball_size: usize,
    pub reached: usize,
}

/// Breadth-first search over all words in `ρ^{±1}, τ^{±1}` of length at
/// most `budget`, keyed by the images of the base vertex and of `ρΛ₀`.
pub fn letter_search(
    letters: &Letters,
    radius: u32,
    budget: usize,
    cfg: PadicConfig,
) -> Result<LetterSearch> {
    let target = ball(radius, cfg)?;
    let mats = letters.mats()?;
    let base = Vertex::base();
    let rho_base = act_retry(&letters.rho, &base, cfg)?;
    let key_of = |g: &QuadMat| -> Result<(Vertex, Vertex)> {
        Ok((act_retry(g, &base, cfg)?, act_retry(g, &rho_base, cfg)?))
    };
    let mut seen: HashSet<(Vertex, Vertex)> = HashSet::from([key_of(&QuadMat::identity())?]);
    let mut hit: HashSet<Vertex> = HashSet::from([base.clone()]);
    let mut frontier = vec![QuadMat::identity()];
    for _ in 0..budget {
        let candidates: Vec<(QuadMat, (Vertex, Vertex))> = frontier
            .par_iter()
            .flat_map_iter(|g| mats.iter().map(move |(m, _)| g * m))
            .map(|g| key_of(&g).map(|k| (g, k)))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (g, k) in candidates {
            if seen.insert(k.clone()) {
                hit.insert(k.0);
                next.push(g);
            }
        }
        frontier = next;
    }
    Ok(LetterSearch {
        budget,
        ball_size: target.len(),
        reached: target.iter().filter(|v| hit.contains(v)).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_inversion() {
        assert_eq!(invert_word(&[R, T, TI]), vec![T, TI, RI]);
        assert_eq!(neighbor_words().len(), 14);
    }
}

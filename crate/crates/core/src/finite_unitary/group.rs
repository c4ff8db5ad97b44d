//! Explicit finite matrix groups over `R₁`, stored as sorted packed keys.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use crate::finite_ring::{R1Elem, R1Mat};

/// Nine entries, each one of nine ring elements, packed base 9.
pub type Key = u32;

pub fn key(m: &R1Mat) -> Key {
    let mut k = 0u32;
    for i in (0..3).rev() {
        for j in (0..3).rev() {
            k = k * 9 + m.m[i][j].index();
        }
    }
    k
}

pub fn unkey(mut k: Key) -> R1Mat {
    let mut m = R1Mat::zero();
    for i in 0..3 {
        for j in 0..3 {
            m.m[i][j] = R1Elem::from_index(k % 9);
            k /= 9;
        }
    }
    m
}

pub fn identity() -> R1Mat {
    R1Mat::identity()
}

pub fn inverse(m: &R1Mat) -> R1Mat {
    m.inverse().expect("group elements are invertible")
}

/// `α⁻¹β⁻¹αβ`.
pub fn commutator(a: &R1Mat, b: &R1Mat) -> R1Mat {
    &(&(&inverse(a) * &inverse(b)) * a) * b
}

/// `α^δ = δ⁻¹αδ`.
pub fn conjugate(a: &R1Mat, d: &R1Mat) -> R1Mat {
    &(&inverse(d) * a) * d
}

pub fn element_order(m: &R1Mat) -> usize {
    let id = identity();
    let mut p = m.clone();
    let mut n = 1;
    while p != id {
        p = &p * m;
        n += 1;
    }
    n
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<Key>,
    pub generators: Vec<R1Mat>,
}

impl FiniteGroup {
    pub fn from_keys(mut elements: Vec<Key>, generators: Vec<R1Mat>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        FiniteGroup {
            elements,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn keys(&self) -> &[Key] {
        &self.elements
    }

    pub fn contains_key(&self, k: Key) -> bool {
        self.elements.binary_search(&k).is_ok()
    }

    pub fn contains(&self, m: &R1Mat) -> bool {
        self.contains_key(key(m))
    }

    pub fn is_subset_of(&self, other: &FiniteGroup) -> bool {
        self.elements.iter().all(|&k| other.contains_key(k))
    }

    pub fn same_elements(&self, other: &FiniteGroup) -> bool {
        self.elements == other.elements
    }

    pub fn matrices(&self) -> impl Iterator<Item = R1Mat> + '_ {
        self.elements.iter().map(|&k| unkey(k))
    }

    /// Hash of the sorted element keys.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.elements.hash(&mut h);
        h.finish()
    }

    pub fn intersection_order(&self, other: &FiniteGroup) -> usize {
        self.elements
            .iter()
            .filter(|&&k| other.contains_key(k))
            .count()
    }

    /// Checks closure under products of generators and inverses of
    /// generators; with a finite element set this is closure as a group.
    pub fn is_closed(&self) -> bool {
        self.matrices().all(|m| {
            self.generators
                .iter()
                .all(|g| self.contains(&(&m * g)) && self.contains(&(&m * &inverse(g))))
        })
    }

    /// Text dump: one key per line, sorted.
    pub fn dump(&self) -> String {
        let mut s = String::with_capacity(self.elements.len() * 10);
        for k in &self.elements {
            s.push_str(&k.to_string());
            s.push('\n');
        }
        s
    }
}

/// The group generated by `gens`; `None` once more than `limit` elements
/// have been found.
pub fn closure_bounded(gens: &[R1Mat], limit: usize) -> Option<FiniteGroup> {
    let id = identity();
    let mut seen: HashSet<Key> = HashSet::new();
    seen.insert(key(&id));
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if seen.insert(key(&y)) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(FiniteGroup::from_keys(
        seen.into_iter().collect(),
        gens.to_vec(),
    ))
}

pub fn closure(gens: &[R1Mat]) -> FiniteGroup {
    closure_bounded(gens, usize::MAX).expect("unbounded closure")
}

/// A fixed finite group with elements indexed `0..n`, for repeated
/// subgroup computations inside it.
pub struct Ambient {
    pub group: FiniteGroup,
    mats: Vec<R1Mat>,
    index: HashMap<Key, u32>,
}

impl Ambient {
    pub fn new(group: FiniteGroup) -> Self {
        let mats: Vec<R1Mat> = group.matrices().collect();
        let index = group
            .keys()
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i as u32))
            .collect();
        Ambient { group, mats, index }
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn mat(&self, i: u32) -> &R1Mat {
        &self.mats[i as usize]
    }

    pub fn index_of(&self, m: &R1Mat) -> Option<u32> {
        self.index.get(&key(m)).copied()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index_of(&(self.mat(a) * self.mat(b)))
            .expect("ambient group is closed")
    }

    /// Subgroup generated by the given element indices, as a sorted index
    /// list; `None` when it exceeds `limit` elements.
    pub fn closure(&self, gens: &[u32], limit: usize) -> Option<Vec<u32>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let id = self.index_of(&identity()).expect("identity present");
        seen[id as usize] = true;
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    if out.len() > limit {
                        return None;
                    }
                }
            }
        }
        out.sort_unstable();
        Some(out)
    }

    pub fn to_group(&self, idx: &[u32], generators: Vec<R1Mat>) -> FiniteGroup {
        FiniteGroup::from_keys(idx.iter().map(|&i| key(self.mat(i))).collect(), generators)
    }

    pub fn indices_of(&self, g: &FiniteGroup) -> Vec<u32> {
        let mut v: Vec<u32> = g
            .keys()
            .iter()
            .map(|k| *self.index.get(k).expect("subgroup of the ambient group"))
            .collect();
        v.sort_unstable();
        v
    }
}

/// `g* · form · g = c · form` for some `c ∈ {1, −1}`; returns that `c`.
pub fn unitary_factor(g: &R1Mat, form: &R1Mat) -> Option<R1Elem> {
    let lhs = &(&g.star() * form) * g;
    [R1Elem::ONE, -R1Elem::ONE]
        .into_iter()
        .find(|c| lhs == form.scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_roundtrip() {
        let m = R1Mat::from_fn(|i, j| R1Elem::from_index(((i * 3 + j) * 5 % 9) as u32));
        assert_eq!(unkey(key(&m)), m);
        assert!(key(&m) < 9u32.pow(9));
    }

    #[test]
    fn small_closure() {
        let w = R1Mat::new([
            [R1Elem::ZERO, -R1Elem::ONE, R1Elem::ZERO],
            [R1Elem::ONE, R1Elem::ZERO, R1Elem::ZERO],
            [R1Elem::ZERO, R1Elem::ZERO, R1Elem::ONE],
        ]);
        let g = closure(&[w.clone()]);
        assert_eq!(g.order(), 4);
        assert_eq!(element_order(&w), 4);
        assert!(g.is_closed());
        assert!(closure_bounded(&[w], 3).is_none());
    }
}

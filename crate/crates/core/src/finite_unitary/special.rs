//! The special elements of `U′₁` and the relations among them.

use crate::finite_ring::{R1Elem, R1Mat};

use super::group::{commutator, conjugate, element_order, identity, inverse};

fn e(s: &str) -> R1Elem {
    match s {
        "0" => R1Elem::new(0, 0),
        "1" => R1Elem::new(1, 0),
        "-1" => R1Elem::new(-1, 0),
        "t" => R1Elem::new(0, 1),
        "-t" => R1Elem::new(0, -1),
        "1+t" => R1Elem::new(1, 1),
        "1-t" => R1Elem::new(1, -1),
        "-1+t" => R1Elem::new(-1, 1),
        "-1-t" => R1Elem::new(-1, -1),
        _ => panic!("unknown entry {s}"),
    }
}

/// A matrix from rows of entry strings such as `"1-t"`.
pub fn r1mat(rows: [[&str; 3]; 3]) -> R1Mat {
    R1Mat::from_fn(|i, j| e(rows[i][j]))
}

pub fn mul_all(ms: &[&R1Mat]) -> R1Mat {
    ms.iter().fold(identity(), |acc, m| &acc * m)
}

#[derive(Clone, Debug)]
pub struct SpecialElements {
    pub z: R1Mat,
    pub u: R1Mat,
    pub w: R1Mat,
    pub b1: R1Mat,
    pub b2: R1Mat,
    pub c1: R1Mat,
    pub c2: R1Mat,
    pub d1: R1Mat,
    pub d2: R1Mat,
    pub d3: R1Mat,
    pub d4: R1Mat,
}

impl SpecialElements {
    pub fn new() -> Self {
        SpecialElements {
            z: r1mat([["1+t", "0", "0"], ["0", "1+t", "0"], ["0", "0", "1+t"]]),
            u: r1mat([["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1-t"]]),
            w: r1mat([["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "1"]]),
            b1: r1mat([["1", "0", "t"], ["0", "1", "0"], ["0", "0", "1"]]),
            b2: r1mat([["1", "0", "0"], ["0", "1", "t"], ["0", "0", "1"]]),
            c1: r1mat([["1", "t", "1"], ["0", "1", "0"], ["0", "-t", "1"]]),
            c2: r1mat([["1", "0", "0"], ["-t", "1", "1"], ["t", "0", "1"]]),
            d1: r1mat([["1+t", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]),
            d2: r1mat([["1", "0", "0"], ["0", "1+t", "0"], ["0", "0", "1"]]),
            d3: r1mat([["1", "t", "0"], ["0", "1", "0"], ["0", "0", "1"]]),
            d4: r1mat([["1", "0", "0"], ["t", "1", "0"], ["0", "0", "1"]]),
        }
    }

    pub fn named(&self) -> Vec<(&'static str, &R1Mat)> {
        vec![
            ("z", &self.z),
            ("u", &self.u),
            ("w", &self.w),
            ("b1", &self.b1),
            ("b2", &self.b2),
            ("c1", &self.c1),
            ("c2", &self.c2),
            ("d1", &self.d1),
            ("d2", &self.d2),
            ("d3", &self.d3),
            ("d4", &self.d4),
        ]
    }

    pub fn t_gens(&self) -> Vec<R1Mat> {
        vec![self.b1.clone(), self.b2.clone()]
    }

    pub fn h_gens(&self) -> Vec<R1Mat> {
        vec![self.z.clone(), self.c1.clone(), self.c2.clone()]
    }

    pub fn m_gens(&self) -> Vec<R1Mat> {
        vec![
            self.d1.clone(),
            self.d2.clone(),
            self.d3.clone(),
            self.d4.clone(),
        ]
    }

    pub fn s_gens(&self) -> Vec<R1Mat> {
        vec![self.u.clone(), self.w.clone()]
    }

    pub fn p_gens(&self) -> Vec<R1Mat> {
        vec![self.w.clone(), conjugate(&self.w, &self.u)]
    }

    pub fn d1d2(&self) -> R1Mat {
        &self.d1 * &self.d2
    }
}

impl Default for SpecialElements {
    fn default() -> Self {
        Self::new()
    }
}

/// One identity from the relation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub group: &'static str,
    pub statement: String,
    pub holds: bool,
}

fn rel(group: &'static str, statement: &str, lhs: R1Mat, rhs: R1Mat) -> Relation {
    Relation {
        group,
        statement: statement.to_string(),
        holds: lhs == rhs,
    }
}

/// Every identity of the relation tables, literally as stated.
/// `centralizes` lists generators against which `z` is tested for
/// centrality.
pub fn relation_suite(s: &SpecialElements, centralizes: &[R1Mat]) -> Vec<Relation> {
    let inv = inverse;
    let one = identity();
    let mut out = Vec::new();
    for (name, m) in s.named() {
        let expect = if name == "w" { 4 } else { 3 };
        out.push(Relation {
            group: "orders",
            statement: format!("order({name}) = {expect}"),
            holds: element_order(m) == expect,
        });
    }
    out.push(Relation {
        group: "heisenberg",
        statement: "z is central".into(),
        holds: centralizes.iter().all(|g| &s.z * g == g * &s.z),
    });
    out.push(rel("heisenberg", "[c1,c2] = z", commutator(&s.c1, &s.c2), s.z.clone()));
    for (a, an) in [(&s.b1, "b1"), (&s.b2, "b2")] {
        for (b, bn) in [(&s.b1, "b1"), (&s.b2, "b2")] {
            if an < bn {
                out.push(rel("vector", &format!("[{an},{bn}] = 1"), commutator(a, b), one.clone()));
            }
        }
        for (b, bn) in [(&s.z, "z"), (&s.c1, "c1"), (&s.c2, "c2")] {
            out.push(rel("vector", &format!("[{an},{bn}] = 1"), commutator(a, b), one.clone()));
        }
    }
    let ds = [(&s.d1, "d1"), (&s.d2, "d2"), (&s.d3, "d3"), (&s.d4, "d4")];
    for (a, an) in ds {
        for (b, bn) in ds {
            if an < bn {
                out.push(rel("vector", &format!("[{an},{bn}] = 1"), commutator(a, b), one.clone()));
            }
        }
        for (b, bn) in [(&s.b1, "b1"), (&s.b2, "b2")] {
            out.push(rel("vector", &format!("[{bn},{an}] = 1"), commutator(b, a), one.clone()));
        }
    }
    let (u, w) = (&s.u, &s.w);
    out.push(rel("sl2", "[u,w^2] = 1", commutator(u, &(w * w)), one.clone()));
    out.push(rel(
        "sl2",
        "wuw = u^-1 w u^-1",
        mul_all(&[w, u, w]),
        mul_all(&[&inv(u), w, &inv(u)]),
    ));
    out.push(rel(
        "sl2",
        "wu^-1w = u w^-1 u",
        mul_all(&[w, &inv(u), w]),
        mul_all(&[u, &inv(w), u]),
    ));
    let (b1, b2, c1, c2) = (&s.b1, &s.b2, &s.c1, &s.c2);
    out.push(rel("s_on_t", "b1^u = b1", conjugate(b1, u), b1.clone()));
    out.push(rel("s_on_t", "b2^u = b1^-1 b2", conjugate(b2, u), &inv(b1) * b2));
    out.push(rel("s_on_t", "b1^w = b2^-1", conjugate(b1, w), inv(b2)));
    out.push(rel("s_on_t", "b2^w = b1", conjugate(b2, w), b1.clone()));
    out.push(rel("s_on_h", "c1^u = b1^-1 c1", conjugate(c1, u), &inv(b1) * c1));
    out.push(rel(
        "s_on_h",
        "c2^u = b1^-1 c1^-1 c2",
        conjugate(c2, u),
        mul_all(&[&inv(b1), &inv(c1), c2]),
    ));
    out.push(rel("s_on_h", "c1^w = c2^-1", conjugate(c1, w), inv(c2)));
    out.push(rel("s_on_h", "c2^w = c1", conjugate(c2, w), c1.clone()));
    let (d1, d2, d3, d4) = (&s.d1, &s.d2, &s.d3, &s.d4);
    let h_on_m = [
        ("d1^c1 = b1 d1", d1, c1, b1 * d1),
        ("d2^c1 = d2", d2, c1, d2.clone()),
        ("d3^c1 = d3", d3, c1, d3.clone()),
        ("d4^c1 = b2 d4", d4, c1, b2 * d4),
        ("d1^c2 = d1", d1, c2, d1.clone()),
        ("d2^c2 = b2 d2", d2, c2, b2 * d2),
        ("d3^c2 = b1 d3", d3, c2, b1 * d3),
        ("d4^c2 = d4", d4, c2, d4.clone()),
    ];
    for (st, a, c, r) in h_on_m {
        out.push(rel("h_on_m", st, conjugate(a, c), r));
    }
    let s_on_m = [
        ("d1^u = d1 d3", d1, u, d1 * d3),
        ("d2^u = d2 d3^-1", d2, u, d2 * &inv(d3)),
        ("d3^u = d3", d3, u, d3.clone()),
        (
            "d4^u = d1^-1 d2 d3^-1 d4",
            d4,
            u,
            mul_all(&[&inv(d1), d2, &inv(d3), d4]),
        ),
        ("d1^w = d2", d1, w, d2.clone()),
        ("d2^w = d1", d2, w, d1.clone()),
        ("d3^w = d4^-1", d3, w, inv(d4)),
        ("d4^w = d3^-1", d4, w, inv(d3)),
    ];
    for (st, a, c, r) in s_on_m {
        out.push(rel("s_on_m", st, conjugate(a, c), r));
    }
    out
}

/// Corrected forms of the identities that fail as stated.
pub fn corrected_relations(s: &SpecialElements) -> Vec<Relation> {
    let inv = inverse;
    let rhs = mul_all(&[&inv(&s.b1), &inv(&s.c1), &s.c2]);
    let lhs = conjugate(&s.c2, &s.u);
    let centre = [identity(), s.z.clone(), &s.z * &s.z];
    vec![
        rel(
            "s_on_h",
            "c2^u = b1^-1 c1^-1 c2 z^-1",
            lhs.clone(),
            &rhs * &inv(&s.z),
        ),
        Relation {
            group: "s_on_h",
            statement: "c2^u = b1^-1 c1^-1 c2 modulo <z>".into(),
            holds: centre.iter().any(|c| lhs == &rhs * c),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_suite_fails_only_at_c2_u() {
        let s = SpecialElements::new();
        let rels = relation_suite(&s, &[]);
        let failed: Vec<_> = rels.iter().filter(|r| !r.holds).collect();
        assert_eq!(failed.len(), 1, "{failed:?}");
        assert_eq!(failed[0].statement, "c2^u = b1^-1 c1^-1 c2");
        assert!(corrected_relations(&s).iter().all(|r| r.holds));
    }
}

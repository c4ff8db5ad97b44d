use std::collections::BTreeSet;

use cmsz_core::appendix_search::*;

#[test]
fn v_is_stable_under_g2() {
    let e = enumerate_v().unwrap();
    assert_eq!(e.v.len(), 24);
    assert!(e.routes_agree());
    for g in g2() {
        let image: BTreeSet<HalfLatticeVec> = e
            .v
            .iter()
            .map(|v| HalfLatticeVec::from_quad(&g.mul_vec(&v.to_quad())).unwrap())
            .collect();
        assert_eq!(image, e.v);
    }
    for v in &e.v {
        assert!(in_v(v));
        assert!(e.v.contains(&v.neg()));
    }
}

#[test]
fn eigen_bound_holds() {
    assert!(eigen_bound_certificate().unwrap().passed());
}

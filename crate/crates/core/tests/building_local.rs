use std::collections::BTreeSet;

use cmsz_core::building::*;
use cmsz_core::cmsz_generators::*;
use cmsz_core::exact_ring::PadicConfig;
use cmsz_core::finite_unitary::*;

fn letters(set: &GeneratorSet, m: &ModelImage) -> Letters {
    Letters {
        rho: set.rho.clone(),
        tau: set.tau.clone(),
        rho_bar: m.rho_bar.clone(),
        tau_bar: m.tau_bar.clone(),
    }
}

#[test]
fn generators_move_base_to_its_neighbors() {
    let cfg = PadicConfig::default();
    let set = derive_generators().unwrap();
    let base = Vertex::base();
    assert_eq!(act(&set.tau, &base, cfg).unwrap(), base);
    assert_ne!(act(&set.rho, &base, cfg).unwrap(), base);
    assert_eq!(label_cocycle(&set.rho).unwrap(), 1);

    let n: BTreeSet<Vertex> = neighbors(&base, cfg).unwrap().into_iter().collect();
    let mut images = BTreeSet::new();
    for i in 0..7 {
        images.insert(act(&set.g[i], &base, cfg).unwrap());
        images.insert(act(&set.inverse(i), &base, cfg).unwrap());
    }
    assert_eq!(n.len(), 14);
    assert_eq!(n, images);
}

#[test]
fn chambers_match_triangle_presentation() {
    let cfg = PadicConfig::default();
    let set = derive_generators().unwrap();
    let f = triangle_presentation(&set).unwrap();
    let ch = chamber_report(&set, &f, cfg).unwrap();
    assert_eq!(ch.geometric_count, 21);
    assert!(ch.bijective);
    assert!(ch.labels_bijective);
    assert!(ch.rotation_rule);
    assert!(ch.tau_rule);
}

#[test]
fn balls_have_expected_sizes() {
    let cfg = PadicConfig::default();
    assert_eq!(ball(1, cfg).unwrap().len(), 15);
    assert_eq!(ball(2, cfg).unwrap().len(), 113);
}

#[test]
fn words_reach_every_vertex_of_small_balls() {
    let cfg = PadicConfig::default();
    let set = derive_generators().unwrap();
    let m = model_image(&SpecialElements::new());
    let l = letters(&set, &m);
    assert!(generator_words_match(&l, &set).unwrap());
    for (r, size) in [(1, 15), (2, 113)] {
        let rep = transitivity_certificate(&l, r, None, cfg).unwrap();
        assert_eq!(rep.ball_size, size);
        assert!(rep.covered());
        assert!(rep.max_word <= 8 * r as usize);
        for (v, w) in &rep.words {
            let (g, _) = l.eval(w).unwrap();
            assert_eq!(&act(&g, &Vertex::base(), cfg).unwrap(), v);
        }
    }
}

#[test]
fn filters_separate_the_j_groups() {
    let cfg = PadicConfig::default();
    let s = SpecialElements::new();
    let set = derive_generators().unwrap();
    let m = model_image(&s);
    let l = letters(&set, &m);
    for (name, j) in j_groups(&s) {
        let filter = Filter {
            group: &j,
            ambient_order: m.image.order(),
        };
        let rep = transitivity_certificate(&l, 2, Some(filter), cfg).unwrap();
        let f = rep.filter.expect("filter requested");
        assert!(f.index_three, "{name}");
        if name == "J4" {
            assert!(!f.tau_powers_excluded);
            assert!(!f.passed());
        } else {
            assert!(f.passed(), "{name}");
            assert_eq!(f.unique_vertices, 113, "{name}");
        }
    }
}

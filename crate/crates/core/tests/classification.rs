use cmsz_core::finite_unitary::*;

fn class_of(amb: &Ambient, c: &Classification, j: &FiniteGroup) -> Option<usize> {
    let idx = amb.indices_of(j);
    c.classes.iter().position(|cl| cl.contains(&idx))
}

#[test]
fn model_classification_and_torsion() {
    let s = SpecialElements::new();
    let m = model_image(&s);
    assert_eq!(m.image.order(), MODEL_ORDER);
    assert!(m.descriptions_agree());
    assert!(m.level0_is_u0);

    let failing: Vec<&str> = m.words.iter().filter(|w| !w.holds).map(|w| w.statement.as_str()).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0].starts_with("b1 ="));
    assert!(corrected_b1_word(&s, &m.rho_bar, &m.tau_bar).iter().all(|w| w.holds));

    let amb = Ambient::new(m.image.clone());
    let seed = sylow2_generators(&s);
    let c = classify_index3(&amb, &seed);
    assert_eq!(c.index3.len(), 4);
    assert_eq!(c.classes.len(), 4);

    let js = j_groups(&s);
    let mut classes: Vec<usize> = js.iter().map(|(_, j)| class_of(&amb, &c, j).unwrap()).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(classes.len(), 4);

    for (name, j) in &js {
        assert_eq!(j.order(), 11_664, "{name}");
        let t = torsion_certificate(&amb, j, &m.rho_bar, &m.tau_bar);
        let torsion_free = matches!(name.as_ref(), "J1" | "J2");
        assert_eq!(t.hits == 0, torsion_free, "{name}");
    }

    // Reordering the seed generators must not change the result.
    let mut shuffled = seed.clone();
    shuffled.reverse();
    shuffled.rotate_left(1);
    let c2 = classify_index3(&amb, &shuffled);
    let sorted = |c: &Classification| {
        let mut v = c.index3.clone();
        v.sort();
        v
    };
    assert_eq!(sorted(&c), sorted(&c2));
    assert_eq!(c.classes, c2.classes);
}

#[test]
fn quaternion_and_irreducibility() {
    let s = SpecialElements::new();
    let q = quaternion_check(&s);
    assert_eq!(q.order, 8);
    assert_eq!(q.involutions, 1);
    assert_eq!(q.order_four, 6);
    assert!(h_image_irreducible(&s));
}

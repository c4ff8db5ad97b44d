use cmsz_core::finite_unitary::*;

#[test]
fn u1_routes_agree_with_expected_orders() {
    let s = SpecialElements::new();
    let en = enumerate_u1(&s).unwrap();
    assert_eq!(en.u1.order(), U1_ORDER);
    assert_eq!(en.u1_plus.order(), U1_PLUS_ORDER);
    assert_eq!(en.rejected_candidates, 0);
    assert!(en.all_unitary);
    assert!(en.det_kernel_is_plus);
    assert!(level0_image(&en.u1).same_elements(&enumerate_u0()));
    let checks = structure_check(&s, &en);
    for c in &checks {
        assert!(c.holds, "{c:?}");
    }
}

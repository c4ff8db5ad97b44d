//! Finite unitary groups over `R₁`: enumeration, relations, the image of
//! the integral model and its index-3 subgroups.

mod enumerate;
mod group;
mod special;

pub use enumerate::{
    degenerate_form_group_order, enumerate_u0, enumerate_u1, enumerate_u1_parametrized,
    level0_image, sl2_f3, structure_check, StructureCheck, U1Enumeration, J, U0_ORDER, U1_ORDER,
    U1_PLUS_ORDER,
};
pub use group::{
    closure, closure_bounded, commutator, conjugate, element_order, identity, inverse, key,
    unitary_factor, unkey, Ambient, FiniteGroup, Key,
};
pub use special::{corrected_relations, mul_all, r1mat, relation_suite, Relation, SpecialElements};

mod classify;
mod model;

pub use classify::{
    base_generators, classify_index3, det_image_check, h_image_irreducible, j_groups,
    quaternion_check, sylow2_generators, torsion_certificate, Classification, DetImage,
    QuaternionCheck, Sub, TorsionCertificate,
};
pub use model::{
    corrected_b1_word, described_generators, model_image, expected_rho_bar, expected_tau_bar,
    rho_bar, scalar_matrices, tau_bar, word_identities, ModelImage, MODEL_ORDER,
};

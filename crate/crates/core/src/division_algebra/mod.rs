//! The cubic field `L = K(η)`, the cyclic division algebra `D` over `K`,
//! its involutions, the element `b`, the pairing `ψ` and the order `O_D`.

mod algebra;
mod checks;
mod cubic;

pub use algebra::{mu, DElem};
pub use checks::{
    b_checks, b_element, det_square_check, determinant, embed_check, embedded, gstar_membership,
    involution_b, k_to_quad_int, leading_minors, nu2, order_and_pairing_checks, order_basis,
    order_coords, psi, random_d, sigma_check, star_check, BCheck, DElemQ, DetSquareCheck,
    EmbedCheck, KElem, LElem, NormalizedDet, OrderCheck, SigmaCheck, StarCheck, SAMPLE_PAIRS,
    SAMPLE_SEED,
};
pub use cubic::Cubic;

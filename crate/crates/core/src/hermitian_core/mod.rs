//! 3×3 matrices over involutive rings and the Hermitian forms of the
//! unitary group.

mod forms;
mod matrix;

pub use forms::{
    charpoly, eval_poly, phi, q_form, q_prime, q_prime_expected, rat, similitude_factor, to_k,
    twist_check, KMat, QuadMat, TwistReport,
};
pub use matrix::{product, sesquilinear, RingMat3};

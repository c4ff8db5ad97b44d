//! The rings `R₀ = F₃` and `R₁ = F₃[t]/(t²)` and the reductions of the
//! integral model modulo the prime above 3.

mod r1;
mod reduce;

pub use r1::R1Elem;
pub use reduce::{
    q1_form, reduce_lambda, reduce_matrix, reduce_scalar, scalar_image, Level, R1Mat,
};

//! Exact arithmetic in `O_K[1/2]`, `K = Q(√-15)`, and its 2-adic completion.

mod padic;
mod quad;
mod quad_int;

pub use padic::{embed_2adic, lambda_root, PadicConfig, Padic2, MAX_PRECISION};
pub use quad::Quad;
pub use quad_int::QuadInt;

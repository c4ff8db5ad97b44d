pub mod appendix_search;
pub mod building;
pub mod cmsz_generators;
pub mod division_algebra;
pub mod error;
pub mod exact_ring;
pub mod finite_ring;
pub mod finite_unitary;
pub mod hermitian_core;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};

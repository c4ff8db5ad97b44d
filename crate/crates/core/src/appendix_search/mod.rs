//! Exhaustive search for the matrices of the unitary group preserving `Z₂³`.

mod stabilizer;
mod vectors;

pub use stabilizer::{
    entry_domain, factor_normalization, stabilizer_search, CaseOutcomes, CaseReport,
    EntryDomain, FactorNormalization, StabilizerSearch, CASE_COLUMNS,
};
pub use vectors::{
    eigen_bound_certificate, enumerate_v, f_prime, g2, gram_f, half_lattice_coords, in_half_lattice,
    in_v, norm_q, quadratic_form_f, EigenBound, HalfLatticeVec, VEnumeration, SEEDS,
};

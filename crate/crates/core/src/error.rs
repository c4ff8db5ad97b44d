use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("2-adic precision exhausted: need {needed} bits, have {available}")]
    PrecisionExhausted { needed: u32, available: u32 },

    #[error("precision {0} is outside the supported range 8..=128")]
    BadPrecision(u32),

    #[error("valuation of zero is infinite")]
    ZeroValuation,

    #[error("matrix is not invertible over the ring: {0}")]
    NotInvertible(String),

    #[error("matrix is not a similitude of the form")]
    NotSimilitude,

    #[error("form is not Hermitian")]
    NotHermitian,

    #[error("relation failed: {0}")]
    RelationFailed(String),

    #[error("count mismatch for {what}: expected {expected}, found {found}")]
    CountMismatch {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("word budget of length {0} exhausted before the ball was covered")]
    BudgetExhausted(usize),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

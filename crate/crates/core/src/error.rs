use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring has {0} variables; at most {max} are supported", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("computation budget exceeded")]
    BudgetExceeded,

    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),

    #[error("matrix has odd dimension {0}")]
    OddDimension(usize),

    #[error("quotient ring is not Artinian")]
    NotArtinian,

    #[error("exponent overflow")]
    ExponentOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;

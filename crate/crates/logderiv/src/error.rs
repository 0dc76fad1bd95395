//! Error type shared across the engine.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unknown variable `{name}` at line {line}, column {col}")]
    UnknownVariable { name: String, line: usize, col: usize },

    #[error("singular change-of-variables matrix")]
    SingularMatrix,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("input is zero where a nonzero polynomial is required")]
    ZeroInput,

    #[error("curve is not reduced: {0}")]
    NotReduced(String),

    #[error("curves share a common component")]
    CommonComponent,

    #[error("quotient is not finite-dimensional")]
    InfiniteDimensional,

    #[error("scheme is positive-dimensional where points were expected")]
    PositiveDimensional,

    #[error("no certified chart found after {tries} attempts")]
    ChartRetriesExhausted { tries: u32 },

    #[error("retry bound exhausted: {0}")]
    RetriesExhausted(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("coefficient not defined in this field (denominator divisible by the modulus)")]
    BadCoefficient,

    #[error("empty linear system")]
    EmptyLinearSystem,

    #[error("pair queue limit {0} exceeded (see LOGDERIV_MAX_PAIRS)")]
    PairQueueLimit(usize),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(String),
}

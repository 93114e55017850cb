use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("grid too large for dense assembly: {points} points exceeds the {max} point cap")]
    GridTooLarge { points: usize, max: usize },

    #[error("assembled operator is not Hermitian (defect {defect:.3e})")]
    NonHermitian { defect: f64 },

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("bracket error: {0}")]
    Bracket(String),

    #[error("solver did not converge after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("solver diverged: {0}")]
    Divergence(String),

    #[error("insufficient support: {0}")]
    InsufficientSupport(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed field dump: {0}")]
    BadDump(String),
}

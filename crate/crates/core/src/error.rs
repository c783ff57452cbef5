use thiserror::Error;

/// Errors raised by the algebra, homology and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("not exactly divisible; remainder {remainder}")]
    NotDivisible { remainder: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("size {size} exceeds the configured bound {bound}")]
    TooLarge { size: usize, bound: usize },

    #[error("cannot substitute into variable {var}: {reason}")]
    BadSubstitution { var: usize, reason: String },

    #[error("invalid weight at index {index}: {reason}")]
    InvalidWeight { index: usize, reason: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

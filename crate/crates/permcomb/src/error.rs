use thiserror::Error;

/// Errors shared by the matrix builders, permanent engines, sequence
/// generators and permutation enumerators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("index out of range: {what}")]
    IndexOutOfRange { what: String },

    #[error("dimension must be positive and even, got {n}")]
    OddDimension { n: usize },

    #[error("invalid parameter: {0}")]
    Domain(String),

    #[error("{engine} engine handles sides up to {max}, got {side}")]
    SizeGuard {
        engine: &'static str,
        side: usize,
        max: usize,
    },

    #[error("dp table for side {side} needs about {required} bytes, budget is {budget}")]
    MemoryBudget {
        side: usize,
        required: u128,
        budget: u128,
    },

    #[error("enumeration budget exceeded: n = {n}, limit {max}")]
    EnumerationBudget { n: usize, max: usize },

    #[error("expected an integer value: {0}")]
    NotInteger(String),

    #[error("divisibility check failed: {0}")]
    NotDivisible(String),

    #[error("permutation length must be even, got {0}")]
    OddLength(usize),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

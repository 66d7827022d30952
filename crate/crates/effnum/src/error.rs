use thiserror::Error;

/// Errors produced by construction and evaluation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vector must have at least one entry")]
    Empty,

    #[error("entry {index} is {value}; entries must be finite and >= 0")]
    BadWeight { index: usize, value: f64 },

    #[error("entries sum to {sum}, expected {expected} (tolerance {tol:e}); use the renormalizing constructor to rescale")]
    SumMismatch { sum: f64, expected: f64, tol: f64 },

    #[error("cannot renormalize: entries sum to zero")]
    ZeroSum,

    #[error("alpha must lie in (0, 1], got {0}")]
    BadAlpha(f64),

    #[error("tabulated counting function invalid: {0}")]
    BadTable(String),

    #[error("transfer precondition violated: {0}")]
    BadTransfer(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vectors are not orthonormal: {0}")]
    NotOrthonormal(String),

    #[error("state norm^2 is {norm_sq}, expected 1 (tolerance {tol:e}); use the renormalizing constructor to rescale")]
    NotNormalized { norm_sq: f64, tol: f64 },

    #[error("subspace partition invalid: {0}")]
    BadPartition(String),

    #[error("partial decomposition covers dimension {covered} of {n}; use count_subspace_subset for partial families")]
    PartialDecomposition { covered: usize, n: usize },

    #[error("measure evaluation failed: {0}")]
    EvalFailed(String),

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::ring::RingError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("the zero matrix has no bidiagonal reduction")]
    ZeroMatrix,
    #[error("state has no box-ball encoding: {0}")]
    NotRepresentable(String),
    #[error("box-ball configuration holds no balls")]
    EmptyConfiguration,
    /// The rendered states visited before giving up, one per line.
    #[error("iteration cap of {cap} exceeded without termination")]
    CapExceeded { cap: usize, trace: Vec<String> },
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorOutOfRange { k: usize, rows: usize, cols: usize },
    #[error("{value} is not a unit times a power of {prime}")]
    NotPrimePower { value: String, prime: String },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

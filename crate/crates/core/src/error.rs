use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("invalid permutation {perm:?} on {len} factors")]
    InvalidPermutation { perm: Vec<usize>, len: usize },
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("scalar law violated: {0}")]
    ScalarLaw(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

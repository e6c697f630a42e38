use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {series}{rank}: {reason}")]
    UnsupportedType {
        series: char,
        rank: usize,
        reason: String,
    },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("Weyl group of order {order} exceeds the enumeration cap of {cap} elements")]
    WeylOrderCap { order: u128, cap: usize },
    #[error("{0} is not a minimal coset representative for this parabolic")]
    NotMinimalRepresentative(String),
    #[error("simple root index {index} lies in the Levi part of the parabolic; no divisor class")]
    LeviIndex { index: usize },
    #[error("index {index} out of range (rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {0} is not dominant")]
    NonDominantWeight(String),
    #[error("classes belong to different flag varieties")]
    SpaceMismatch,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("non-integral structure constant {0} produced by rational elimination")]
    NonIntegral(String),
    #[error("unsupported computation: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

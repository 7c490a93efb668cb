use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("{what} exceeds cap: requested {requested}, cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{0}/{1} is not a skew shape (second not contained in first)")]
    NotContained(String, String),
    #[error("skew shape {0}/{1} is not a horizontal strip")]
    NotHorizontalStrip(String, String),
    #[error("shuffle is not reversible: pmf({0}) != pmf of its inverse")]
    NonReversible(String),
    #[error("unsupported shuffle kind for this operation: {0}")]
    UnsupportedKind(String),
    #[error("operation requires rational weights, got a real-valued weight")]
    NonRationalWeight,
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid probability: {0}")]
    InvalidProbability(String),
    #[error("invalid shuffle spec: {0}")]
    InvalidSpec(String),
    #[error("invalid box target: {0}")]
    InvalidBox(String),
}

pub type Result<T> = std::result::Result<T, Error>;

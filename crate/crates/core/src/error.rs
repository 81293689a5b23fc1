use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid instance size n = {0} (need n >= 3)")]
    InvalidSize(usize),

    #[error("invalid edge {{{i}, {j}}} on {n} vertices")]
    InvalidEdge { i: usize, j: usize, n: usize },

    #[error("n = {0} is not a supported power of two (need n = 2^k with k >= 2)")]
    UnsupportedModulus(usize),

    #[error("invalid cost permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid edge-length vector: {0}")]
    InvalidVector(String),

    #[error("invalid encoding sequence: {0}")]
    InvalidEncoding(String),

    #[error("cycle extension undefined: s_(k-1) is skipped in {0}")]
    ExtensionUndefined(String),

    #[error("k = {k} out of range (need k >= {min})")]
    OutOfRange { k: u32, min: u32 },

    #[error("resource limit: {what} n = {n} exceeds bound {bound}")]
    ResourceLimit { what: &'static str, n: usize, bound: usize },

    #[error("point is not a member of the point set")]
    NotAMember,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty point set")]
    EmptyPointSet,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

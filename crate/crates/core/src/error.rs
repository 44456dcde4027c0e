use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("segments share an endpoint")]
    SharedEndpoint,
    #[error("point {0} is not a strict vertex of the convex hull")]
    NotConvex(usize),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("rank {rank} out of range for universe of size {universe}")]
    RankOutOfRange { rank: String, universe: String },
    #[error("not a Dyck word: {0}")]
    InvalidDyck(String),
    #[error("permutation contains a 231 pattern at positions {0:?}")]
    Not231Avoiding((usize, usize, usize)),
    #[error("not a permutation of 1..n: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("advice tape ended in the middle of an Elias delta code")]
    TruncatedCode,
    #[error("advice tape exhausted: needed {needed} more bit(s) at position {position}")]
    TapeExhausted { position: usize, needed: usize },

    #[error("matching is not perfect: {0}")]
    NotPerfect(String),
    #[error("edges {0:?} and {1:?} cross")]
    CrossingDetected((usize, usize), (usize, usize)),

    #[error("point {point} tried to match unavailable point {target}")]
    IllegalMatch { point: usize, target: usize },
    #[error("points {0} and {1} share an x-coordinate")]
    DuplicateX(usize, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid interval subset: {0}")]
    BadSubset(String),
    #[error("argument outside the domain: {0}")]
    DomainError(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

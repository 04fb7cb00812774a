use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),

    #[error("root interval ({start},{end}) out of range for rank {rank}")]
    IntervalOutOfRange { start: usize, end: usize, rank: usize },

    #[error("label has {got} entries, expected {expected}")]
    LabelLength { got: usize, expected: usize },

    #[error("highest weight label entry {index} is negative ({value})")]
    NegativeLabel { index: usize, value: i64 },

    #[error("desk-scale bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("construction inconsistency: {0}")]
    Construction(String),

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("vector field {0} is not divergence-zero")]
    NotDivergenceZero(String),

    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

use alloc::string::String;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("word is not reduced")]
    NotReduced,

    #[error("word is not a reduced expression of the longest element")]
    NotLongest,

    #[error("words represent different Weyl group elements")]
    NotEquivalent,

    #[error("search budget exhausted: {0}")]
    Budget(String),

    #[error("polynomial division is not exact; remainder {remainder}")]
    NotDivisible { remainder: String },

    #[error("expression is not subtraction-free: {0}")]
    NotSubtractionFree(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("unsupported generalized minor: {0}")]
    UnsupportedMinor(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid braid move: {0}")]
    InvalidMove(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;

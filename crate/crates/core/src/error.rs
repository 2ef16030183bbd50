use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("the empty word is not allowed here")]
    EmptyWord,
    #[error("word of length {0} exceeds the packed capacity of {max} letters", max = crate::words::MAX_WORD_LEN)]
    WordTooLong(usize),
    #[error("invalid letter {0:?}, expected X or Y")]
    InvalidLetter(char),
    #[error("{0} is not a Lyndon word")]
    NotLyndon(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("split W1={w1} is invalid for weight {w}")]
    InvalidSplit { w: usize, w1: usize },
    #[error("{0} is not invertible in the coefficient field")]
    NotInvertible(i64),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("{what}: size {size} exceeds guard {limit}")]
    GuardExceeded { what: &'static str, size: usize, limit: usize },
    #[error("dimension formula gave {value} at (W,D)=({w},{d})")]
    NegativeDimension { w: usize, d: usize, value: i128 },
    #[error("count does not fit in 64 bits")]
    Overflow,
    #[error("prime {p} rejected: {reason}")]
    InvalidPrime { p: u64, reason: String },
    #[error("column {col} out of range (logical width {width})")]
    ColumnOutOfRange { col: usize, width: usize },
    #[error("cyclic word {0} is outside the target slice")]
    UnexpectedWord(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("series constant term must be 1")]
    BadConstantTerm,
    #[error("coefficient at (W,D)=({w},{d}) is {value}, expected a nonnegative integer")]
    NonIntegral { w: usize, d: usize, value: String },
    #[error("seed file line {line}: {msg}")]
    SeedParse { line: usize, msg: String },
    #[error("seed {0} is not homogeneous of its declared bidegree")]
    SeedBidegree(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

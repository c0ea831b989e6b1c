use thiserror::Error;

use crate::abc::AbcViolation;
use crate::equiv::{AbdxViolation, HatViolation};
use crate::zt::ZtViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow: {0} does not fit in 64 bits")]
    Overflow(&'static str),

    #[error("requested length {requested} exceeds the capacity limit of {limit} symbols")]
    Capacity { requested: u64, limit: u64 },

    #[error("{0} has no representation (only positive integers are representable)")]
    NoRepresentation(u64),

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),

    #[error("invalid symbol {found:?} at position {position}")]
    InvalidSymbol { position: usize, found: char },

    #[error("word is not in the image of the morphism (position {position})")]
    NotInImage { position: usize },

    #[error("invalid ZT word: {0}")]
    InvalidZt(#[from] ZtViolation),

    #[error("invalid ABC word: {0}")]
    InvalidAbc(#[from] AbcViolation),

    #[error("invalid hat word: {0}")]
    InvalidHat(#[from] HatViolation),

    #[error("invalid AB.x word: {0}")]
    InvalidAbdx(#[from] AbdxViolation),

    #[error("no substitution rule applies at position {position}")]
    NoRuleApplies { position: usize },

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),

    #[error("b-file line {line}: {message}")]
    BFileParse { line: usize, message: String },

    #[error("b-file covers {available} entries from index {first}, {requested} requested")]
    InsufficientCoverage {
        first: i64,
        available: usize,
        requested: usize,
    },

    #[error("no binding registered for {0}")]
    UnknownBinding(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

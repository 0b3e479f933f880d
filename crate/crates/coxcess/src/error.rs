//! Error values shared across the engine.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested type violates the classification constraints.
    InvalidType(String),
    /// Total rank exceeds the engine limit.
    RankLimit { rank: usize, limit: usize },
    /// The positive root set is too large for the packed element encoding.
    RootLimit { count: usize, limit: usize },
    /// An enumeration would exceed the configured budget.
    BudgetExceeded { what: &'static str, needed: u64, budget: u64 },
    /// Explicitly unsupported request (for instance the E8 class tables).
    OutOfScope(String),
    /// Component index out of range.
    InvalidComponent { index: usize, count: usize },
    /// Malformed generator word.
    WordParse(String),
    /// Malformed or type-incompatible signed permutation.
    SignedPerm(String),
    /// A consistency condition that must hold in a finite Coxeter group failed;
    /// indicates a bug in the engine, never expected on valid input.
    Internal(String),
    /// Cache file problems, each kept distinct.
    CacheIo(String),
    CacheVersionMismatch { found: u16, expected: u16 },
    CacheChecksum,
    CacheTypeMismatch { found: String, expected: String },
    CacheCorrupt(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType(s) => write!(f, "invalid Coxeter type: {s}"),
            Error::RankLimit { rank, limit } => {
                write!(f, "total rank {rank} exceeds the engine limit {limit}")
            }
            Error::RootLimit { count, limit } => {
                write!(f, "positive root count {count} exceeds the packed limit {limit}")
            }
            Error::BudgetExceeded { what, needed, budget } => {
                write!(f, "{what} needs {needed} elements, over the budget of {budget}")
            }
            Error::OutOfScope(s) => write!(f, "out of scope: {s}"),
            Error::InvalidComponent { index, count } => {
                write!(f, "component index {index} out of range (system has {count})")
            }
            Error::WordParse(s) => write!(f, "cannot parse word: {s}"),
            Error::SignedPerm(s) => write!(f, "invalid signed permutation: {s}"),
            Error::Internal(s) => write!(f, "internal consistency failure: {s}"),
            Error::CacheIo(s) => write!(f, "cache i/o error: {s}"),
            Error::CacheVersionMismatch { found, expected } => {
                write!(f, "cache format version {found}, expected {expected}")
            }
            Error::CacheChecksum => write!(f, "cache payload checksum mismatch"),
            Error::CacheTypeMismatch { found, expected } => {
                write!(f, "cache holds type {found}, expected {expected}")
            }
            Error::CacheCorrupt(s) => write!(f, "corrupt cache file: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the group, poset and topology layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Generators (or an element and a group) live on different point sets.
    DegreeMismatch { expected: usize, found: usize },
    /// A group description cannot be turned into a group.
    InvalidSpec(String),
    /// A precondition on an argument does not hold (non-prime, not a p-group, ...).
    InvalidArgument(String),
    /// An element or subgroup is not contained in the group it was used with.
    NotContained(String),
    /// The generator images of a semidirect product do not define automorphisms.
    InvalidAction(String),
    /// A computation would exceed a configured bound.
    Capacity { what: &'static str, size: String, limit: usize },
    /// Malformed cycle notation; `column` is 1-based within the parsed text.
    Parse { column: usize, message: String },
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid group description: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NotContained(msg) => write!(f, "not contained: {msg}"),
            Error::InvalidAction(msg) => write!(f, "invalid action: {msg}"),
            Error::Capacity { what, size, limit } => {
                write!(f, "capacity exceeded: {what} is {size}, limit is {limit}")
            }
            Error::Parse { column, message } => write!(f, "column {column}: {message}"),
        }
    }
}

impl core::error::Error for Error {}

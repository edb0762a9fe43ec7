use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("token {index} ({token:?}) is not a number")]
    InvalidToken { index: usize, token: String },

    #[error("token {index} ({token:?}) is not a positive letter")]
    NonPositiveLetter { index: usize, token: String },

    #[error("letter 0 is not allowed (letters are 1-based)")]
    ZeroLetter,

    #[error("pattern must be nonempty")]
    EmptyPattern,

    #[error("pattern of length {len} exceeds the supported maximum of {max}")]
    PatternTooLong { len: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed formation: {0}")]
    MalformedFormation(String),

    #[error("malformed golden file at line {line}: {reason}")]
    Golden { line: usize, reason: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

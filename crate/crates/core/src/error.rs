use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A variable window is too small for the requested index
    /// (e.g. padding a partition of length 3 into 2 slots).
    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// Two multipartitions (or a shape and an index) disagree on the
    /// number of blocks, or an operation received a block index out of range.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A move was applied whose guard does not hold.
    #[error("invalid move: {0}")]
    InvalidMove(String),

    /// A precondition on the operation's arguments failed.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Input expansion mixes terms of different total degree.
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),

    /// Text input could not be parsed; `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An internal consistency check failed. This always signals a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

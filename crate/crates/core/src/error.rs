use thiserror::Error;

/// Errors raised by the library. The CLI maps all of them to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),
    /// Objects that cannot be combined (mismatched offsets, dimensions).
    #[error("structural mismatch: {0}")]
    Structural(String),
    /// A construction was applied outside its domain of validity.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An exhaustive operation would exceed its size cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

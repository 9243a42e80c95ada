use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("registry error: {0}")]
    Registry(String),
    #[error("unknown symbol `{0}` (not declared in the registry)")]
    UnknownSymbol(String),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("not covered by the reducibility tables: {0}")]
    NotCovered(String),
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidRep(msg.into()))
}

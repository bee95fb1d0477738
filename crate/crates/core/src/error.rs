use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The solver (or an enumeration) ran past its configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A search range was exhausted without reaching a verdict.
    #[error("range exhausted: {0}")]
    Range(String),

    /// The input is larger than an operation is willing to handle.
    #[error("refused: {0}")]
    Refused(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A computed result disagreed with an embedded expected value.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

use thiserror::Error;

use crate::walk::Walk;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{0}` is a loop")]
    Loop(String),
    #[error("edges `{0}` and `{1}` have the same endpoints and signs")]
    DuplicateSignature(String, String),
    /// A caller-side contract was violated (malformed input paths, `x = y`, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// A mathematical precondition does not hold; `witness` demonstrates it.
    #[error("precondition failed: {message}")]
    Precondition {
        message: String,
        witness: Option<Walk>,
    },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("instance too large for exhaustive search: {0}")]
    BoundExceeded(String),
    /// An invariant that the theory guarantees was observed broken.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

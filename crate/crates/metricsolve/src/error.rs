use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected: {0}")]
    Disconnected(&'static str),

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid tree decomposition: {0}")]
    InvalidTreeDecomposition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("instance cap exceeded: {0}")]
    CapExceeded(String),

    #[error("assignment does not satisfy the formula")]
    UnsatisfyingAssignment,

    #[error("time budget exceeded")]
    TimeBudgetExceeded,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: VertexId, count: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid collapse: {0}")]
    InvalidCollapse(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by graph construction, enumeration and the invariant transforms.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge index {index} out of range for a graph with {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },

    #[error("weighting has {got} entries but the graph has {n} vertices")]
    WeightLength { got: usize, n: usize },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("not a forest: {0}")]
    NotAForest(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

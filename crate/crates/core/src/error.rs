use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("local connectivity needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("malformed graph6 input: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("invalid bipartition: {0}")]
    InvalidSplit(String),

    #[error("invalid vertex partition: {0}")]
    InvalidPartition(String),

    #[error("graph has {n} vertices, exhaustive search supports at most {max}")]
    TooLarge { n: usize, max: usize },

    #[error("matrix has a negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),

    #[error("matrix is reducible")]
    Reducible,

    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),

    #[error("matrix orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("vector must be non-zero")]
    ZeroVector,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;

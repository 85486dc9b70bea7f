use thiserror::Error;

/// Errors raised by graph construction, transforms, and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("operation requires labeled graphs")]
    MissingLabels,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("operation is undefined for complete graphs")]
    CompleteInput,
    #[error("order {order} exceeds the supported limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("operation requires a bipartite graph")]
    NotBipartite,
    #[error("product operand has no vertices")]
    EmptyOperand,
    #[error("operation requires nontrivial operands (order >= 2)")]
    TrivialOperand,
    #[error("unknown vertex {index} in factor of order {order}")]
    UnknownVertex { index: usize, order: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("graph6 long form (order > 62) is not supported")]
    UnsupportedLongForm,
    #[error("graphs do not share a label set")]
    LabelMismatch,
    #[error("instance grid too large: {0}")]
    GridTooLarge(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

impl From<std::io::Error> for GraphError {
    fn from(e: std::io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}

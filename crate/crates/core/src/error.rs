use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge ({0},{1}) already present")]
    EdgePresent(usize, usize),
    #[error("edge ({0},{1}) not present")]
    EdgeAbsent(usize, usize),
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("graph would have {0} vertices, limit is 32")]
    TooManyVertices(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// graph6 / edge-list parsing failure, with the byte offset of the problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph has fewer than 3 vertices")]
    TooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("({0},{1}) is not a non-edge of the graph")]
    NotANonEdge(usize, usize),
    #[error("adding ({0},{1}) keeps the graph planar; nothing to certify")]
    StillPlanar(usize, usize),
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("vertex sequence is not a simple cycle of the graph: {0}")]
    NotACycle(String),
    #[error("{0}")]
    BadInput(String),
}

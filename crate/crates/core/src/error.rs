use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("input size {size} exceeds budget {budget}")]
    Budget { size: usize, budget: usize },
    #[error("malformed graph text: {0}")]
    Parse(String),
    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),
    #[error("invalid pattern parameters: {0}")]
    InvalidPattern(String),
    #[error("malformed expression: {0}")]
    Expression(String),
    #[error("join with equal labels {0} and {0}")]
    JoinSameLabel(u32),
    #[error("graph contains an induced {pattern} on {{{witness}}}")]
    ContainsPattern { pattern: String, witness: VertexSet },
    #[error("maximum degree {0} exceeds 2")]
    DegreeTooLarge(usize),
    #[error("clique-width exceeds the width budget; it is at least {lower_bound}")]
    WidthExceeded { lower_bound: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

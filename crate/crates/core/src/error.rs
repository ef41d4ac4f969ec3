use thiserror::Error;

use crate::labeled_dag::{Label, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge set contains a directed cycle")]
    CycleDetected,
    #[error("expected exactly one source vertex, found {count}")]
    MultipleSources { count: usize },
    #[error("vertex {0} is unreachable from the source")]
    Unreachable(VertexId),
    #[error("vertex {vertex} out of range for a DAG with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(VertexId, VertexId),
    #[error("label count {got} does not match vertex count {expected}")]
    LabelCountMismatch { expected: usize, got: usize },

    #[error("new label {new} is not lower than current label {current}")]
    NotLowering { current: Label, new: Label },
    #[error("new label {new} is not higher than current label {current}")]
    NotRaising { current: Label, new: Label },
    #[error("labeled DAG is not ordered")]
    NotOrdered,

    #[error("dimension or side length overflows the platform word")]
    Overflow,
    #[error("invalid topology spec {0:?}")]
    InvalidTopology(String),
    #[error("vertex order exhausted")]
    Exhausted,

    #[error("queue is full")]
    Full,
    #[error("queue is empty")]
    Empty,
    #[error("only finite labels can be inserted")]
    NonFiniteLabel,
    #[error("queue construction requires every label to be infinity")]
    NotAllInfinity,
    #[error("raising a label to infinity is reserved to remove_min")]
    RaiseToInfinityForbidden,

    #[error("input has {got} elements but the DAG has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at {0} rejected")]
    LoopRejected(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(VertexId),
    #[error("chain boundary is {found}, expected {expected}")]
    BadBoundary { expected: String, found: String },
    #[error("chain has nonzero boundary {0}")]
    NotACycle(String),
    #[error("target set has odd size {0}")]
    OddTargetCount(usize),
    #[error("terminal {vertex} has degree {degree} < {k}")]
    DegreeTooSmall {
        vertex: VertexId,
        degree: usize,
        k: usize,
    },
    #[error("vertex {vertex} has {count} edges to terminal {terminal}, more than its other terminal edges")]
    BalanceViolated {
        vertex: VertexId,
        terminal: VertexId,
        count: usize,
    },
    #[error("non-terminal vertex {0} has odd degree")]
    OddInteriorDegree(VertexId),
    #[error("edge {0} has no terminal endpoint")]
    EdgeMissesTerminal(EdgeId),
    #[error("edge {0} leaves the terminal set")]
    NotTerminalOnly(EdgeId),
    #[error("invalid augmentation plan: {0}")]
    PlanInvalid(String),
    #[error("requested {requested} chains but maximum packing is {maximum}")]
    InsufficientPacking { requested: usize, maximum: usize },
    #[error("instance size {size} exceeds the bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("invalid instance spec: {0}")]
    SpecInvalid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

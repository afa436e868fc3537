use thiserror::Error;

use crate::graph::NodeId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} out of range for a graph with {n} nodes")]
    InvalidNode { node: NodeId, n: usize },

    #[error("self-loop on node {0} is not allowed")]
    SelfLoop(NodeId),

    #[error("edge ({0}, {1}) already exists")]
    DuplicateInsert(NodeId, NodeId),

    #[error("edge ({0}, {1}) does not exist")]
    MissingEdge(NodeId, NodeId),

    #[error("edge weight must be positive and finite, got {0}")]
    NonPositiveWeight(f64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("shortest-path count overflowed 64 bits at node {0}")]
    SigmaOverflow(NodeId),

    #[error("node {0} is unreachable from the source")]
    Unreachable(NodeId),

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("shortest-path state does not match the graph: {0}")]
    InconsistentState(String),

    #[error("batch contains a deletion or weight increase, which incremental modes cannot process")]
    DeletionInIncrementalMode,

    #[error("mode {mode} cannot run on this graph: {reason}")]
    IncompatibleMode { mode: &'static str, reason: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("scenario needs {needed} edges but the graph only has {available}")]
    NotEnoughEdges { needed: usize, available: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::model::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite value: {0}")]
    NonFinite(&'static str),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("nodes {first} and {second} share the same position")]
    DuplicatePosition { first: NodeId, second: NodeId },

    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(NodeId, NodeId),

    #[error("node id {id} out of range for a graph with {count} nodes")]
    NodeOutOfRange { id: NodeId, count: usize },

    #[error("node ids must be dense 0..{count}: {detail}")]
    SparseIds { count: usize, detail: String },

    #[error("radial networks need at least 3 radii (got {0}); sides are not defined below that")]
    TooFewRadii(u32),

    #[error("angle {alpha} lies outside the sector [0, {theta}]")]
    AngleOutsideSector { alpha: f64, theta: f64 },

    #[error("need at least {required} {what} (got {got})")]
    TooFew {
        what: &'static str,
        required: usize,
        got: usize,
    },

    #[error("pair ({0}, {0}) is not a route")]
    SamePair(NodeId),

    #[error("pair ({u}, {v}) skipped: {reason}")]
    SkippedPair {
        u: NodeId,
        v: NodeId,
        reason: &'static str,
    },

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

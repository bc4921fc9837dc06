use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("edge {0} is a bridge")]
    HasBridge(EdgeId),

    #[error("{what} is {size}, above the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("graph has {count} spanning trees, above the limit of {limit}")]
    TooManyTrees { count: String, limit: usize },

    #[error("graph has no cycle")]
    Acyclic,

    #[error("edge {0} belongs to the spanning tree")]
    EdgeInTree(EdgeId),

    #[error("edge {0} does not belong to the spanning tree")]
    EdgeNotInTree(EdgeId),

    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),

    #[error("edge set is not a spanning tree: {0}")]
    NotASpanningTree(String),

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("no witness edge exists for the tree edge pair ({0}, {1})")]
    NoWitness(EdgeId, EdgeId),

    #[error("auxiliary graph carries no spanning tree annotations")]
    Unannotated,

    #[error("not a spanning tree auxiliary graph: {0}")]
    NotAStag(String),

    #[error("graph is not a minimal preimage: edge {0} is a bridge")]
    NotMinimal(EdgeId),

    #[error("internal validation failed: {0}")]
    ValidationFailed(String),

    #[error("unknown strategy `{name}` for {family}")]
    UnknownStrategy { family: &'static str, name: String },
}

impl Error {
    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }

    pub(crate) fn not_a_stag(reason: impl Into<String>) -> Self {
        Error::NotAStag(reason.into())
    }

    /// True for the errors raised by size and count guards.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::TooManyTrees { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::graph::Orientation;

/// Structural problems with a graph under construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex id {0:?}: ids must be nonempty and use only letters, digits and '_'")]
    InvalidId(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("self-loop on {0}")]
    SelfLoop(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("weight of {0} must be an integer >= 1")]
    InvalidWeight(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header \"graph directed\" or \"graph undirected\"")]
    MissingHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("generated vertex id {0} collides with an existing vertex; rename the input vertices")]
    IdCollision(String),

    #[error("graph is not quasi-bipartite: edge {0} {1} joins two non-terminals")]
    NotQuasiBipartite(String, String),

    #[error("graph contains the terminal-terminal edge {0} {1}; subdivide it first")]
    TerminalEdge(String, String),

    #[error("expected a {expected} graph, got a {found} one")]
    Orientation {
        expected: Orientation,
        found: Orientation,
    },

    #[error("vertex {0} has weight {1}; sparsification needs unit weights (expand the graph first)")]
    Weighted(String, u32),

    #[error("{what} is {actual}, above the limit of {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("terminal {0} of the original graph is missing from the candidate")]
    TerminalMismatch(String),

    #[error("flow and exhaustive oracles disagree: {flow} vs {exhaustive}")]
    OracleDisagreement { flow: u64, exhaustive: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph `{0}` is disconnected")]
    Disconnected(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("order mismatch: guest has {guest} vertices, host has {host}")]
    OrderMismatch { guest: usize, host: usize },
    #[error("vertex map is not a bijection: {0}")]
    NotBijective(String),
    #[error("invalid route for guest edge ({u}, {v}): {reason}")]
    InvalidRoute { u: Vertex, v: Vertex, reason: String },
    #[error("guest `{0}` has no universal vertex (domination number is not 1)")]
    NoUniversalVertex(String),
    #[error("no hamiltonian {what} in host minus vertex {removed}")]
    NoHamiltonian { what: &'static str, removed: Vertex },
    #[error("search budget of {0} node expansions exhausted before a verdict")]
    Inconclusive(u64),
    #[error("instance has {order} vertices, above the exhaustive limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },
}

impl Error {
    pub(crate) fn param(family: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            family: family.into(),
            reason: reason.into(),
        }
    }
}

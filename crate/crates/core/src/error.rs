use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invalid graph: {0}")]
    Validation(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },

    #[error("{what}: size {size} exceeds limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumeration budget of {budget} exhausted after checking {checked} sets")]
    Budget { budget: u64, checked: u64 },

    /// Fewer than two disjoint paths exist; `cut` separates the terminals.
    #[error("menger-deficient: at most {flow} disjoint path(s), separating set {cut:?}")]
    MengerDeficient { flow: usize, cut: VertexSet },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),

    /// Raised when a search that a proposition guarantees to succeed comes up empty.
    #[error("proposition violation: {0}")]
    PropositionViolation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

use thiserror::Error;

/// Errors across the crate. Resource exhaustion is kept distinct from every
/// mathematical answer: a blown budget must never read as a negative result.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain (wrong scope, bad argument).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured search budget was exhausted before an answer was found.
    #[error("resource budget exhausted: {0}")]
    Resource(String),

    /// The requested ring has no nonzero zero-divisors, so the graph has no
    /// vertices and the predicate in question does not apply.
    #[error("empty graph: {0}")]
    EmptyGraph(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn empty_graph(msg: impl Into<String>) -> Self {
        Error::EmptyGraph(msg.into())
    }
}

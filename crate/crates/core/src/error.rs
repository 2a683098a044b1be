use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("loop arc ({0}, {0}) is not allowed")]
    LoopArc(usize),
    #[error("order {0} unsupported (must be in 1..=64)")]
    BadOrder(usize),
    #[error("order {order} exceeds the limit {limit} for this operation")]
    SizeLimit { order: usize, limit: usize },
    #[error("order {order} too small, need at least {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} already lies on the path")]
    XOnPath(usize),
    #[error("vertex {0} already lies on the cycle")]
    XOnCycle(usize),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("hypothesis failed at vertex {0}: no insertion arc")]
    HypothesisFailed(usize),
    #[error("precondition failed: missing arc ({0}, {1})")]
    PreconditionFailed(usize, usize),
    #[error("digraph is not a balanced bipartite digraph: {0}")]
    NotBipartite(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("derivation failed: {0}")]
    DerivationFailed(String),
    #[error("scope mismatch: {0}")]
    ScopeMismatch(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

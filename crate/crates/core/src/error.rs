use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("invalid parameters for {what}: {reason}")]
    InvalidParameters { what: &'static str, reason: String },
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("{what} limited to n <= {limit}, got n = {n}")]
    SizeLimit { what: &'static str, n: usize, limit: usize },
    #[error("eigensolver did not converge")]
    NoConvergence,
    #[error("spectrum lacks the zero eigenvalue required of a Laplacian spectrum")]
    MissingZeroEigenvalue,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("graph is outside the universe: {0}")]
    OutsideUniverse(String),
    #[error("infeasible sequence: {0}")]
    Infeasible(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("graph expression error at {offset}: {reason}")]
    Expr { offset: usize, reason: String },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameters {
        what,
        reason: reason.into(),
    }
}

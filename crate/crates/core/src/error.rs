use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {vertex} (pair ({vertex},{vertex}))")]
    SelfLoop { vertex: usize },

    #[error("endpoint {vertex} is out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },

    #[error("vertex {vertex} does not exist (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation requires at least one vertex")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} is capped at {cap}, got {got}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has an isolated vertex (minimum degree 0)")]
    Degenerate,

    #[error("power iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("suite {suite}: {source}")]
    Suite {
        suite: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// The innermost error, looking through suite context.
    pub fn root(&self) -> &Error {
        match self {
            Error::Suite { source, .. } => source.root(),
            other => other,
        }
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("order mismatch for {what}: expected {expected}, found {found}")]
    OrderMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("graph has no edges")]
    EmptyEdgeSet,

    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    Asymmetric,

    #[error("dimension mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),

    #[error("graphs do not commute")]
    NonCommuting,

    #[error("{0} is not regular")]
    NotRegular(&'static str),

    #[error("anchor vector {0} is not a common eigenvector")]
    BadAnchor(usize),

    /// A closed form was asked for inputs outside the hypotheses it is
    /// stated under.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("negative discriminant {0:e} in closed form")]
    NegativeDiscriminant(f64),

    #[error("unknown {kind} `{name}`; valid: {}", valid.join(", "))]
    UnknownName {
        kind: &'static str,
        name: String,
        valid: Vec<String>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{context}: {source}")]
    Json {
        context: String,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    /// Errors that signal an input outside a formula's or operation's
    /// preconditions, as opposed to I/O trouble or a failed comparison.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Io { .. } | Error::Json { .. } | Error::Internal(_))
    }

    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. } | Error::Json { .. })
    }

    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed vertex label {token:?}")]
    Parse { line: usize, token: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("hypergraph is empty after filtering")]
    EmptyHypergraph,

    /// An argument outside the domain of the operation (bad vertex id, non-bijective ordering, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A derived count or identity came out inconsistent. Always a bug.
    #[error("pipeline consistency violated: {0}")]
    Consistency(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// A brute-force routine refused an instance larger than its guard.
    #[error("oracle refused instance: {0}")]
    Refused(String),

    #[error("pattern table generation failed: {0}")]
    PatternTable(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}

use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hypertri_core::Error),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("verification failed\n{0}")]
    VerifyFailed(String),
}

impl CliError {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    /// Process exit code.
    ///
    /// | code | meaning |
    /// |------|---------|
    /// | 1 | verification mismatch |
    /// | 2 | parse, configuration or I/O error |
    /// | 3 | internal consistency check failed |
    /// | 4 | arithmetic overflow |
    pub fn exit_code(&self) -> i32 {
        use hypertri_core::Error as E;
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Io { .. } | CliError::Config(_) => 2,
            CliError::Core(e) => match e {
                E::Consistency(_) | E::PatternTable(_) => 3,
                E::Overflow(_) => 4,
                E::Parse { .. } | E::Io(_) | E::EmptyHypergraph | E::Domain(_) | E::Refused(_) => 2,
            },
        }
    }
}

use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Input problems. All of them exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("unknown monoid `{0}`")]
    UnknownMonoid(String),
    #[error("unknown act `{0}`")]
    UnknownAct(String),
    #[error("name `{0}` is already defined")]
    DuplicateName(String),
    #[error("{context}: {source}")]
    Invalid {
        context: String,
        #[source]
        source: sact_core::Error,
    },
    #[error(transparent)]
    Core(#[from] sact_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("bad bound `{0}`: {1}")]
    Bound(String, String),
}

impl CliError {
    pub(crate) fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        CliError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }
}

use thiserror::Error;

use crate::designer::SearchStats;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two operands disagree on the number of qubits (or syndrome bits).
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("search failed after {} trials", .0.trials)]
    SearchFailed(SearchStats),

    #[error("capability error: {0}")]
    Capability(String),

    #[error("invalid state: {0}")]
    State(String),

    #[error("no length n <= {cap} satisfies the bound")]
    BoundCap { cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

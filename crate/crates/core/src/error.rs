use thiserror::Error;

/// Errors produced by every module of the crate.
///
/// The variants line up with the process exit codes used by the command-line
/// driver: input problems exit with 2, exhausted budgets with 3 and violated
/// internal invariants with 4.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent user input.
    #[error("input error: {0}")]
    Input(String),
    /// An operation was called outside its contract.
    #[error("usage error: {0}")]
    Usage(String),
    /// A configured enumeration or size budget would be exceeded.
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    Budget {
        what: String,
        needed: u128,
        limit: u128,
    },
    /// A requested degree lies outside the computed truncation.
    #[error("range error: {0}")]
    Range(String),
    /// An identity that must hold by construction failed.
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Usage(_) | Error::Json(_) | Error::Io(_) => 2,
            Error::Budget { .. } | Error::Range(_) => 3,
            Error::Invariant(_) => 4,
        }
    }

    pub(crate) fn budget(what: impl Into<String>, needed: u128, limit: u128) -> Self {
        Error::Budget {
            what: what.into(),
            needed,
            limit,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

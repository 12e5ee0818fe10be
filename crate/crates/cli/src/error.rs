use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed or infeasible input; exit code 2.
    Usage(String),
    /// Input rejected by a library precondition; also exit code 2.
    Math(hawaii_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Math(e) => write!(f, "rejected input: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hawaii_core::Error> for CliError {
    fn from(e: hawaii_core::Error) -> Self {
        CliError::Math(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

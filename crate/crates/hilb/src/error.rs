use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hilb_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for failed invariants, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(hilb_core::Error::InvariantViolation(_) | hilb_core::Error::NonIntegral { .. }) => 1,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}

use stratakit::classify::ClassifyError;
use stratakit::homology::{FormulaError, HomologyError};
use stratakit::repr::ReprError;
use thiserror::Error;

/// Failures with a dedicated exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unparsable or invalid input: exit 2.
    #[error("{0}")]
    Input(String),
    /// Valid input that the requested computation cannot handle: exit 3.
    #[error("{0}")]
    Precondition(String),
    /// Two methods disagreed: exit 4.
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

/// Exit code for an error chain; unknown errors count as precondition failures.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<CliError>() {
            return e.code();
        }
        if cause.is::<HomologyError>()
            || cause.is::<ClassifyError>()
            || cause.is::<ReprError>()
            || cause.is::<FormulaError>()
        {
            return 3;
        }
        if cause.is::<std::io::Error>() || cause.is::<serde_json::Error>() {
            return 2;
        }
    }
    3
}

//! Library side of the `conjq` command-line tool: group sources, report
//! documents, and the five subcommands. `main.rs` only parses arguments and
//! writes files.

pub mod commands;
pub mod report;
pub mod source;
pub mod survey;

pub use commands::{cmd_check, cmd_classes, cmd_product_check, cmd_witness, CheckOptions};
pub use report::{Envelope, Outcome, SCHEMA_VERSION};
pub use source::{GroupSource, QuandleSpec, SurveySource};
pub use survey::{cmd_survey, SurveyConfig};

/// Process exit status for a finished command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// Every verdict positive and every audit clean.
    Ok = 0,
    /// Some negative verdict or audit violation.
    Negative = 1,
    /// Bad arguments or unreadable input.
    Usage = 2,
    /// An enumeration bound was hit.
    Bound = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("product of quandles of sizes {left} and {right} exceeds the bound {bound}")]
    ProductTooLarge {
        left: usize,
        right: usize,
        bound: usize,
    },
    #[error("{0}")]
    Core(#[from] conjq_core::Error),
    #[error("cannot write {path}: {message}")]
    Output { path: String, message: String },
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        use conjq_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Output { .. } => ExitStatus::Usage,
            CliError::ProductTooLarge { .. } | CliError::Core(E::BoundExceeded { .. }) => {
                ExitStatus::Bound
            }
            CliError::Core(
                E::EquivalenceViolation { .. } | E::ConstructionPostconditionFailed { .. },
            ) => ExitStatus::Negative,
            CliError::Core(_) => ExitStatus::Usage,
        }
    }
}

//! Command-line verification harness.

pub mod criteria;
pub mod options;
pub mod report;
pub mod suites;

pub use options::{Fixtures, Options};
pub use report::{Check, Report, REPORT_VERSION};
pub use suites::{run_suite, Suite};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Malformed(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

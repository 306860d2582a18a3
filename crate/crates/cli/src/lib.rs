//! IO companion to `stanley-core`: file formats, named fixtures, seeded
//! random instance models, report generation and the command
//! implementations behind the `stanley` binary.

pub mod commands;
pub mod fixtures;
pub mod formats;
pub mod random;
pub mod report;

/// Process exit discipline: 0 ok, 1 property violation (with a
/// certificate), 2 usage or parse error, 3 a configured cap was exceeded.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Violation(serde_json::Value),
    CapExceeded(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Violation(_) => 1,
            CliError::CapExceeded(_) => 3,
        }
    }
}

pub type CliResult = Result<serde_json::Value, CliError>;

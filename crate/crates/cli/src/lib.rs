//! Command-line front end for `toeplitz-core`.
//!
//! Every subcommand produces one JSON document with the envelope
//! `{command, inputs, result, warnings, tolerances, seed}`. Errors in the
//! input or its preconditions produce `{error, message, position}` and exit
//! code 2; a failed verification exits with 1.

pub mod args;
pub mod commands;
pub mod report;
pub mod suites;

use clap::Parser;

pub use args::{Cli, Command};
pub use commands::{execute, Execution};
pub use report::{validate_envelope, CliError};

/// Parse `argv` and execute without touching the process; for tests and suites.
pub fn run_in_process(argv: &[&str]) -> Result<Execution, CliError> {
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::new("UsageError", e.to_string()))?;
    execute(&cli)
}

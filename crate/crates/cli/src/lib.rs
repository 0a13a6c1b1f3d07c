//! Batch front end for `toricode`: JSON job files in, canonical JSON out.
//!
//! Output is byte-stable for a given job and seed: objects have sorted keys,
//! generator lists are sorted canonical strings, and wall-clock timings are
//! only emitted on request.

pub mod job;
pub mod run;
pub mod verify;

use thiserror::Error;

pub use job::{Job, PathSpec, Task, SCHEMA_VERSION};
pub use run::{execute, Overrides};
pub use verify::{verify_dir, verify_jobs, VerifyReport, BUNDLED};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid job: {0}")]
    Schema(String),
    #[error("{0}")]
    Budget(String),
    #[error("computation failed: {0}")]
    Compute(toricode::Error),
    #[error("{0}")]
    Io(String),
    #[error("verification failed:\n{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) | CliError::Compute(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Io(_) | CliError::Verification(_) => 1,
        }
    }
}

impl From<toricode::Error> for CliError {
    fn from(e: toricode::Error) -> Self {
        if job::is_budget_error(&e) {
            CliError::Budget(e.to_string())
        } else {
            CliError::Compute(e)
        }
    }
}

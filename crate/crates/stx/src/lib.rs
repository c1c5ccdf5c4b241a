//! Std companion of `stx-core`: JSON, DOT and CSV formats, experiment
//! reports, reconstructions of the worked drawings, and the commands run
//! by the `stx` binary.

pub mod commands;
mod error;
pub mod figures;
pub mod formats;
pub mod report;

pub use error::{CliError, Result};
pub use report::{exit_code, ExperimentReport, Verdict};

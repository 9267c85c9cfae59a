//! Command-line front end for the hypertriangle census.

pub mod commands;
pub mod error;
pub mod report;
pub mod verify;

pub use commands::{cmd_count, cmd_dump_distributions, load, write_atomic, RunConfig};
pub use error::{CliError, CliResult};
pub use report::{render_pattern_table, CensusReport, OutputFormat};
pub use verify::{cmd_verify, Fault, VerifyConfig, VerifySummary};

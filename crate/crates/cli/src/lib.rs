//! Command-line front end for `csmlap-core`: determinants, identity reports,
//! monomial expansions and fuzzing.
//!
//! Exit codes: `0` computed or verified, `1` identity violated, `2` usage or
//! input error.

pub mod commands;
pub mod config;
pub mod error;
pub mod expand;
pub mod fuzz;
pub mod output;

pub use commands::run;
pub use config::{Command, OutputFormat, RunConfig};
pub use error::{CliError, Result};
pub use output::{Outcome, Status, USAGE_EXIT};

//! File formats and command-line front end for `bifilt-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod io;

pub use commands::{run, Outcome};
pub use error::CliError;

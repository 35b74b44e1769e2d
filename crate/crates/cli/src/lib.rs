//! Command-line front end for the `subrank` library.

pub mod commands;
pub mod config;
pub mod error;
pub mod search;

pub use commands::{execute, Output};
pub use config::Cli;
pub use error::{exit, CliError};

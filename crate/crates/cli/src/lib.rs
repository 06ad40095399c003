//! Command-line front end for the SANS protocol and its benchmark harness.

pub mod bench;
pub mod commands;
pub mod error;

pub use error::{exit, CliError};

//! Command-line harness: configuration, suite execution and output for the
//! `speyer` binary.

pub mod commands;
pub mod config;
pub mod suites;

pub use config::{ConfigError, Format, Overrides, RunConfig, Suite};

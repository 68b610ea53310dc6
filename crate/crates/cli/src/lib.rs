//! Library side of the `stiefel` command-line tool.

pub mod commands;
pub mod document;
pub mod exit_codes;
pub mod report;
pub mod selftest;

pub use commands::Outcome;

/// Environment variable that overrides the default seed.
pub const SEED_ENV: &str = "STIEFEL_SEED";

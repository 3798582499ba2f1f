//! Command-line front end: file formats, subcommands and verification suites.

pub mod commands;
pub mod formats;
pub mod suites;

use std::fmt;

pub use commands::run;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const CAP: i32 = 3;
    /// The command ran but the answer is negative: no involution, or a suite failed.
    pub const NEGATIVE: i32 = 4;
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: exit::USAGE, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: exit::INPUT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<vdgame_core::Error> for CliError {
    fn from(e: vdgame_core::Error) -> Self {
        let code = match e {
            vdgame_core::Error::CapExceeded { .. } => exit::CAP,
            _ => exit::INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

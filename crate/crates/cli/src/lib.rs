//! File formats and command implementations behind the `cliffweyl` binary.
//!
//! Exit codes: 0 success or member, 1 negative verdict, 2 malformed input,
//! 3 unsupported configuration, 4 resource bound.

pub mod commands;
pub mod formats;

use cliffweyl_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource bound: {0}")]
    Resource(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Malformed(_) | CliError::Io(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Resource(_) => 4,
            CliError::Core(e) => match e {
                CoreError::NotSimplyLaced | CoreError::UnsupportedOrder => 3,
                CoreError::ResourceBound(_) | CoreError::TooLarge { .. } => 4,
                _ => 2,
            },
        }
    }
}

/// What a command prints and how it exits when it did not error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

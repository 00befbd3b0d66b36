//! Library half of the `cfroots` command-line tool: polynomial text,
//! run records and the three commands, kept separate from argument parsing
//! so they can be driven from tests.

pub mod commands;
pub mod input;
pub mod record;

use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_OTHER: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;
pub const EXIT_NODE_CEILING: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solver(#[from] cfroots::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("cannot encode record: {0}")]
    Encode(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use cfroots::Error as E;
        match self {
            CliError::Parse(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Solver(E::NodeCeilingExceeded { .. }) => EXIT_NODE_CEILING,
            CliError::Solver(E::ZeroPolynomial | E::ConstantPolynomial | E::InvalidConfig(_)) => {
                EXIT_USAGE
            }
            _ => EXIT_OTHER,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

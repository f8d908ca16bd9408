//! Front end for `heisenfock-core`: an expression language for Heisenberg
//! algebra elements, JSON configuration, and one subcommand per computation.

pub mod commands;
pub mod config;
pub mod parser;

mod app;

pub use app::{run, Execution};
pub use commands::{Outcome, Status};
pub use config::{Config, ConfigError};
pub use parser::{parse_expr, Expr, ParseError, ParseErrorKind};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(#[from] ConfigError),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

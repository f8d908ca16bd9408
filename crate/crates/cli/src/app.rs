use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use heisenfock_core::RelationVariant;

use crate::commands::{self, Outcome, Status};
use crate::config::Config;
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "heisenfock", version, about = "Exact computations in Heisenberg algebras and their Fock spaces")]
struct Cli {
    /// JSON configuration file (dimension, pairing, named spaces)
    #[arg(long, global = true, env = "HEISENFOCK_CONFIG")]
    config: Option<PathBuf>,
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Plain,
    Transposed,
    Mixed,
}

impl From<Variant> for RelationVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Plain => RelationVariant::Plain,
            Variant::Transposed => RelationVariant::Transposed,
            Variant::Mixed => RelationVariant::Mixed,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal-order an expression
    NormalForm { expr: String },
    /// Check the q/p relations for all 0 <= m, n <= M
    Verify {
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = Variant::Plain)]
        variant: Variant,
    },
    /// Apply an expression to the vacuum, or to `--on` applied to the vacuum
    FockAct {
        expr: String,
        #[arg(long)]
        on: Option<String>,
    },
    /// Compare Fock space and symmetric-power dimensions level by level
    Dims {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_level: u32,
    },
    /// Graded symmetric (or exterior) power of a space and its Euler characteristic
    SymEuler {
        /// A label from the config or an inline list such as `0:2,1:1`
        #[arg(long, allow_hyphen_values = true)]
        space: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        ext: bool,
    },
    /// Check that p(nu) q(mu) is triangular over a(-nu) a(mu) up to a total weight
    Triangularity {
        #[arg(long)]
        weight: u32,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    Ok(match &cli.command {
        Command::NormalForm { expr } => commands::normal_form(&config, expr)?,
        Command::Verify { max_degree, variant } => commands::verify(&config, *max_degree, (*variant).into()),
        Command::FockAct { expr, on } => commands::fock_act(&config, expr, on.as_deref())?,
        Command::Dims { d, max_level } => commands::dims(*d, *max_level),
        Command::SymEuler { space, k, ext } => commands::sym_euler(&config, space, *k, *ext)?,
        Command::Triangularity { weight } => commands::triangularity(&config, *weight),
    })
}

/// Runs the command line `args` (program name first). Exit codes: 0 success,
/// 1 failed verification, 2 usage, config or parse error.
pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Execution { stdout: rendered, stderr: String::new(), code }
            } else {
                Execution { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&outcome.json).expect("serialisable")
            } else {
                outcome.text
            };
            let code = if outcome.status == Status::Success { 0 } else { 1 };
            Execution { stdout: format!("{body}\n"), stderr: String::new(), code }
        }
        Err(e) => Execution { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

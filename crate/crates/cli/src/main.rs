//! `qtensor`: q-tensor squares, multipliers, isoclinism checks and the
//! verification harness from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtensor_core::fp::DEFAULT_MAX_COSETS;
use qtensor_core::group::DEFAULT_MAX_ORDER;
use qtensor_core::isoclinism::Mode;

/// Exit status for bad input, limits on the base group and i/o failures.
const EXIT_INVALID: u8 = 2;
/// Exit status when a coset or search cap stopped the computation.
const EXIT_CAPPED: u8 = 1;
/// Exit status of `verify` when an item fails.
const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qtensor",
    version,
    about = "q-tensor squares and multipliers of small finite groups"
)]
pub struct CommandConfig {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Coset limit for every enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
    /// Largest base group accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Tietze-simplify presentations before enumerating.
    #[arg(long, global = true)]
    simplify: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List builtin group names and the verification corpus.
    Catalog,
    /// Print a group's Cayley table and basic invariants.
    Info {
        /// `builtin:NAME` or `file:PATH`.
        group: String,
    },
    /// Realize the q-tensor and q-exterior squares and report invariants.
    Tensor {
        group: String,
        #[arg(long, default_value_t = 0, conflicts_with = "q_list")]
        q: u32,
        /// Comma-separated list of q values; emits one report per value.
        #[arg(long, value_delimiter = ',')]
        q_list: Option<Vec<u32>>,
    },
    /// Decide an isoclinism relation between two groups.
    Compare {
        left: String,
        right: String,
        #[arg(long, default_value = "classical", value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        q: u32,
    },
    /// Run the lemma, theorem and oracle suites.
    Verify {
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
        q_list: Vec<u32>,
        /// Also run the p-group statements over every p-group of order <= 16.
        #[arg(long)]
        extended: bool,
        /// Worker threads (default: one per core).
        #[arg(long)]
        jobs: Option<usize>,
        /// Record per-item wall time; the report is then not reproducible.
        #[arg(long)]
        timings: bool,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: qtensor_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let config = CommandConfig::parse();
    match commands::dispatch(&config) {
        Ok(status) => ExitCode::from(status),
        Err(failure) => {
            eprintln!("qtensor: {}", failure.message);
            ExitCode::from(failure.status)
        }
    }
}

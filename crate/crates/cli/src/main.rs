//! `teq`: compute tournament equilibrium sets, check retentiveness, verify the
//! embedded 24-alternative counterexample and search for new ones.
//!
//! All alternative indices on the command line and in output are 1-based.
//!
//! Exit codes: 0 success (or "yes" for `retentive`/`isomorphic`), 1 a negative
//! answer or a failed verification, 2 usage errors, 3 unreadable or malformed
//! input files.

mod commands;
mod indices;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "teq", version, about = "Tournament equilibrium set toolkit (1-based indices)")]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Print nothing; the exit code carries the answer
    #[arg(long, short, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify every claim about the embedded 24-alternative counterexample
    VerifyCounterexample,
    /// Print the tournament equilibrium set
    Teq { file: PathBuf },
    /// Print each inclusion-minimal TEQ-retentive set on its own line
    MinimalRetentive { file: PathBuf },
    /// Check whether a set is TEQ-retentive (exit 0 if so, 1 if not)
    Retentive {
        file: PathBuf,
        /// Comma-separated 1-based indices, ranges like 13-24 allowed
        #[arg(long)]
        set: String,
    },
    /// Print the dominators of one alternative
    Dominators {
        file: PathBuf,
        /// 1-based alternative
        #[arg(long)]
        alt: usize,
        /// Restrict to these alternatives (default: all)
        #[arg(long)]
        within: Option<String>,
    },
    /// Test two tournaments for isomorphism (exit 0 with a witness, 1 if none)
    Isomorphic { file_a: PathBuf, file_b: PathBuf },
    /// Write a seeded random tournament to standard output
    Gen {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Sample tournaments looking for several minimal TEQ-retentive sets
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Uniform)]
        mode: Mode,
        /// Per-trial time limit in milliseconds
        #[arg(long)]
        time_budget_ms: Option<u64>,
        /// Maximum number of witnesses to keep
        #[arg(long, default_value_t = teq_core::search::DEFAULT_WITNESS_CAP)]
        witness_cap: usize,
        /// Directory for witness tournament files
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit key=value lines instead of text
        #[arg(long, conflicts_with = "json")]
        kv: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Uniform,
    Structured,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(output) => {
            if !cli.quiet && !output.text.is_empty() {
                print!("{}", output.text);
                if !output.text.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::from(output.status)
        }
        Err(e) => {
            eprintln!("teq: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

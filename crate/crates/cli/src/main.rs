//! `frobdet`: compute, test and factor semigroup determinants from the command line.

mod commands;
mod dispatch;
mod render;
mod verify;

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "frobdet", version, about = "Exact semigroup determinants: compute, test for vanishing, factor")]
#[command(group(ArgGroup::new("verify_mode").args(["exact", "randomized"])))]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Verify symbolically whenever the matrix fits under the cap (default).
    #[arg(long, global = true)]
    pub exact: bool,
    /// Verify at random points only.
    #[arg(long, global = true)]
    pub randomized: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest matrix dimension expanded symbolically.
    #[arg(long, global = true, default_value_t = 12)]
    pub cap: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Use the contracted determinant (basis without the zero).
    #[arg(long, global = true)]
    pub contracted: bool,
    /// Cocycle file for the twisted contracted determinant.
    #[arg(long, global = true, value_name = "FILE")]
    pub twist: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate a table, printing its canonical form.
    Validate { input: String },
    /// Structural report: idempotents, zero, identity, fixed points.
    Info { input: String },
    /// The symbolic determinant.
    Det { input: String },
    /// Staged test for whether the determinant vanishes.
    Frobenius { input: String },
    /// Möbius function of the natural partial order.
    Mobius {
        input: String,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Factor the determinant with the applicable theorem.
    Factor { input: String },
    /// Structure of the groupoid of an inverse semigroup.
    Groupoid { input: String },
    /// Emit a named family as a `.sgp` table.
    Gen {
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Determinant of the n×n gcd matrix.
    Smith { n: usize },
    /// The dimension identity for the algebra of n×n matrices over F_q.
    Kovacs { n: usize, q: usize },
    /// Generating-character check for a finite ring: `zmod N` or `matmonoid N Q`.
    Ringcheck {
        ring: String,
        params: Vec<usize>,
    },
    /// Check a factorization against a determinant.
    Verify { det_file: String, factorization_file: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Semilattice,
    Inverse,
    Central,
}

/// A failure with its exit code: 1 for domain errors, 2 for usage errors.
#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Usage(String),
}

impl From<frobdet_core::Error> for CliError {
    fn from(e: frobdet_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

//! `circleroots`: unit-circle root analysis from the command line.
//!
//! Exit status: 0 verified, 1 input error or not self-inversive, 2 the
//! oracle contradicts a prediction, 3 inconclusive.

mod commands;
mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use circleroots::config::{TOL_ANNULUS, TOL_CIRCLE, TOL_DETECT};
use circleroots::{Oracle, Tolerances};
use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{AnalyzeArgs, BetheArgs, CriteriaArgs, SalemArgs};

#[derive(Parser, Debug)]
#[command(
    name = "circleroots",
    version,
    about = "Count and locate roots of self-inversive polynomials on the unit circle"
)]
struct Cli {
    /// Relative tolerance for self-inversive detection.
    #[arg(long, global = true, allow_negative_numbers = true, default_value_t = TOL_DETECT)]
    tol_detect: f64,
    /// Band on ||z| - 1| for calling a root on the circle.
    #[arg(long, global = true, allow_negative_numbers = true, default_value_t = TOL_CIRCLE)]
    tol_circle: f64,
    /// Half-width of the winding-number annulus.
    #[arg(long, global = true, allow_negative_numbers = true, default_value_t = TOL_ANNULUS)]
    tol_annulus: f64,
    /// Seed for the root finder's initial guesses.
    #[arg(long, global = true, default_value_t = Oracle::default().seed)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, env = "CIRCLEROOTS_FORMAT", default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Detect self-inversiveness, evaluate every criterion and verify the strongest claim.
    Analyze(AnalyzeArgs),
    /// Both sides and the margin of every criterion inequality.
    Criteria(CriteriaArgs),
    /// Regime of a two-magnon Bethe polynomial, or a sweep over D.
    Bethe(BetheArgs),
    /// Salem certification, optionally after boosting a seed polynomial.
    Salem(SalemArgs),
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub oracle: Oracle,
    pub format: Format,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> anyhow::Result<Self> {
        let tol = Tolerances {
            detect: cli.tol_detect,
            circle: cli.tol_circle,
            annulus: cli.tol_annulus,
            ..Tolerances::default()
        };
        let oracle = Oracle::new(tol, cli.seed)?;
        Ok(Self {
            oracle,
            format: cli.format,
        })
    }

    pub fn tol_detect(&self) -> f64 {
        self.oracle.tol.detect
    }
}

/// Process outcome of a subcommand that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Rejected,
    Mismatch,
    Inconclusive,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(match s {
            Status::Verified => 0,
            Status::Rejected => 1,
            Status::Mismatch => 2,
            Status::Inconclusive => 3,
        })
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<Status> {
    let cfg = RunConfig::from_cli(cli)?;
    match &cli.command {
        Command::Analyze(a) => commands::analyze(a, &cfg, out),
        Command::Criteria(a) => commands::criteria(a, &cfg, out),
        Command::Bethe(a) => commands::bethe(a, &cfg, out),
        Command::Salem(a) => commands::salem(a, &cfg, out),
    }
}

fn main() -> ExitCode {
    // usage errors exit 1; --help and --version exit 0
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

//! `lazy-hopf`: verify documents and fixtures, run constructions, and
//! explore lazy cocycle groups from the command line.
//!
//! Exit codes: 0 every check passed, 1 a check failed, 2 usage or parse
//! error, 3 an enumeration exceeded `--bound`.

mod commands;
mod targets;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use lazy_hopf::scalar::FieldSpec;
use lazy_hopf::{Error, Report};

#[derive(Parser, Debug)]
#[command(name = "lazy-hopf", version, about = "Exact workbench for Hopf algebras and lazy 2-cocycles")]
pub struct Cli {
    /// Ground field: q, f<p> or zeta<n>. Documents default to their own
    /// field, fixtures to q.
    #[arg(long, global = true)]
    pub field: Option<FieldSpec>,
    /// Also write the report as JSON to this path.
    #[arg(long, global = true)]
    pub report_out: Option<PathBuf>,
    /// Seed for the randomized spot checks.
    #[arg(long, global = true, default_value_t = 20_240_601)]
    pub seed: u64,
    /// Largest number of candidate forms an enumeration may sweep.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub bound: u64,
    /// Record wall-clock time in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run an axiom suite on a JSON document or a named fixture.
    Verify {
        /// Path to a JSON document, or a fixture name (kZ<n>, H4, H9,
        /// D(<name>), yd_pair_h4, sigma_t(<t>), theta(<s>)).
        target: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Build a new object, check it, and write it as JSON.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        /// Input document or fixture name.
        input: String,
        /// Output path; the document goes to standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate and use the lazy 2-cocycles of a fixture.
    Cocycles {
        fixture: String,
        #[arg(value_enum)]
        action: Action,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hopf,
    Cocycle,
    Identities,
    Admissible,
    Yd,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Double,
    Dual,
    Diagonal,
    Biproduct,
    Smash,
    Extension,
    Twist,
    CentralExtension,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Enumerate,
    GroupTable,
    ExtendDouble,
    ExtendBiproduct,
    LiftDemo,
}

/// Why a command stopped without a complete report.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    pub report: Option<Report>,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into(), report: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::EnumerationTooLarge { .. } => Failure { code: 3, message, report: None },
            Error::AxiomFailure { report, .. } => Failure { code: 1, message, report: Some(*report) },
            Error::Document(_) | Error::Scalar(_) | Error::DimensionMismatch(_) | Error::InfiniteField(_) => {
                Failure::usage(message)
            }
            _ => Failure { code: 1, message, report: None },
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), Failure> {
    print!("{}", report.render_text());
    if let Some(path) = &cli.report_out {
        let json = serde_json::to_string_pretty(report).expect("reports serialize") + "\n";
        fs::write(path, json).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = commands::run(&cli);
    let stamp = |mut r: Report| {
        if cli.timing {
            r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        r
    };
    match outcome {
        Ok(report) => {
            let report = stamp(report);
            if let Err(f) = emit(&cli, &report) {
                eprintln!("error: {}", f.message);
                return ExitCode::from(f.code);
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            if let Some(r) = f.report {
                let _ = emit(&cli, &stamp(r));
            }
            ExitCode::from(f.code)
        }
    }
}

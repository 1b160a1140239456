//! `unilat`: exact computations with lattices, codes, automorphism types and
//! cyclotomic ideal lattices.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use unilat::Error;

use args::Cli;

/// Why a command failed, with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// 1: a precondition or mathematical check failed.
    Domain(String),
    /// 2: an input file or argument could not be read.
    Parse(String),
    /// 3: an enumeration ran out of nodes.
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match commands::run(&cli) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Domain(m) => (1, m),
                Failure::Parse(m) => (2, m),
                Failure::Budget(m) => (3, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

//! Command-line front end for the `sextic-core` library.

pub mod args;
pub mod classify;
pub mod curve;
pub mod dessins;
pub mod verify;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use args::{Cli, Command, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

/// A report that can be printed as JSON or markdown.
pub trait Output: Serialize {
    fn markdown(&self) -> String;

    fn success(&self) -> bool {
        true
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Md => self.markdown(),
        }
    }
}

fn emit<T: Output>(report: Result<T, CliError>, format: Format) -> i32 {
    match report {
        Ok(r) => {
            print!("{}", r.render(format));
            if r.success() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match &cli.command {
        Command::Classify(a) => {
            let start = Instant::now();
            let code = emit(classify::classify(a), a.format);
            if a.timings {
                eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
            }
            code
        }
        Command::Dessins(a) => emit(dessins::dessins(a), a.format),
        Command::Curve(a) => emit(curve::curve(&a.file), a.format),
        Command::Verify(a) => emit(verify::verify(a), a.format),
        Command::DumpFamilies => {
            println!("{}", sextic_core::catalog::families_json());
            EXIT_OK
        }
    }
}

/// Caps rayon's global pool from `SEXTIC_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("SEXTIC_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("SEXTIC_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}

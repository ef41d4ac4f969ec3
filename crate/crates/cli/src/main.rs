use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod bench;
mod sort;
mod trace;
mod verify;

/// Sorting, benchmarking and tracing over heap-ordered DAGs.
#[derive(Parser, Debug)]
#[command(name = "ordag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sort whitespace-separated integers over a DAG topology.
    Sort(sort::SortArgs),
    /// Sweep topologies, sizes and input patterns; emit comparison counts.
    Bench(bench::BenchArgs),
    /// Run the invariant and bound suites.
    Verify(verify::VerifyArgs),
    /// Emit per-iteration snapshots of a label lowering.
    Trace(trace::TraceArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    pub fn write(&self, data: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, data)
                .map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut stdout = io::stdout().lock();
                stdout
                    .write_all(data.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| Failure::new(1, format!("write failed: {e}")))
            }
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Dot,
}

/// An error with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

/// Reads a path, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(2, format!("cannot read standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(2, format!("cannot read {path}: {e}")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sort(a) => sort::run(a),
        Command::Bench(a) => bench::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Trace(a) => trace::run(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("ordag: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

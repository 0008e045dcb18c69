use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};

use seqcm_cli::{parse_input, render_human, run_command, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Json,
}

/// Sequentially Cohen-Macaulay and sequentially generalized Cohen-Macaulay
/// analysis of quotients of Q[x1..xn].
#[derive(Parser, Debug)]
#[command(name = "seqcm", version)]
struct Args {
    /// Session file: ring, ideal and element declarations, one command.
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Samples per clause for `harness`.
    #[arg(long, default_value_t = 25)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Record wall-clock time in the report. Reports with timing are not
    /// byte-reproducible.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("seqcm: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let session = match parse_input(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}:{}:{}: error: {}", args.input.display(), e.line, e.col, e.message);
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let mut doc = match run_command(&session, RunOptions { seed: args.seed, samples: args.samples }) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("seqcm: {e}");
            return ExitCode::from(1);
        }
    };
    if args.timing {
        doc.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    match args.format {
        Format::Json => print!("{}", doc.to_json()),
        Format::Human => print!("{}", render_human(&doc)),
    }
    ExitCode::SUCCESS
}

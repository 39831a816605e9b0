use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use coquecigrue::io::{parse_input, run_command, Command, Options, TrivChoice};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Check,
    Liezation,
    Envelope,
    Integrate,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Triv {
    Left,
    Sym,
    Both,
}

/// Exact computations with Leibniz algebras, Lie algebras in LM and their
/// formal integration.
#[derive(Debug, Parser)]
#[command(version)]
struct Cli {
    command: Cmd,
    file: PathBuf,
    /// Truncation order of integrated series.
    #[arg(long, default_value_t = 4)]
    order: usize,
    /// Degree bound for the dialgebra sweep.
    #[arg(long, default_value_t = 3)]
    degree: usize,
    #[arg(long, value_enum, default_value = "left")]
    triv: Triv,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// Include wall-clock timings (reports are then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = match parse_input(&cli.file) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let command = match cli.command {
        Cmd::Check => Command::Check,
        Cmd::Liezation => Command::Liezation,
        Cmd::Envelope => Command::Envelope,
        Cmd::Integrate => Command::Integrate,
        Cmd::Oracle => Command::Oracle,
    };
    let triv = match cli.triv {
        Triv::Left => TrivChoice::Left,
        Triv::Sym => TrivChoice::Sym,
        Triv::Both => TrivChoice::Both,
    };
    let opts = Options {
        order: cli.order,
        degree: cli.degree,
        triv,
        timings: cli.timings,
    };
    let report = run_command(command, &doc, &opts);
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit_code() as u8)
}

//! Command-line front end: generate constructions, verify invariants, run
//! oracles and experiments, and export instances.
//!
//! Exit codes: 0 on success, 1 when a verification or hard experiment
//! assertion fails, 2 on invalid usage or malformed input.

mod commands;
mod instance;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "comparability", version, about = "Constructions and verification for unions of comparability graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file from construction parameters
    #[command(subcommand)]
    Gen(commands::gen::GenKind),
    /// Check every invariant applicable to an instance file
    Verify(commands::verify::VerifyArgs),
    /// Run exact oracles and homogeneous-set extraction on an instance
    Analyze(commands::analyze::AnalyzeArgs),
    /// Run seeded experiments and write a report
    #[command(subcommand)]
    Experiment(commands::experiment::ExperimentKind),
    /// Export an instance to DIMACS or DOT
    Export(commands::export::ExportArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => commands::gen::run(args),
        Command::Verify(args) => commands::verify::run(args),
        Command::Analyze(args) => commands::analyze::run(args),
        Command::Experiment(args) => commands::experiment::run(args),
        Command::Export(args) => commands::export::run(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

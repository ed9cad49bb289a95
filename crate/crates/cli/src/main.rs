//! Command-line front end for the inequality checkers and the
//! parametric-circuit simulator.
//!
//! Exit status: 0 when every checked inequality passes, 1 when any margin
//! fails its tolerance, 2 on invalid input or usage.

mod check;
mod io;
mod random_cmd;
mod simulate;
mod summary;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "entroq",
    version,
    about = "Entropic-inequality checks for single-qudit states and observables, plus a parametric-oscillator tomogram simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one inequality (or all applicable ones) over a batch of inputs.
    Check(check::CheckArgs),
    /// Integrate a frequency profile and emit dispersion/tomogram curves.
    Simulate(simulate::SimulateArgs),
    /// Generate reproducible random states, Hermitian matrices, or observables.
    Random(random_cmd::RandomArgs),
    /// Aggregate a report stream into per-inequality statistics.
    ReportSummary(summary::SummaryArgs),
}

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check(args) => check::run(args),
        Command::Simulate(args) => simulate::run(args),
        Command::Random(args) => random_cmd::run(args),
        Command::ReportSummary(args) => summary::run(args),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

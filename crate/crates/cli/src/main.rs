//! `triblock`: check, construct, sweep and render saturated blockers.

mod check;
mod construct;
mod failure;
mod input;
mod render;
mod report;
mod sweep;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use failure::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "triblock",
    version,
    about = "Saturated blockers for triangulations of convex polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

// parsed once, so the variant size gap does not matter
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
enum Command {
    /// Decide blocker and saturation for a JSON document and classify it.
    ///
    /// Exit status: 0 saturated blocker, 1 not a blocker, 2 blocker with a
    /// redundant edge, 3 and above for input or usage errors.
    Check(check::Args),
    /// Build a blocker from one of the constructions and print its document.
    Construct(construct::Args),
    /// Batch runs: spectrum constructions, exhaustive searches, coefficient tables.
    Sweep(sweep::Args),
    /// Draw a document as SVG.
    Render(render::Args),
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check(args) => check::run(args),
        Command::Construct(args) => construct::run(args),
        Command::Sweep(args) => sweep::run(args),
        Command::Render(args) => render::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

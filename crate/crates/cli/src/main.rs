//! `polycode`: construct and analyze generalized polynomial polar codes.

mod commands;
mod render;
mod source;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polycode::Error;

use commands::{ConstructArgs, Ctx, DualArgs, ShowRowsArgs, StructureArgs, TablesArgs, Verify, WeightsArgs};
use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "polycode",
    version,
    about = "Generalized polynomial polar codes: construction, duals, structure and weights"
)]
#[command(
    after_help = "Exit codes: 0 success, 1 cross-check failure, 2 invalid input, 3 outside theorem scope, 4 budget exceeded.\nPOLYCODE_MAX_M caps m."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Re-derive printed quantities by an independent method.
    #[arg(long, global = true, value_enum, default_value_t = Verify::Off)]
    verify: Verify,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Information set, frozen set and pretransform class.
    Construct(ConstructArgs),
    /// Monomial and polynomial form of each row.
    ShowRows(ShowRowsArgs),
    /// Generator of the dual code.
    Dual(DualArgs),
    /// Monomial sub/supercodes, intersections, sweeps and ensembles.
    Structure(StructureArgs),
    /// Minimum weight, its multiplicity and the lower bound.
    Weights(WeightsArgs),
    /// Minimum-weight tables over all co-dimensions.
    Tables(TablesArgs),
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::TheoremScope(_)) => 3,
        Some(Error::BudgetExceeded { .. }) => 4,
        Some(Error::Verification(_)) => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let ctx = Ctx {
        format: cli.format,
        verify: cli.verify,
    };
    let out = match &cli.command {
        Command::Construct(a) => commands::construct(a, &ctx)?,
        Command::ShowRows(a) => commands::show_rows(a, &ctx)?,
        Command::Dual(a) => commands::dual(a, &ctx)?,
        Command::Structure(a) => commands::structure(a, &ctx)?,
        Command::Weights(a) => commands::weights(a, &ctx)?,
        Command::Tables(a) => commands::tables(a, &ctx)?,
    };
    match &cli.out {
        Some(path) => {
            fs::write(path, out).map_err(|e| Error::Validation(format!("writing {}: {e}", path.display())))?
        }
        None => print!("{out}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if matches!(err.downcast_ref::<Error>(), Some(Error::BudgetExceeded { .. })) {
                eprintln!("hint: raise the limit with --budget");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}

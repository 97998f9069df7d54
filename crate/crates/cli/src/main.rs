mod commands;
mod record;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hardedge::Error;

use commands::{MellinArgs, MomentArgs, PointArgs, SimulateArgs, VerifyArgs, ZetaArgs};
use record::{Format, Record};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

/// Inverse moments of the β-Laguerre ensemble at the hard edge.
#[derive(Debug, Parser)]
#[command(name = "hardedge", version)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Drop elapsed_ms so repeated runs are byte-identical
    #[arg(long, global = true)]
    omit_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact or limiting inverse moment, integer or complex order
    Moment(MomentArgs),
    /// Rayleigh sums ζ_ν(2k) of Bessel zeros
    Zeta(ZetaArgs),
    /// Monte Carlo estimate on the tridiagonal model
    Simulate(SimulateArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Point evaluation of a spectral density
    Density(PointArgs),
    /// Mellin transform of a density by quadrature
    Mellin(MellinArgs),
}

fn configure_threads() -> Result<(), String> {
    let Ok(text) = std::env::var("HARDEDGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = text
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("HARDEDGE_THREADS must be a positive integer, got {text:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| format!("cannot size the worker pool: {e}"))
}

fn exit_code(error: &Error) -> u8 {
    if error.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_INPUT
    }
}

fn run(command: &Command) -> Result<Record, Error> {
    match command {
        Command::Moment(a) => commands::moment(a),
        Command::Zeta(a) => commands::zeta(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Verify(a) => Ok(commands::verify(a)),
        Command::Density(a) => commands::density(a),
        Command::Mellin(a) => commands::mellin(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(EXIT_INPUT);
    }
    let mut record = match run(&cli.command) {
        Ok(record) => record,
        Err(error) => {
            eprintln!("error: {error}");
            return ExitCode::from(exit_code(&error));
        }
    };
    if cli.omit_timing {
        record.elapsed_ms = None;
    }
    if let Err(e) = record.emit(cli.format) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(status(&record))
}

fn status(record: &Record) -> u8 {
    if record.passed == Some(false) {
        EXIT_VERIFY
    } else {
        0
    }
}

//! Command-line front end for the AdS₂ Dirac field toolkit.

pub mod args;
pub mod commands;
pub mod error;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::args::{quad_tolerance, Cli, Command};
use crate::commands::{Context, Output};
use crate::error::{CliError, Result};

fn execute(cli: &Cli) -> Result<()> {
    let ctx = Context { format: cli.format, quad_tol: quad_tolerance(cli.quad_tol)? };
    let mut breaches = 0;
    let out: Output = match &cli.command {
        Command::Modes(a) => commands::modes(&ctx, a)?,
        Command::Spectrum(a) => commands::spectrum_cmd(&ctx, a)?,
        Command::Classify(a) => commands::classify(&ctx, a)?,
        Command::Deficiency(a) => commands::deficiency(&ctx, a)?,
        Command::Invariance(a) => commands::invariance(&ctx, a)?,
        Command::Asymptotics(a) => commands::asymptotics(&ctx, a)?,
        Command::Verify(a) => {
            let (out, n) = commands::verify(&ctx, a)?;
            breaches = n;
            out
        }
        Command::Fock(a) => commands::fock(&ctx, a)?,
    };
    let text = out.render()?;
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    if breaches > 0 {
        return Err(CliError::ChecksFailed(breaches));
    }
    Ok(())
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("ads2: {e}");
            e.exit_code()
        }
    }
}

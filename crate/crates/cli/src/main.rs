//! `cosserat`: command-line front end for the cosserat library.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or parse error, 3 physically invalid input.

mod cli;
mod commands;
mod error;
mod output;

use std::io::Write;

use clap::Parser;

use cli::{Cli, Command};
use commands::{Context, DispersionArgs};
use error::{CliError, Result};

fn run(cli: &Cli, out: &mut impl Write) -> Result<i32> {
    let units = cli.units.as_deref().map(str::parse).transpose().map_err(|e: cosserat::Error| CliError::Usage(e.to_string()))?;
    let ctx = Context { format: cli.format, units };
    match &cli.command {
        Command::Convert { input, to } => commands::run_convert(&ctx, out, input, to),
        Command::Check { input } => commands::run_check(&ctx, out, input),
        Command::Energy { input, strain, curvature } => commands::run_energy(&ctx, out, input, strain, curvature),
        Command::Dispersion { input, k_min, k_max, points, output, sidecar } => commands::run_dispersion(
            &ctx,
            out,
            DispersionArgs {
                input,
                k_min: *k_min,
                k_max: *k_max,
                points: *points,
                output: output.as_ref(),
                sidecar: sidecar.as_ref(),
            },
        ),
        Command::NyeVerify { degree, seed, points, field } => {
            commands::run_nye_verify(&ctx, out, *degree, *seed, *points, *field)
        }
        Command::Reproduce => commands::run_reproduce(&ctx, out),
    }
}

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    std::process::exit(code);
}

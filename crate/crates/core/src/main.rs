use std::process::ExitCode;

use clap::Parser;
use ssx_core::cli::commands::{dispatch, write_report, Cli, DEFAULT_DIM};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.dim > DEFAULT_DIM {
        eprintln!("warning: --dim {} is above {DEFAULT_DIM}; sizes grow exponentially with the dimension", cli.dim);
    }
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    print!("{}", report.to_text());
    if let Some(path) = &cli.out {
        if let Err(e) = write_report(&report, path) {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}

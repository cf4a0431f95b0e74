use std::process::ExitCode;

use clap::Parser;
use omega_harness::cli::{execute, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(out) => {
            for line in out.lines {
                println!("{line}");
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(EXIT_USAGE)
        }
    }
}

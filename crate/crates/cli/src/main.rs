use std::process::ExitCode;

use clap::Parser;
use csmlap_cli::{run, RunConfig, USAGE_EXIT};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(outcome) => {
            print!("{}", outcome.render(config.format));
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT)
        }
    }
}

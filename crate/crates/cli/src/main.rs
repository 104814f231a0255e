use std::process::ExitCode;

use clap::Parser;
use layer_atlas_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli
        .shared
        .resolve()
        .and_then(|config| run(cli.command, &config, &mut std::io::stdout()));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

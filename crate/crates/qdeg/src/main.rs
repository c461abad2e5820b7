use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = qdeg::cli::Cli::parse();
    match qdeg::cli::run(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

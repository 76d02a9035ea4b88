mod cli;
mod commands;
mod config;

use clap::Parser;

/// A command failure with its process exit code: 1 for input problems,
/// 2 for internal errors.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }

    pub fn internal(err: impl std::fmt::Display) -> Self {
        CliError { code: 2, message: err.to_string() }
    }
}

fn main() {
    let cli = cli::Cli::parse();
    let result = match &cli.command {
        cli::Command::Features(args) => commands::features(args),
        cli::Command::Correlate(args) => commands::correlate(args),
        cli::Command::SelectFeatures(args) => commands::select_features(args),
        cli::Command::Cluster(args) => commands::cluster(args),
        cli::Command::Detect(args) => commands::detect(args),
        cli::Command::Simulate(args) => commands::simulate(args),
        cli::Command::Econ(args) => commands::econ_cmd(args),
        cli::Command::Scan(args) => commands::scan(args),
    };
    if let Err(e) = result {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

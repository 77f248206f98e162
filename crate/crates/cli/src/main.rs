use std::process::ExitCode;

use clap::Parser;

use rbalg_cli::{dispatch, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = dispatch(&cli);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit_code() as u8)
}

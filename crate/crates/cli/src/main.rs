use std::process::ExitCode;

use clap::Parser;
use yb_cli::cli::Cli;
use yb_cli::commands::{run, Output};
use yb_cli::report::ReportDocument;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(&cli, &argv) {
        Ok(Output::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(doc)) => {
            if cli.json {
                print!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            ExitCode::from(doc.status.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.json {
                print!("{}", ReportDocument::error(&argv, &e.0).to_json());
            }
            ExitCode::from(2)
        }
    }
}

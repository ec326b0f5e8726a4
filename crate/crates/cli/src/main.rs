use std::process::ExitCode;

use clap::Parser;
use rubin_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = run(&cli);
    let rendered = report.render();
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(code as u8)
}

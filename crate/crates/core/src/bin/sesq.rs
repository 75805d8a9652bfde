use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::Parser;
use sesquivalent::cli::{error_report, execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json_path, result) = execute(&cli);
    let (report, code) = match result {
        Ok(out) => {
            for line in &out.log {
                eprintln!("{line}");
            }
            (out.report, out.exit_code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            (error_report(&err), err.exit_code())
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    match json_path {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => {
            let written = writeln!(std::io::stdout().lock(), "{text}");
            if let Err(e) = written {
                if e.kind() != ErrorKind::BrokenPipe {
                    eprintln!("error: stdout: {e}");
                    return ExitCode::from(1);
                }
            }
        }
    }
    ExitCode::from(code as u8)
}

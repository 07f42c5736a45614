use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use seidel_cli::{execute, Cli, CliError, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            eprintln!("run `seidel --help` for usage");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(code)
}

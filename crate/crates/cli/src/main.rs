use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use subrank_cli::{execute, exit, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(exit::IO as u8);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(exit::VERIFICATION as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::process::ExitCode;

use clap::Parser;

use resistnet::cli::{self, Cli, THREADS_ENV_VAR};

fn main() -> ExitCode {
    if let Ok(value) = std::env::var(THREADS_ENV_VAR) {
        match value.parse::<usize>() {
            Ok(0) => {} // auto
            Ok(threads) => {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()
                {
                    eprintln!("warning: could not apply {THREADS_ENV_VAR}={threads}: {e}");
                }
            }
            Err(_) => {
                eprintln!("error: {THREADS_ENV_VAR} must be a non-negative integer, got '{value}'");
                return ExitCode::from(cli::EXIT_USAGE as u8);
            }
        }
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => cli::EXIT_OK,
                _ => cli::EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    ExitCode::from(cli::run(cli, &mut out) as u8)
}

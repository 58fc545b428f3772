use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use nquot_cli::{run, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let status = match run(&cfg, &mut out) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    let _ = out.flush();
    ExitCode::from(status as u8)
}

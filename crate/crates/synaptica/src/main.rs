use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use synaptica::verify::Hooks;
use synaptica::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = std::env::var("SYNAPTICA_TOL").ok();
    let out = execute(&cli, tol.as_deref(), Hooks::default());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.status as u8)
}

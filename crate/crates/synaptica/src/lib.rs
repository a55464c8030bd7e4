//! File formats, verification suites and the command-line front end for
//! `synaptica-core`.
//!
//! Every command produces a [`report::Report`]: a JSON value with a stable
//! key order and an exit status (0 valid, 1 a law or check failed, 2 the
//! input could not be used).

pub mod commands;
pub mod corpus;
pub mod document;
pub mod report;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::report::Report;
use crate::verify::Hooks;

#[derive(Debug, Parser)]
#[command(
    name = "synaptica",
    version,
    about = "Audit and explore finite quantum structures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the defining laws of every document in the files.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Only documents of this kind.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// Spectral report for symmetric matrices and functions.
    Spectral {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Only the element with this label.
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// State spaces: constraints, dimension and extremal states.
    States {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        kind: Option<String>,
        /// List the extremal states.
        #[arg(long)]
        extremal: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Run a verification suite: posets, effect, order-unit, synaptic,
    /// states, stone or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pretty: bool,
    },
}

/// What a run writes and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

fn usage(message: String) -> Output {
    Output {
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
        status: 2,
    }
}

/// Runs one command. `tol_var` is the value of `SYNAPTICA_TOL`, if set.
pub fn execute(cli: &Cli, tol_var: Option<&str>, hooks: Hooks) -> Output {
    let report_tol = match commands::report_tolerance(tol_var) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    let (files, pretty, run): (&[PathBuf], bool, Box<dyn Fn(&document::Workspace) -> _>) =
        match &cli.command {
            Command::Check {
                files,
                kind,
                pretty,
            } => (
                files,
                *pretty,
                Box::new(move |ws: &document::Workspace| {
                    commands::check(ws, kind.as_deref(), report_tol)
                }),
            ),
            Command::Spectral {
                files,
                label,
                pretty,
            } => (
                files,
                *pretty,
                Box::new(move |ws: &document::Workspace| commands::spectral(ws, label.as_deref())),
            ),
            Command::States {
                files,
                kind,
                extremal,
                pretty,
            } => (
                files,
                *pretty,
                Box::new(move |ws: &document::Workspace| {
                    commands::states(ws, kind.as_deref(), *extremal)
                }),
            ),
            Command::Verify {
                suite,
                seed,
                pretty,
            } => {
                let config = verify::Config {
                    seed: *seed,
                    report_tol,
                    hooks,
                };
                return match verify::run(suite, &config) {
                    Ok(r) => {
                        let stdout = if *pretty {
                            r.table()
                        } else {
                            Report {
                                body: r.to_value(),
                                status: 0,
                            }
                            .render(false)
                        };
                        Output {
                            stdout,
                            stderr: String::new(),
                            status: if r.passed { 0 } else { 1 },
                        }
                    }
                    Err(e) => usage(e),
                };
            }
        };
    let mut out = Output {
        stdout: String::new(),
        stderr: String::new(),
        status: 0,
    };
    for path in files {
        match document::load(path).and_then(|ws| run(&ws)) {
            Ok(report) => {
                out.stdout.push_str(&report.render(pretty));
                out.status = out.status.max(report.status);
            }
            Err(e) => {
                out.stderr
                    .push_str(&format!("error: {}: {e}\n", path.display()));
                out.status = 2;
            }
        }
    }
    out
}

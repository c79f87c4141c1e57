//! The `hda` command line: argument parsing, orchestration and reports.

pub mod args;
pub mod commands;
pub mod report;
pub mod suites;
pub mod table;

use std::time::Instant;

use clap::Parser;

use args::{Cli, Command, Format};
use report::{Report, Status};

/// Output of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub report: Option<Report>,
}

pub fn execute(cli: &Cli) -> Report {
    let g = &cli.global;
    let start = Instant::now();
    let mut r = match &cli.command {
        Command::Validate { path } => commands::validate(path, g),
        Command::Homology { path, theory, max_dim, reduced, fast, oracle_token } => {
            let a = commands::HomologyArgs {
                theory,
                max_dim: *max_dim,
                reduced: *reduced,
                fast: *fast,
                oracle_token: oracle_token.as_deref(),
            };
            commands::homology(path, &a, g)
        }
        Command::Nerve { path, theory, max_dim } => commands::nerve_dump(path, theory, *max_dim, g),
        Command::Check { suite_name, suite, n, input, nerve, max_dim } => {
            let name = suite.as_deref().or(suite_name.as_deref()).unwrap_or("");
            let a = suites::SuiteArgs { suite: name, n: *n, input: input.as_deref(), nerve, max_dim: *max_dim };
            suites::check(&a, g)
        }
        Command::Compare { path, max_dim } => commands::compare(path, *max_dim, g),
    };
    if g.timing {
        r.timing_ms = Some(start.elapsed().as_millis());
    }
    r
}

/// Parses `argv` (program name first) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::ValidationFailure.exit_code() } else { 0 };
            return Outcome { code, stdout: e.to_string(), report: None };
        }
    };
    let r = execute(&cli);
    let stdout = match cli.global.format {
        Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
        Format::Table => table::render(&r),
    };
    Outcome { code: r.status.exit_code(), stdout, report: Some(r) }
}

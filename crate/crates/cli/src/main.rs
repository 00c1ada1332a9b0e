//! `oca`: command-line front end for the `oca-core` library.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 I/O error.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};

pub enum CliError {
    Usage(String),
    Domain(oca_core::Error),
    Io(std::io::Error),
}

impl From<oca_core::Error> for CliError {
    fn from(e: oca_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(e) if e.is_io() => 3,
            CliError::Domain(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure threads: {e}")))?;
    }
    let rendered = match &cli.command {
        Command::Latin(a) => commands::latin(a),
        Command::Orthogonal(a) => commands::orthogonal(a),
        Command::Cycles(a) => commands::cycles(a),
        Command::Keystream(a) => commands::keystream(a),
        Command::Table1(a) => commands::table1(a),
        Command::Table2(a) => commands::table2(a),
        Command::Analyze(a) => commands::analyze(a),
    }?;
    let body = match cli.format {
        Format::Text => rendered.text,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rendered.json).expect("valid json")),
        Format::Csv => rendered.csv.ok_or_else(|| CliError::Usage("csv output is not available here".into()))?,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, body).map_err(CliError::Io),
        None => std::io::stdout().lock().write_all(body.as_bytes()).map_err(CliError::Io),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! Command-line front end for `boxkite-core`: argument parsing, JSON
//! documents, and text/CSV/SVG renderers.

pub mod cli;
pub mod doc;
pub mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

pub use cli::{execute, outcome, Cli, CliError, Command, Format, Outcome, OutputDocument};
pub use doc::Document;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Everything a caller needs to finish a run: the exit code, the rendered
/// output (if any), where it should go, and a message for standard error.
#[derive(Debug)]
pub struct Run {
    pub code: u8,
    pub document: Option<OutputDocument>,
    pub out: Option<PathBuf>,
    pub diagnostic: Option<String>,
}

/// Parses `argv` (program name first) and runs the command. Nothing is
/// written; see [`Run`].
pub fn run<I, T>(argv: I) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes with text on stdout.
            let code = u8::try_from(e.exit_code()).unwrap_or(EXIT_USAGE);
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Run {
                    code,
                    document: Some(OutputDocument { format: Format::Text, payload: rendered.into_bytes() }),
                    out: None,
                    diagnostic: None,
                }
            } else {
                Run { code, document: None, out: None, diagnostic: Some(rendered) }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            Run { code: outcome.exit_code(), document: Some(outcome.document), out: cli.out, diagnostic: None }
        }
        Err(e) => Run { code: EXIT_USAGE, document: None, out: None, diagnostic: Some(format!("error: {e}\n")) },
    }
}

/// JSON Schema (draft 2020-12) for every `--format json` document.
pub const SCHEMA: &str = include_str!("../schema/document.schema.json");

//! Command-line driver for the qdouble check suites: argument parsing,
//! suite dispatch, manifests and report rendering.

pub mod args;
pub mod output;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command};
pub use output::{Entry, RunReport};
pub use suites::{load_manifest, run_manifest, run_suite, CheckManifest, CliError, ManifestEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` (including the program name), runs the suite and writes
/// either JSON to `--out` or text to `stdout`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(stdout, "{}", e.render())
            } else {
                write!(stderr, "{}", e.render())
            };
            return code;
        }
    };
    if let Some(limit) = cli.max_dim {
        std::env::set_var(qdouble::hopf::MAX_DIM_ENV, limit.to_string());
    }
    let report = match run_suite(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, report.to_json()).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(report.to_text().as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    exit_code(&report)
}

/// 1 if any check failed, else 0.
pub fn exit_code(report: &RunReport) -> i32 {
    if report.any_failed() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

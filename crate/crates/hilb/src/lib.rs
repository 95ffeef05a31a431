//! Command-line front end and output formats for `hilb-core`.

pub mod cli;
pub mod commands;
mod error;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::cli::{Cli, Command};
pub use crate::error::CliError;
use crate::output::{Format, OutputRecord};

pub fn execute(command: &Command) -> Result<OutputRecord, CliError> {
    match command {
        Command::Partitions { n } => commands::partitions(*n),
        Command::Betti(a) => commands::betti(a.space, a.n, a.rho),
        Command::Incidence { n, check } => commands::incidence(*n, *check),
        Command::Strata { n } => commands::strata(*n),
        Command::Nakajima { n, method } => commands::nakajima(*n, *method),
        Command::Lattice(a) => commands::lattice(a.blowup, a.square_exceptional, a.base),
        Command::Goettsche(a) => commands::goettsche(a.betti, a.torder, a.compare_fixed_points),
        Command::Verify(a) => verify::verify(a.nmax, &a.only),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code: 0 on success, 1 when a check fails, 2 on bad usage.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let record = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    report(&record, cli.format, out, err)
}

/// Writes `record` and, when a check failed, the failure manifest.
fn report(record: &OutputRecord, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Err(e) = record.render(format, out) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    if record.ok {
        return 0;
    }
    let _ = writeln!(err, "failure manifest:");
    for section in record.payload.sections.iter().filter(|s| s.name == "failures") {
        for row in &section.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(err, "  {}", line.join(": "));
        }
    }
    if record.command != "verify" {
        let _ = writeln!(err, "  {}: a reported check did not hold", record.command);
    }
    1
}

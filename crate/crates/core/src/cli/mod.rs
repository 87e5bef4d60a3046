//! Command line front end: problem files in, text or JSON reports out.
//!
//! Exit codes: 0 success, 2 invalid input, 3 precondition violated,
//! 4 internal invariant breach.

mod input;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Mode;
use crate::error::{Error, ErrorKind};

pub use input::{parse_input, parse_str, MapSpec, ProblemSpec};
pub use report::{
    render_text, run_analyze, run_bq_classify, run_check_hom, run_classify_quotient, run_forms, run_simulate, Report,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "evoalg", version, about = "Exact analysis of evolution algebras of bisexual populations")]
pub struct Cli {
    /// Reject negative inheritance coefficients (default).
    #[arg(long, global = true, conflicts_with = "permissive")]
    strict: bool,
    /// Accept negative inheritance coefficients; rows must still sum to 1.
    #[arg(long, global = true)]
    permissive: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FileArg {
    /// Problem file (JSON).
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: dibaricity, invariant forms, annihilator, predicates, identities.
    Analyze(FileArg),
    /// Trajectory of a named state under the evolution operator.
    Simulate {
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        state: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Add 12-digit decimal approximations to each row.
        #[arg(long)]
        decimal: bool,
    },
    /// Invariant forms of X, Y and named forms; annihilator; disappearing forms.
    Forms(FileArg),
    /// bq-homomorphism commands.
    Bq {
        #[command(subcommand)]
        command: BqCommand,
    },
    /// Verify a named map as an algebra homomorphism.
    CheckHom {
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        map: String,
    },
    /// Classify the quotient by a named ideal of codimension 2.
    ClassifyQuotient {
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        ideal: String,
    },
}

#[derive(Subcommand, Debug)]
enum BqCommand {
    /// Verify and classify (X, Y) and the named pairs.
    Classify {
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        pair: Option<String>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Input => EXIT_INPUT,
        ErrorKind::Precondition => EXIT_PRECONDITION,
        ErrorKind::Invariant => EXIT_INVARIANT,
    }
}

/// Parses arguments, runs the command and writes the report. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mode = if cli.permissive {
        Some(Mode::Permissive)
    } else if cli.strict {
        Some(Mode::Strict)
    } else {
        None
    };
    match execute(&cli.command, mode) {
        Ok((report, simulate)) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.body).expect("serializable") + "\n",
                Format::Text if simulate => render_trajectory(&report),
                Format::Text => render_text(&report.body),
            };
            let _ = out.write_all(text.as_bytes());
            if report.breaches > 0 {
                let _ =
                    writeln!(err, "error: {} internal invariant breach(es) recorded in the report", report.breaches);
                EXIT_INVARIANT
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: &Command, mode: Option<Mode>) -> crate::Result<(Report, bool)> {
    let load = |f: &FileArg| parse_input(&f.file, mode);
    Ok(match command {
        Command::Analyze(f) => (run_analyze(&load(f)?), false),
        Command::Simulate { input, state, steps, decimal } => {
            (run_simulate(&load(input)?, state, *steps, *decimal)?, true)
        }
        Command::Forms(f) => (run_forms(&load(f)?), false),
        Command::Bq { command: BqCommand::Classify { input, pair } } => {
            (run_bq_classify(&load(input)?, pair.as_deref())?, false)
        }
        Command::CheckHom { input, map } => (run_check_hom(&load(input)?, map)?, false),
        Command::ClassifyQuotient { input, ideal } => (run_classify_quotient(&load(input)?, ideal)?, false),
    })
}

fn render_trajectory(report: &Report) -> String {
    let body = &report.body;
    let join = |v: &serde_json::Value| {
        v.as_array().map(|a| a.iter().filter_map(|s| s.as_str()).collect::<Vec<_>>().join(", ")).unwrap_or_default()
    };
    let mut out = format!(
        "trajectory of {} for {} steps\n",
        body["inputs"]["state"].as_str().unwrap_or(""),
        body["inputs"]["steps"]
    );
    for row in body["rows"].as_array().into_iter().flatten() {
        out.push_str(&format!("t={}  x=({})  y=({})", row["t"], join(&row["x"]), join(&row["y"])));
        if let Some(a) = row.get("approx") {
            out.push_str(&format!("  approx x=({}) y=({})", join(&a["x"]), join(&a["y"])));
        }
        out.push('\n');
    }
    out
}

//! Command-line front end: `verify <suite>` and `construct <id>`.
//!
//! Exit codes: 0 when every claim holds, 1 on a violated claim or a failed
//! construction, 2 on a usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::modstruct::LINE_CAP;
use crate::report::{construct, run_suite, to_tsv, ConstructParams, Suite, SuiteParams};

#[derive(Debug, Parser)]
#[command(name = "regulib", version, about = "Regular unipotent elements: constructions and verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and print its report.
    Verify {
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
    /// Build a datum and print it.
    Construct {
        /// One of the construction ids listed by `--help`.
        id: String,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: Option<usize>,
        /// Table family for `natural`: A, B, C or D.2.
        #[arg(long)]
        family: Option<String>,
        /// Jordan type as "n1+n2+...", for `power-map` and `tensor-type`.
        #[arg(long)]
        partition: Option<String>,
        /// Second tensor factor for `tensor-type` (defaults to `--partition`).
        #[arg(long)]
        partition2: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long = "max-n")]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub f: Option<u32>,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, env = "REGULIB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 1 runs serially.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Bound on the number of lines enumerated by exhaustive searches.
    #[arg(long, default_value_t = LINE_CAP)]
    pub cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Tsv,
}

fn usage_or_failure(e: &Error) -> i32 {
    match e {
        Error::InvalidParams(_) | Error::InvalidPrime(_) | Error::Parse(_) => 2,
        _ => 1,
    }
}

/// Document, diagnostics and exit code of one command.
struct Outcome {
    text: String,
    diagnostics: String,
    code: i32,
}

impl Outcome {
    fn error(e: &Error) -> Self {
        Self {
            text: String::new(),
            diagnostics: format!("error: {e}\n"),
            code: usage_or_failure(e),
        }
    }
}

fn verify(suite: Suite, common: &Common) -> Outcome {
    let params = SuiteParams {
        p: common.p,
        max_n: common.max_n,
        l: common.l,
        m: common.m,
        f: common.f,
        a: common.a,
        d: common.d,
        seed: common.seed,
        cap: common.cap,
    };
    match run_suite(suite, &params) {
        Ok(report) => {
            let text = match common.emit {
                Emit::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                Emit::Tsv => report.to_tsv(),
            };
            let diagnostics = report
                .failures()
                .iter()
                .map(|(id, c)| format!("violated: {id}: {} (expected {}, got {})\n", c.name, c.expected, c.actual))
                .collect();
            Outcome {
                text,
                diagnostics,
                code: i32::from(!report.pass),
            }
        }
        Err(e) => Outcome::error(&e),
    }
}

fn build(id: &str, params: &ConstructParams, emit: Emit) -> Outcome {
    match construct(id, params) {
        Ok(v) => Outcome {
            text: match emit {
                Emit::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                Emit::Tsv => to_tsv(&v),
            },
            diagnostics: String::new(),
            code: 0,
        },
        Err(e) => Outcome::error(&e),
    }
}

/// Runs the parsed command, writing the document to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let common = match &cli.command {
        Command::Verify { common, .. } | Command::Construct { common, .. } => common,
    };
    if common.jobs == Some(0) {
        let _ = writeln!(err, "error: --jobs must be at least 1");
        return 2;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let outcome = pool.install(|| match &cli.command {
        Command::Verify { suite, common } => verify(*suite, common),
        Command::Construct {
            id,
            common,
            n,
            family,
            partition,
            partition2,
        } => {
            let params = ConstructParams {
                p: common.p,
                n: *n,
                l: common.l,
                m: common.m,
                f: common.f,
                a: common.a,
                d: common.d,
                family: family.clone(),
                partition: partition.clone(),
                partition2: partition2.clone(),
                seed: common.seed,
                cap: common.cap,
            };
            build(id, &params, common.emit)
        }
    });
    let _ = out.write_all(outcome.text.as_bytes());
    let _ = err.write_all(outcome.diagnostics.as_bytes());
    outcome.code
}

/// Parses `args` (including the program name) and runs; clap errors map to
/// exit code 2 (help and version to 0).
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            code
        }
    }
}

mod cache;
mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use stringhom::verify::{Fault, Suite};

use crate::cache::Cache;
use crate::commands::{usage, Session, UsageError, VerifyArgs};
use crate::output::{render, Format, Kind};

/// String homology of chord diagrams on a marked disc.
#[derive(Debug, Parser)]
#[command(name = "stringhom", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Result cache directory; caching is off when unset.
    #[arg(long, global = true, env = "STRINGHOM_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Worker threads for elimination and scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Debug, Args)]
struct MarkingArgs {
    /// Number of chords on the alternating marking.
    #[arg(long)]
    n: Option<usize>,
    /// Explicit sign string such as `iioo`; point 0 is the basepoint.
    #[arg(long)]
    signs: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Homology of the hat or inf complex.
    #[command(subcommand)]
    Homology(HomologyCommand),
    /// List the sutures of a marking.
    Sutures(MarkingArgs),
    /// Sutures modulo bypass relations.
    Quotient(MarkingArgs),
    /// The matching built from the vacuum by a creation word.
    Basis {
        /// Word over `+` and `-`, applied right to left.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long)]
        suite: Option<Suite>,
        #[command(flatten)]
        marking: MarkingArgs,
        /// Largest loop count for the inf suites.
        #[arg(long)]
        trunc: Option<usize>,
        /// Largest |euler| for the inf suites.
        #[arg(long)]
        euler: Option<i64>,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Write boundary matrices and basis index files.
    Export {
        #[command(flatten)]
        marking: MarkingArgs,
        /// Also export the truncated inf matrix of this Euler class.
        #[arg(long, allow_hyphen_values = true)]
        euler: Option<i64>,
        #[arg(long, default_value_t = 4)]
        trunc: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum HomologyCommand {
    Hat(MarkingArgs),
    Inf {
        #[command(flatten)]
        marking: MarkingArgs,
        /// Restrict to one Euler class.
        #[arg(long, allow_hyphen_values = true)]
        euler: Option<i64>,
        /// Loop bound M.
        #[arg(long, default_value_t = 8)]
        trunc: usize,
    },
}

impl MarkingArgs {
    fn resolve(&self) -> Result<std::sync::Arc<stringhom::Marking>> {
        commands::marking(self.n, self.signs.as_deref())
    }
}

/// The rendered report and whether the command succeeded.
fn run(cli: Cli) -> Result<(String, bool)> {
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    let session = Session { cache: cli.global.cache_dir.map(Cache::new), verbose: cli.global.verbose };
    let format = cli.global.format;
    let (kind, value, ok) = match cli.command {
        Command::Homology(HomologyCommand::Hat(m)) => (Kind::Hat, commands::homology_hat(&session, &m.resolve()?)?, true),
        Command::Homology(HomologyCommand::Inf { marking, euler, trunc }) => {
            (Kind::Inf, commands::homology_inf(&session, &marking.resolve()?, euler, trunc)?, true)
        }
        Command::Sutures(m) => (Kind::Sutures, commands::sutures(&session, &m.resolve()?)?, true),
        Command::Quotient(m) => (Kind::Quotient, commands::quotient(&session, &m.resolve()?)?, true),
        Command::Basis { word } => (Kind::Basis, commands::basis(&word)?, true),
        Command::Verify { suite, marking, trunc, euler, inject_fault } => {
            let (max_n, marking) = match (marking.n, &marking.signs) {
                (n, None) => (n, None),
                (None, Some(_)) => (None, Some(marking.resolve()?)),
                (Some(_), Some(_)) => return Err(usage("give either --n or --signs, not both")),
            };
            let (reports, ok) = commands::verify(VerifyArgs { suite, max_n, marking, max_loops: trunc, max_euler: euler, fault: inject_fault });
            for r in &reports {
                for c in r.checks.iter().filter(|c| !c.passed) {
                    eprintln!("FAIL {}/{}: {}", r.suite, c.name, c.counterexample.as_deref().unwrap_or(""));
                }
            }
            (Kind::Verify, json!({ "passed": ok, "reports": reports }), ok)
        }
        Command::Export { marking, euler, trunc, out_dir } => (Kind::Export, commands::export(&marking.resolve()?, euler, trunc, &out_dir)?, true),
    };
    Ok((render(kind, format, &value)?, ok))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let is_usage = e.downcast_ref::<UsageError>().is_some() || e.downcast_ref::<stringhom::Error>().is_some();
            ExitCode::from(if is_usage { 2 } else { 1 })
        }
    }
}

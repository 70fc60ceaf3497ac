mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{AnalyzeOp, TransformOp};

/// Verify, transform and analyze finite linear Hopf categories stored as
/// structure-constant files.
///
/// Exit codes: 0 pass, 1 axiom failure, 2 unreadable input or usage error,
/// 3 internal invariant breach.
#[derive(Parser, Debug)]
#[command(name = "hopfcat", version)]
pub struct Cli {
    /// Field for groupoid inputs (`q` or `fp:<p>`); for other kinds it must match the file header.
    #[arg(long, global = true)]
    pub field: Option<String>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the report as JSON lines here, with `.txt` and `.manifest.json` siblings.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,

    /// Suppress the report table on stdout.
    #[arg(short, long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every axiom of the structure stored in a file.
    Verify {
        path: PathBuf,
        /// Level for hopf-category inputs; defaults to hopf when an antipode is present.
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        /// Also report the surjectivity of composition.
        #[arg(long)]
        strictness: bool,
        /// Also check anti-(co)multiplicativity and the involutivity conditions.
        #[arg(long)]
        antipode_theorems: bool,
        /// Also compare the conditions equivalent to having an antipode.
        #[arg(long)]
        fundamental: bool,
    },
    /// Apply a construction and write the verified result.
    Transform {
        path: PathBuf,
        #[arg(value_enum)]
        op: TransformOp,
        out: PathBuf,
    },
    /// Run an analysis and write its artifact.
    Analyze {
        path: PathBuf,
        #[arg(value_enum)]
        op: AnalyzeOp,
        /// Artifact destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LevelArg {
    Category,
    Semihopf,
    Hopf,
}

impl From<LevelArg> for hopfcat::Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Category => hopfcat::Level::Category,
            LevelArg::Semihopf => hopfcat::Level::Semihopf,
            LevelArg::Hopf => hopfcat::Level::Hopf,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    match commands::dispatch(&cli) {
        Ok(outcome) => {
            if !cli.quiet {
                print!("{}", outcome.report.to_text());
            }
            if let Some(path) = &cli.report {
                if let Err(e) = output::write_report(path, &argv, &outcome, cli.seed) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! `coxeter`: command-line front end for parabolic subgroup computations.
//!
//! Every command prints line-oriented text by default, or a single JSON
//! envelope with `--json` (see `docs/json-output.md`). `verify` always
//! emits JSON lines, one report per line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coxeter_core::{Error, Limits};

#[derive(Parser)]
#[command(name = "coxeter", version, about = "Commensurators, normalizers and quasi-centralizers of parabolic subgroups of Coxeter groups")]
struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(flatten)]
    budgets: Budgets,

    #[command(subcommand)]
    command: Command,
}

/// Resource budgets. Each can also be set through its environment variable;
/// an explicit flag takes precedence.
#[derive(Args, Clone, Copy)]
struct Budgets {
    /// Maximum number of elements a ball or subgroup enumeration may produce.
    #[arg(long, global = true, env = "COXETER_BALL_CAP")]
    ball_cap: Option<usize>,
    /// Maximum number of states visited by witness searches.
    #[arg(long, global = true, env = "COXETER_SEARCH_CAP")]
    search_cap: Option<usize>,
    /// Maximum group order accepted by whole-group checks.
    #[arg(long, global = true, env = "COXETER_ORDER_CAP")]
    order_cap: Option<usize>,
}

impl Budgets {
    fn apply(self, mut limits: Limits) -> Limits {
        if let Some(v) = self.ball_cap {
            limits.ball_cap = v;
        }
        if let Some(v) = self.search_cap {
            limits.search_cap = v;
        }
        if let Some(v) = self.order_cap {
            limits.group_order_cap = v;
        }
        limits
    }
}

#[derive(Subcommand)]
enum Command {
    /// Components, X0, Xinf, Yinf, commensurator and related subgroups of W_X.
    Analyze {
        graph: PathBuf,
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// Irreducible components of a subset with their types and orders.
    Classify {
        graph: PathBuf,
        /// Defaults to every generator.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Reduced normal form of a word.
    Reduce { graph: PathBuf, word: String },
    /// Product of several words.
    Prod {
        graph: PathBuf,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Inverse of a word.
    Inv { graph: PathBuf, word: String },
    /// Longest element of a finite parabolic subgroup.
    Longest {
        graph: PathBuf,
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// Decomposition w = u v u' with v minimal in W_left w W_right.
    Coset {
        graph: PathBuf,
        word: String,
        #[arg(long, default_value = "")]
        left: String,
        #[arg(long, default_value = "")]
        right: String,
    },
    /// W_left ∩ w W_right w^-1 as a conjugate of a standard parabolic subgroup.
    Intersect {
        graph: PathBuf,
        word: String,
        #[arg(long, default_value = "")]
        left: String,
        #[arg(long, default_value = "")]
        right: String,
    },
    /// Membership of a word in the commensurator, normalizer and
    /// quasi-centralizer of W_X.
    Member {
        graph: PathBuf,
        word: String,
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// Chain of elementary conjugations from one subset to another, or a
    /// factorization of a given element.
    Witness {
        graph: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        to: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Sphere sizes of the ball of given radius, optionally inside W_X.
    Ball {
        graph: PathBuf,
        #[arg(long, env = "COXETER_RADIUS", default_value_t = 3)]
        radius: usize,
        #[arg(long)]
        subset: Option<String>,
        /// Also list every element.
        #[arg(long)]
        elements: bool,
    },
    /// Number of cosets of W_target met by growing balls of W_X.
    Growth {
        graph: PathBuf,
        #[arg(long)]
        subset: String,
        #[arg(long, default_value = "")]
        target: String,
        #[arg(long, env = "COXETER_RADIUS", default_value_t = 8)]
        radius: usize,
    },
    /// Run a verification config and print one JSON report per line.
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
}

/// Failure modes mapped to the process exit status.
pub enum Failure {
    /// A verification check reported counterexamples.
    Check,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Config { .. } | Error::Io(_) => 2,
        Error::BudgetExceeded { .. } => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = cli.budgets.apply(Limits::default());
    match commands::run(cli.command, cli.json, limits, cli.budgets) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

//! Command-line interface for the knot concordance toolkit.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Deserialize;
use std::io::Write;
use std::process::ExitCode;

use ckit::engine::{
    analyze, compare, covers_report, galois_report, resolve_name, AnalyzeOptions,
};
use ckit::error::CkError;
use ckit::linalg::MatQ;
use ckit::seifert::ingest;
use ckit::witt::{boundary_p, diagonalize, finite_trivial, SymForm};

#[derive(Parser)]
#[command(name = "ckit", about = "Exact knot concordance invariants from Seifert matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Genus bounds and obstruction ledger for one knot
    Analyze {
        /// Knot file (JSON array of records)
        #[arg(long)]
        knots: std::path::PathBuf,
        /// Knot name; supports A#B for connected sums and -A for mirrors
        #[arg(long, allow_hyphen_values = true)]
        name: String,
        /// Also run the order-two character / Galois chain
        #[arg(long)]
        galois: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Algebraic concordance of a pair
    Compare {
        #[arg(long)]
        knots: std::path::PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Diagonalize a symmetric matrix and reduce it into W(Z/pZ)
    Witt {
        /// JSON file {"matrix": [[...], ...]}
        #[arg(long)]
        matrix: std::path::PathBuf,
        /// The odd prime p for the boundary map
        #[arg(long)]
        dp: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Branched cyclic cover homology
    Covers {
        #[arg(long)]
        knots: std::path::PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        name: String,
        /// Cover degree (prime)
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Norm polynomial and quartic Galois classification for a knot
    Galois {
        #[arg(long)]
        knots: std::path::PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        name: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Deserialize)]
struct MatrixFile {
    matrix: Vec<Vec<i64>>,
}

fn emit(output: &OutputArgs, text: String) -> Result<(), CkError> {
    match &output.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| CkError::Parse(format!("cannot write {}: {e}", path.display())))?;
            f.write_all(text.as_bytes())
                .map_err(|e| CkError::Parse(format!("write failed: {e}")))?;
            Ok(())
        }
    }
}

fn load_records(path: &std::path::Path) -> Result<Vec<ckit::seifert::KnotRecord>, CkError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CkError::Parse(format!("cannot read {}: {e}", path.display())))?;
    ingest(&text)
}

fn run() -> Result<(), CkError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            knots,
            name,
            galois,
            output,
        } => {
            let records = load_records(&knots)?;
            let k = resolve_name(&records, &name)?;
            let report = analyze(&k, AnalyzeOptions { galois })?;
            emit(
                &output,
                if output.json {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                },
            )
        }
        Command::Compare { knots, a, b, output } => {
            let records = load_records(&knots)?;
            let ka = resolve_name(&records, &a)?;
            let kb = resolve_name(&records, &b)?;
            let report = compare(&ka, &kb);
            emit(
                &output,
                if output.json {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                },
            )
        }
        Command::Witt { matrix, dp, output } => {
            let text = std::fs::read_to_string(&matrix)
                .map_err(|e| CkError::Parse(format!("cannot read {}: {e}", matrix.display())))?;
            let mf: MatrixFile =
                serde_json::from_str(&text).map_err(|e| CkError::Parse(e.to_string()))?;
            let form = SymForm::new(MatQ::from_i64(&mf.matrix))?;
            let diag = diagonalize(&form)?;
            let class = boundary_p(&diag, &BigInt::from(dp));
            let trivial = finite_trivial(&class);
            let entries: Vec<String> = class.entries.iter().map(|e| e.to_string()).collect();
            let text = if output.json {
                serde_json::to_string_pretty(&serde_json::json!({
                    "diagonal": diag.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    "p": dp,
                    "class": entries,
                    "trivial": trivial,
                }))
                .unwrap()
                    + "\n"
            } else {
                format!(
                    "{}: class ({}) in W(Z/{}Z)\n  diagonalized form: ({})\n",
                    if trivial { "trivial" } else { "nontrivial" },
                    entries.join(","),
                    dp,
                    diag.entries
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                )
            };
            emit(&output, text)
        }
        Command::Covers {
            knots,
            name,
            p,
            output,
        } => {
            let records = load_records(&knots)?;
            let k = resolve_name(&records, &name)?;
            let report = covers_report(&k, p)?;
            let text = if output.json {
                serde_json::to_string_pretty(&report).unwrap() + "\n"
            } else {
                format!(
                    "H_1 of the {}-fold branched cover of {}: order {}, invariant factors ({}){}\n",
                    report.p,
                    report.name,
                    report.order,
                    report.invariant_factors.join(","),
                    if report.plans_doubled {
                        ", doubled"
                    } else {
                        ""
                    }
                )
            };
            emit(&output, text)
        }
        Command::Galois { knots, name, output } => {
            let records = load_records(&knots)?;
            let k = resolve_name(&records, &name)?;
            let report = galois_report(&k)?;
            let text = if output.json {
                serde_json::to_string_pretty(&report).unwrap() + "\n"
            } else {
                match (&report.quartic_factor, &report.galois_class) {
                    (Some(q), Some(class)) => format!(
                        "{}: quartic factor ({}), cube-norm ({}), Galois {}, obstruction: {}\n  {}\n",
                        report.name,
                        q.join(","),
                        report.norm_cubed.as_ref().unwrap().join(","),
                        class,
                        report.obstructed.unwrap(),
                        report.note
                    ),
                    _ => format!("{}: {}\n", report.name, report.note),
                }
            };
            emit(&output, text)
        }
    }
}

fn main() -> ExitCode {
    match std::panic::catch_unwind(run) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            match e {
                CkError::Internal(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
        Err(_) => {
            eprintln!("error: internal assertion failure");
            ExitCode::from(2)
        }
    }
}

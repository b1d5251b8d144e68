//! `skewchar` command-line interface.
//!
//! Subcommands wrap the library operations one to one and print either a
//! stable human-readable text or, with `--json`, a structured record
//! `{"command": .., "inputs": .., "terms"/"coeff"/"verdict"/"report": ..}`.
//! Partitions are arrays of integers; decomposition terms are sorted in
//! descending lexicographic order of the constituent, so identical inputs
//! produce byte-identical output across runs and worker counts.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a violation, 2 on
//! parse or usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use skewchar::{
    classify_mf, duality_check, lr_coefficient, predict_equal_mf_checked, skew_character,
    star_product, trivially_equal, verify_main_theorem, BoxSpec, Bounds, CanonicalForm,
    Decomposition, Error, Partition, SkewDiagram, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "skewchar",
    about = "Littlewood-Richardson coefficients, skew characters and multiplicity-free equality checking",
    version
)]
struct Cli {
    /// Print a structured JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a skew character into irreducibles.
    Decompose {
        /// Skew diagram as "outer/inner", e.g. "3,2,1/2,1"; inner may be omitted.
        skew: String,
    },
    /// A single Littlewood-Richardson coefficient c(lambda; mu, nu).
    Coef {
        lambda: String,
        mu: String,
        nu: String,
    },
    /// Decide multiplicity-freeness structurally.
    Classify { skew: String },
    /// Compare two skew diagrams: trivial equality, staircase conjugacy,
    /// character equality and the multiplicity-free prediction.
    Equal { a: String, b: String },
    /// Restricted (star) products and the complement duality in a box.
    Schubert {
        #[command(subcommand)]
        which: SchubertCommand,
    },
    /// Exhaustively check equality of multiplicity-free skew characters.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum SchubertCommand {
    /// Star product [mu] * [nu] restricted to the box.
    Star {
        mu: String,
        nu: String,
        /// Box as KxL (K columns, L rows).
        #[arg(long = "box")]
        box_spec: String,
    },
    /// Check the skew-character/Schubert-product coefficient duality.
    Dual {
        mu: String,
        lambda: String,
        /// Box as KxL (K columns, L rows).
        #[arg(long = "box")]
        box_spec: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    max_cells: usize,
    #[arg(long, default_value_t = 8)]
    max_part: usize,
    #[arg(long, default_value_t = 8)]
    max_rows: usize,
    /// Worker threads for the exhaustive sweep (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&v| json!(v)).collect())
}

fn skew_json(d: &SkewDiagram) -> Value {
    json!({ "outer": partition_json(d.outer()), "inner": partition_json(d.inner()) })
}

fn terms_json(dec: &Decomposition) -> Value {
    Value::Array(
        dec.terms()
            .map(|(nu, c)| json!({ "nu": partition_json(nu), "coeff": c }))
            .collect(),
    )
}

fn form_json(form: &CanonicalForm) -> Value {
    Value::Array(form.components().iter().map(skew_json).collect())
}

fn report_json(report: &VerificationReport) -> Value {
    json!({
        "bounds": {
            "max_cells": report.bounds.max_cells,
            "max_part": report.bounds.max_part,
            "max_rows": report.bounds.max_rows,
        },
        "diagrams_examined": report.diagrams_examined,
        "mf_count": report.mf_count,
        "equality_classes": Value::Array(
            report
                .equality_classes
                .iter()
                .map(|class| {
                    json!({
                        "terms": terms_json(&class.decomposition),
                        "forms": Value::Array(class.forms.iter().map(form_json).collect()),
                    })
                })
                .collect(),
        ),
        "violations": Value::Array(
            report
                .violations
                .iter()
                .map(|(a, b)| json!([form_json(a), form_json(b)]))
                .collect(),
        ),
        "staircase_confirmations": report.staircase_confirmations,
    })
}

fn emit(record: Value, json: bool, text: String) {
    if json {
        println!("{}", serde_json::to_string(&record).expect("serializable"));
    } else {
        println!("{text}");
    }
}

fn parse_box(text: &str) -> Result<BoxSpec, Error> {
    let (k, l) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::MalformedSkew(format!("expected box as KxL, got {text:?}")))?;
    let cols = k
        .trim()
        .parse()
        .map_err(|_| Error::MalformedSkew(format!("bad box columns {k:?}")))?;
    let rows = l
        .trim()
        .parse()
        .map_err(|_| Error::MalformedSkew(format!("bad box rows {l:?}")))?;
    Ok(BoxSpec::new(cols, rows))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Decompose { skew } => {
            let d: SkewDiagram = skew.parse()?;
            let dec = skew_character(&d);
            let record = json!({
                "command": "decompose",
                "inputs": { "skew": skew_json(&d) },
                "terms": terms_json(&dec),
            });
            emit(record, cli.json, dec.to_string());
            Ok(0)
        }
        Command::Coef { lambda, mu, nu } => {
            let lambda: Partition = lambda.parse()?;
            let mu: Partition = mu.parse()?;
            let nu: Partition = nu.parse()?;
            let c = lr_coefficient(&lambda, &mu, &nu);
            let record = json!({
                "command": "coef",
                "inputs": {
                    "lambda": partition_json(&lambda),
                    "mu": partition_json(&mu),
                    "nu": partition_json(&nu),
                },
                "coeff": c,
            });
            emit(record, cli.json, c.to_string());
            Ok(0)
        }
        Command::Classify { skew } => {
            let d: SkewDiagram = skew.parse()?;
            let verdict = classify_mf(&d);
            let record = json!({
                "command": "classify",
                "inputs": { "skew": skew_json(&d) },
                "verdict": {
                    "multiplicity_free": verdict.multiplicity_free,
                    "reason": verdict.reason.to_string(),
                },
            });
            emit(
                record,
                cli.json,
                format!(
                    "multiplicity-free: {} ({})",
                    verdict.multiplicity_free, verdict.reason
                ),
            );
            Ok(0)
        }
        Command::Equal { a, b } => {
            let a: SkewDiagram = a.parse()?;
            let b: SkewDiagram = b.parse()?;
            let trivial = trivially_equal(&a, &b);
            let staircase = skewchar::staircase_conjugate_equal(&a, &b);
            let chars = skewchar::characters_equal(&a, &b);
            let predict = match predict_equal_mf_checked(&a, &b) {
                Ok(v) => Some(v),
                Err(Error::NotMultiplicityFree) => {
                    eprintln!("note: prediction skipped, a character is not multiplicity free");
                    None
                }
                Err(e) => return Err(e),
            };
            let record = json!({
                "command": "equal",
                "inputs": { "a": skew_json(&a), "b": skew_json(&b) },
                "verdict": {
                    "trivially_equal": trivial,
                    "staircase_conjugate_equal": staircase,
                    "characters_equal": chars,
                    "predict_equal_mf": predict,
                },
            });
            let predict_text = match predict {
                Some(v) => v.to_string(),
                None => "n/a (not multiplicity free)".to_string(),
            };
            emit(
                record,
                cli.json,
                format!(
                    "trivially_equal: {trivial}\nstaircase_conjugate_equal: {staircase}\ncharacters_equal: {chars}\npredict_equal_mf: {predict_text}"
                ),
            );
            Ok(0)
        }
        Command::Schubert { which } => match which {
            SchubertCommand::Star { mu, nu, box_spec } => {
                let mu: Partition = mu.parse()?;
                let nu: Partition = nu.parse()?;
                let bx = parse_box(&box_spec)?;
                let dec = star_product(&mu, &nu, &bx);
                let record = json!({
                    "command": "schubert-star",
                    "inputs": {
                        "mu": partition_json(&mu),
                        "nu": partition_json(&nu),
                        "box": { "cols": bx.cols, "rows": bx.rows },
                    },
                    "terms": terms_json(&dec),
                });
                emit(record, cli.json, dec.to_string());
                Ok(0)
            }
            SchubertCommand::Dual {
                mu,
                lambda,
                box_spec,
            } => {
                let mu: Partition = mu.parse()?;
                let lambda: Partition = lambda.parse()?;
                let bx = parse_box(&box_spec)?;
                let holds = duality_check(&mu, &lambda, &bx)?;
                let record = json!({
                    "command": "schubert-dual",
                    "inputs": {
                        "mu": partition_json(&mu),
                        "lambda": partition_json(&lambda),
                        "box": { "cols": bx.cols, "rows": bx.rows },
                    },
                    "verdict": { "duality": holds },
                });
                emit(record, cli.json, format!("duality holds: {holds}"));
                Ok(0)
            }
        },
        Command::Verify(args) => {
            let bounds = Bounds {
                max_cells: args.max_cells,
                max_part: args.max_part,
                max_rows: args.max_rows,
            };
            let report = match args.jobs {
                Some(jobs) => rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .expect("thread pool")
                    .install(|| verify_main_theorem(&bounds)),
                None => verify_main_theorem(&bounds),
            };
            let record = json!({
                "command": "verify",
                "inputs": {
                    "max_cells": bounds.max_cells,
                    "max_part": bounds.max_part,
                    "max_rows": bounds.max_rows,
                },
                "report": report_json(&report),
            });
            emit(record, cli.json, report.to_string());
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

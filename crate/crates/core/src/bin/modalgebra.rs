use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use modalgebra::bao::{eval_in_bao, Assignment, Bao};
use modalgebra::catalog::Axiom;
use modalgebra::construction::RefutationCertificate;
use modalgebra::formula::{parse, Formula};
use modalgebra::harness::{self, SweepConfig, SCHEMA};
use modalgebra::kripke::{frame_validates, FiniteFrame, FrameVerdict};
use modalgebra::upset::{recession_algebra, Flavor};

#[derive(Parser)]
#[command(
    name = "modalgebra",
    version,
    about = "Modal formulas, frames and algebras"
)]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; the exit status still tells the verdict.
    #[arg(long, global = true)]
    quiet: bool,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its syntax tree and normal form.
    Parse { formula: String },
    /// Decide validity of a formula (or axiom name) on a finite frame.
    Check {
        /// `k;edges`, e.g. `3;0-1,1-2` or `2;refl`.
        #[arg(long)]
        frame: String,
        formula: String,
    },
    /// Classify every frame up to `kmax` worlds by the axioms it validates.
    Sweep {
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Sweep all 65,536 frames on four worlds instead of sampling.
        #[arg(long)]
        exhaustive_k4: bool,
        /// Random frames drawn on four worlds when not exhaustive.
        #[arg(long, default_value_t = harness::DEFAULT_K4_SAMPLES)]
        k4_samples: usize,
    },
    /// Check every axiom on all reflexive transitive frames up to `kmax` worlds.
    S4 {
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// Run the construction on the full recession algebra.
    Recession {
        #[arg(long, default_value_t = 64)]
        depth: usize,
        #[arg(long, default_value_t = harness::RECESSION_SAMPLES)]
        samples: usize,
        /// Write the refutation certificate here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Run the veiled recession algebra suite.
    Veiled {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Check the supremum facts on random finite algebras.
    Facts {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Recompute a refutation certificate from scratch.
    Certify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Evaluate a formula in a recession algebra, e.g. `--assign p='ω∖{0}'`.
    Eval {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Full)]
        algebra: AlgebraArg,
        #[arg(long = "assign", value_name = "NAME=SET")]
        assignments: Vec<String>,
        formula: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Full,
    Veiled,
}

struct Output {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

impl Output {
    fn report<R: Serialize + std::fmt::Display>(report: &R, passed: bool) -> Output {
        Output {
            text: report.to_string(),
            json: serde_json::to_value(report).expect("reports serialize"),
            passed,
        }
    }
}

fn formula_arg(text: &str) -> Result<Formula, String> {
    if let Some(axiom) = Axiom::ALL.into_iter().find(|a| a.name() == text) {
        return Ok(axiom.formula());
    }
    parse(text).map_err(|e| format!("cannot parse {text:?}: {e}"))
}

fn run(cli: &Cli) -> Result<Output, String> {
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::Parse { formula } => {
            let f = formula_arg(formula)?;
            Output {
                text: format!("{f:?}\n{f}"),
                json: json!({ "schema": SCHEMA, "ast": format!("{f:?}"), "printed": f.to_string() }),
                passed: true,
            }
        }
        Command::Check { frame, formula } => {
            let frame: FiniteFrame = frame.parse().map_err(|e| format!("bad frame: {e}"))?;
            let f = formula_arg(formula)?;
            let verdict = frame_validates(&frame, &f).map_err(|e| e.to_string())?;
            let text = match &verdict {
                FrameVerdict::Valid => format!("valid on {frame}"),
                FrameVerdict::Counterexample { valuation, world } => {
                    format!("not valid on {frame}: false at world {world} under {valuation}")
                }
            };
            Output {
                text,
                json: json!({ "schema": SCHEMA, "frame": frame.to_string(), "formula": f.to_string(), "result": verdict }),
                passed: verdict.is_valid(),
            }
        }
        Command::Sweep {
            kmax,
            exhaustive_k4,
            k4_samples,
        } => {
            if *exhaustive_k4 && *kmax >= 4 && !cli.quiet {
                eprintln!("warning: the exhaustive four-world sweep takes a long time");
            }
            let config = SweepConfig {
                exhaustive_k4: *exhaustive_k4,
                k4_samples: *k4_samples,
                seed,
                ..SweepConfig::default()
            };
            let report = harness::corollary_sweep(*kmax, &config).map_err(|e| e.to_string())?;
            Output::report(&report, report.passed())
        }
        Command::S4 { kmax } => {
            let report = harness::s4_sanity(*kmax).map_err(|e| e.to_string())?;
            Output::report(&report, report.passed())
        }
        Command::Recession {
            depth,
            samples,
            certificate,
        } => {
            let report = harness::recession_suite_with(*depth, seed, *samples);
            if let (Some(path), Some(cert)) = (certificate, &report.certificate) {
                fs::write(path, cert.to_json())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Output::report(&report, report.passed)
        }
        Command::Veiled { samples } => {
            let report = harness::veiled_suite(*samples, seed);
            Output::report(&report, report.passed)
        }
        Command::Facts { trials } => {
            let report = harness::facts_suite(*trials, seed);
            Output::report(&report, report.passed)
        }
        Command::Certify { input } => {
            let text = fs::read_to_string(input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let cert = RefutationCertificate::from_json(&text)
                .map_err(|e| format!("bad certificate: {e}"))?;
            let report = harness::certify(&cert).map_err(|e| e.to_string())?;
            Output::report(&report, report.passed)
        }
        Command::Eval {
            algebra,
            assignments,
            formula,
        } => {
            let ctx = recession_algebra(match algebra {
                AlgebraArg::Full => Flavor::Full,
                AlgebraArg::Veiled => Flavor::Veiled,
            });
            let f = formula_arg(formula)?;
            let mut values = Assignment::new();
            for item in assignments {
                let (name, set) = item
                    .split_once('=')
                    .ok_or_else(|| format!("expected NAME=SET, got {item:?}"))?;
                values.insert(
                    name.trim().to_string(),
                    ctx.parse_element(set.trim()).map_err(|e| e.to_string())?,
                );
            }
            let value = eval_in_bao(&ctx, &values, &f).map_err(|e| e.to_string())?;
            Output {
                text: format!("{value}"),
                json: json!({ "schema": SCHEMA, "context": ctx.id(), "formula": f.to_string(), "value": value.to_string(), "bits": value.to_bits() }),
                passed: true,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(output) => output,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let rendered = if cli.json {
        serde_json::to_string_pretty(&output.json).expect("json renders")
    } else {
        output.text
    };
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if !cli.quiet {
        println!("{rendered}");
    }
    if output.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

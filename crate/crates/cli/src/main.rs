use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rough_mcdm::report::{format_table, ranking_table};
use rough_mcdm::{
    case_study_partition, case_study_substitution, derive_weights, load_json, load_project, render_report, run, ConsistencyGate, MethodKind, Outcome, Partition,
    ProjectFile, ReportFormat, RunOptions, Substitution, ValidityTest, DEFAULT_VIKOR_V,
};

const EXIT_VALIDATION: u8 = 1;
const EXIT_NUMERIC: u8 = 2;
const EXIT_VALIDITY: u8 = 3;

/// Rough AHP weighting and rough MABAC ranking for group decisions.
#[derive(Debug, Parser)]
#[command(name = "rough-mcdm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load a project file and check shapes, labels and consistency.
    Validate {
        project: PathBuf,
        #[command(flatten)]
        gate: GateArgs,
    },
    /// Print consistency ratios and rough criteria weights.
    Weights {
        project: PathBuf,
        #[command(flatten)]
        gate: GateArgs,
    },
    /// Rank the alternatives.
    Rank {
        project: PathBuf,
        #[arg(long, value_enum, default_value = "mabac")]
        method: MethodArg,
        #[command(flatten)]
        gate: GateArgs,
        /// Weight of the group-utility term in VIKOR.
        #[arg(long, default_value_t = DEFAULT_VIKOR_V)]
        vikor_v: f64,
    },
    /// Run one ranking-validity test.
    Test {
        project: PathBuf,
        /// 1 = rank stability under substitution, 2 = transitivity, 3 = composition.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        criterion: u8,
        /// JSON substitution file (criterion 1). Defaults to the bundled case-study swap.
        #[arg(long)]
        substitution: Option<PathBuf>,
        /// JSON partition file (criteria 2 and 3). Defaults to the bundled case-study subsets.
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "mabac")]
        method: SingleMethod,
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long, default_value_t = DEFAULT_VIKOR_V)]
        vikor_v: f64,
    },
    /// Full report of every pipeline stage.
    Report {
        project: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "mabac")]
        method: MethodArg,
        /// Include validity test 1 with this substitution file.
        #[arg(long)]
        substitution: Option<PathBuf>,
        /// Include validity tests 2 and 3 with this partition file.
        #[arg(long)]
        partition: Option<PathBuf>,
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long, default_value_t = DEFAULT_VIKOR_V)]
        vikor_v: f64,
    },
}

#[derive(Debug, Args)]
struct GateArgs {
    /// Reject projects with an expert CR >= 0.1 (default).
    #[arg(long, conflicts_with = "lenient_cr")]
    strict_cr: bool,
    /// Only warn about expert CR >= 0.1.
    #[arg(long)]
    lenient_cr: bool,
}

impl GateArgs {
    fn gate(&self) -> ConsistencyGate {
        if self.lenient_cr {
            ConsistencyGate::Lenient
        } else {
            ConsistencyGate::Strict
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Mabac,
    Topsis,
    Vikor,
    All,
}

impl MethodArg {
    fn kinds(self) -> Vec<MethodKind> {
        match self {
            MethodArg::Mabac => vec![MethodKind::Mabac],
            MethodArg::Topsis => vec![MethodKind::Topsis],
            MethodArg::Vikor => vec![MethodKind::Vikor],
            MethodArg::All => MethodKind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SingleMethod {
    Mabac,
    Topsis,
    Vikor,
}

impl From<SingleMethod> for MethodKind {
    fn from(m: SingleMethod) -> Self {
        match m {
            SingleMethod::Mabac => MethodKind::Mabac,
            SingleMethod::Topsis => MethodKind::Topsis,
            SingleMethod::Vikor => MethodKind::Vikor,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_VALIDATION)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            let numeric = e
                .chain()
                .filter_map(|c| c.downcast_ref::<rough_mcdm::Error>())
                .any(rough_mcdm::Error::is_numeric);
            ExitCode::from(if numeric { EXIT_NUMERIC } else { EXIT_VALIDATION })
        }
    }
}

// Library errors already embed their causes, so only append new text.
fn describe(e: &anyhow::Error) -> String {
    let mut msg = String::new();
    for cause in e.chain() {
        let text = cause.to_string();
        if !msg.contains(&text) {
            if !msg.is_empty() {
                msg.push_str(": ");
            }
            msg.push_str(&text);
        }
    }
    msg
}

fn load(path: &Path) -> Result<ProjectFile> {
    Ok(load_project(path)?)
}

fn check_v(v: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&v) {
        bail!("--vikor-v must be within [0, 1], got {v}");
    }
    Ok(v)
}

fn execute(command: Command) -> Result<u8> {
    match command {
        Command::Validate { project, gate } => {
            let p = load(&project)?;
            let w = derive_weights(&p, gate.gate())?;
            println!(
                "{}: valid ({} alternatives, {} criteria, {} experts)",
                project.display(),
                p.alternatives.len(),
                p.criteria.len(),
                p.experts
            );
            print_consistency(&w.consistency);
            print_warnings(&w.warnings);
            Ok(0)
        }
        Command::Weights { project, gate } => {
            let p = load(&project)?;
            let w = derive_weights(&p, gate.gate())?;
            print_consistency(&w.consistency);
            println!();
            let rows: Vec<Vec<String>> = w
                .criteria
                .iter()
                .zip(&w.weights.raw)
                .map(|(c, raw)| vec![c.id.clone(), format!("{raw:.3}"), format!("{:.3}", c.weight)])
                .collect();
            print!(
                "{}",
                format_table(&["".into(), "rough weight".into(), "normalized".into()], &rows)
            );
            print_warnings(&w.warnings);
            Ok(0)
        }
        Command::Rank {
            project,
            method,
            gate,
            vikor_v,
        } => {
            let p = load(&project)?;
            let kinds = method.kinds();
            let options = RunOptions {
                gate: gate.gate(),
                methods: kinds.clone(),
                vikor_v: check_v(vikor_v)?,
                ..Default::default()
            };
            let r = run(&p, &options)?;
            for (i, kind) in kinds.iter().enumerate() {
                let ranking = r.ranking_for(*kind).context("ranking was not computed")?;
                if i > 0 {
                    println!();
                }
                let label = match kind {
                    MethodKind::Mabac => "S",
                    MethodKind::Topsis => "closeness",
                    MethodKind::Vikor => "Q",
                };
                println!("{kind}: {}", ranking.order().join(" > "));
                print!("{}", ranking_table(ranking, label));
            }
            print_warnings(&r.warnings);
            Ok(0)
        }
        Command::Test {
            project,
            criterion,
            substitution,
            partition,
            method,
            gate,
            vikor_v,
        } => {
            let p = load(&project)?;
            let test = match criterion {
                1 => {
                    let sub = match substitution {
                        Some(path) => load_json::<Substitution>(&path)?,
                        None => case_study_substitution(),
                    };
                    ValidityTest::RankStability(sub)
                }
                c => {
                    let part = match partition {
                        Some(path) => load_json::<Partition>(&path)?,
                        None => case_study_partition(),
                    };
                    if c == 2 {
                        ValidityTest::Transitivity(part)
                    } else {
                        ValidityTest::Composition(part)
                    }
                }
            };
            let options = RunOptions {
                gate: gate.gate(),
                vikor_v: check_v(vikor_v)?,
                validity_tests: vec![test],
                validity_method: method.into(),
                ..Default::default()
            };
            let r = run(&p, &options)?;
            let v = &r.validity[0];
            let outcome = match v.outcome {
                Outcome::Passed => "passed",
                Outcome::Failed => "failed",
                Outcome::Inconclusive => "inconclusive",
            };
            println!("criterion {} ({}): {outcome}", v.criterion, v.method);
            println!("  original: {}", v.evidence.original.join(" > "));
            for o in &v.evidence.rankings {
                println!("  {}: {}", o.label, o.order.join(" > "));
            }
            println!("  {}", v.evidence.comparison);
            for c in &v.evidence.conflicts {
                println!("  conflict: {c}");
            }
            for (a, b) in &v.evidence.unresolved {
                println!("  unresolved by subproblems: {a} / {b}");
            }
            print_warnings(&v.warnings);
            Ok(if v.outcome == Outcome::Passed { 0 } else { EXIT_VALIDITY })
        }
        Command::Report {
            project,
            format,
            out,
            method,
            substitution,
            partition,
            gate,
            vikor_v,
        } => {
            let p = load(&project)?;
            let mut tests = Vec::new();
            if let Some(path) = substitution {
                tests.push(ValidityTest::RankStability(load_json(&path)?));
            }
            if let Some(path) = partition {
                let part: Partition = load_json(&path)?;
                tests.push(ValidityTest::Transitivity(part.clone()));
                tests.push(ValidityTest::Composition(part));
            }
            let options = RunOptions {
                gate: gate.gate(),
                methods: method.kinds(),
                vikor_v: check_v(vikor_v)?,
                validity_tests: tests,
                ..Default::default()
            };
            let r = run(&p, &options)?;
            let format = match format {
                FormatArg::Text => ReportFormat::Text,
                FormatArg::Structured => ReportFormat::Structured,
            };
            let doc = render_report(&r, format);
            match out {
                Some(path) => fs::write(&path, doc).with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{doc}"),
            }
            Ok(if r.validity_failed() { EXIT_VALIDITY } else { 0 })
        }
    }
}

fn print_consistency(reports: &[rough_mcdm::report::ExpertConsistency]) {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|c| {
            vec![
                format!("expert {}", c.expert),
                format!("{:.3}", c.report.lambda_max),
                format!("{:.4}", c.report.cr),
                if c.report.acceptable { "yes" } else { "no" }.into(),
            ]
        })
        .collect();
    print!(
        "{}",
        format_table(&["".into(), "lambda_max".into(), "CR".into(), "CR < 0.1".into()], &rows)
    );
}

fn print_warnings(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

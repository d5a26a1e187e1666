//! End-to-end runs over a project file and their text / JSON rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ahp::{
    aggregate_group, consistency_report, rough_weights, ConsistencyGate, ConsistencyReport, RoughGroupMatrix,
    RoughWeightVector,
};
use crate::baselines::{rough_topsis, rough_vikor, BaselineDetails, BaselineResult, DEFAULT_VIKOR_V};
use crate::error::{Error, Result, StageExt};
use crate::mabac::{
    border_approximation_area, classify_areas, distance_matrix, normalize, scores_and_rank, weight_matrix,
    AreaClassification, BorderApproximationArea, Criterion, DistanceMatrix, RoughDecisionMatrix,
};
use crate::problem::DecisionProblem;
use crate::project::ProjectFile;
use crate::ranking::{MethodKind, Ranking, RankingMethod, RoughVikor};
use crate::validity::{
    test_composition, test_rank_stability, test_transitivity, Outcome, Partition, Substitution, ValidityReport,
};

#[derive(Debug, Clone, PartialEq)]
pub enum ValidityTest {
    RankStability(Substitution),
    Transitivity(Partition),
    Composition(Partition),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub gate: ConsistencyGate,
    /// Ranking methods to report. MABAC stages are always computed.
    pub methods: Vec<MethodKind>,
    pub vikor_v: f64,
    pub validity_tests: Vec<ValidityTest>,
    /// Method the validity tests are run against.
    pub validity_method: MethodKind,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            gate: ConsistencyGate::Strict,
            methods: vec![MethodKind::Mabac],
            vikor_v: DEFAULT_VIKOR_V,
            validity_tests: Vec::new(),
            validity_method: MethodKind::Mabac,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpertConsistency {
    pub expert: usize,
    #[serde(flatten)]
    pub report: ConsistencyReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub project: Option<String>,
    pub alternatives: Vec<String>,
    pub criteria: Vec<Criterion>,
    #[serde(rename = "ConsistencyReport")]
    pub consistency: Vec<ExpertConsistency>,
    #[serde(rename = "RoughGroupMatrix")]
    pub group_matrix: RoughGroupMatrix,
    #[serde(rename = "RoughWeightVector")]
    pub weights: RoughWeightVector,
    /// Initial, normalized and weighted matrices, in that order.
    #[serde(rename = "RoughDecisionMatrix")]
    pub matrices: Vec<RoughDecisionMatrix>,
    #[serde(rename = "BorderApproximationArea")]
    pub border: BorderApproximationArea,
    #[serde(rename = "DistanceMatrix")]
    pub distances: DistanceMatrix,
    #[serde(rename = "Ranking")]
    pub ranking: Ranking,
    #[serde(rename = "AreaClassification")]
    pub areas: AreaClassification,
    #[serde(rename = "BaselineResult", default, skip_serializing_if = "Vec::is_empty")]
    pub baselines: Vec<BaselineResult>,
    #[serde(rename = "ValidityReport", default, skip_serializing_if = "Vec::is_empty")]
    pub validity: Vec<ValidityReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl RunReport {
    /// Ranking for `method`, if it was computed.
    pub fn ranking_for(&self, method: MethodKind) -> Option<&Ranking> {
        if method == MethodKind::Mabac {
            return Some(&self.ranking);
        }
        self.baselines
            .iter()
            .map(|b| &b.ranking)
            .find(|r| r.method == method)
    }

    /// True if any requested validity test failed or was inconclusive.
    pub fn validity_failed(&self) -> bool {
        self.validity.iter().any(|v| v.outcome != Outcome::Passed)
    }
}

/// Weights only: consistency, aggregation and rough AHP weights.
pub struct WeightsStage {
    pub consistency: Vec<ExpertConsistency>,
    pub group_matrix: RoughGroupMatrix,
    pub weights: RoughWeightVector,
    pub criteria: Vec<Criterion>,
    pub warnings: Vec<String>,
}

pub fn derive_weights(project: &ProjectFile, gate: ConsistencyGate) -> Result<WeightsStage> {
    let matrices = project.pairwise().stage("load")?;
    let mut warnings = Vec::new();
    let mut consistency = Vec::with_capacity(matrices.len());
    for (e, m) in matrices.iter().enumerate() {
        for w in m.saaty_warnings() {
            warnings.push(format!("expert {}: {w}", e + 1));
        }
        let report = consistency_report(m).stage("consistency")?;
        if !report.acceptable {
            warnings.push(format!("expert {}: CR = {:.4} is not below 0.1", e + 1, report.cr));
        }
        consistency.push(ExpertConsistency {
            expert: e + 1,
            report,
        });
    }
    let group_matrix = aggregate_group(&matrices, gate).stage("aggregation")?;
    let weights = rough_weights(&group_matrix).stage("weights")?;
    let criteria = project
        .criteria
        .iter()
        .zip(&weights.normalized)
        .map(|(c, w)| Criterion::new(c.id.clone(), c.direction, *w))
        .collect::<Result<Vec<_>>>()
        .stage("weights")?;
    Ok(WeightsStage {
        consistency,
        group_matrix,
        weights,
        criteria,
        warnings,
    })
}

/// The decision problem with AHP-derived weights.
pub fn decision_problem(project: &ProjectFile, criteria: Vec<Criterion>) -> Result<DecisionProblem> {
    DecisionProblem::new(project.alternative_ids(), criteria, project.ratings()).stage("load")
}

fn method_for(kind: MethodKind, vikor_v: f64) -> Box<dyn RankingMethod + Send + Sync> {
    match kind {
        MethodKind::Vikor => Box::new(RoughVikor { v: vikor_v }),
        other => other.method(),
    }
}

pub fn run(project: &ProjectFile, options: &RunOptions) -> Result<RunReport> {
    let WeightsStage {
        consistency,
        group_matrix,
        weights,
        criteria,
        mut warnings,
    } = derive_weights(project, options.gate)?;
    let problem = decision_problem(project, criteria.clone())?;

    let initial = problem.initial_matrix().stage("initial matrix")?;
    let normalized = normalize(&initial, &criteria).stage("normalization")?;
    let weighted = weight_matrix(&normalized, &criteria).stage("weighting")?;
    let border = border_approximation_area(&weighted).stage("border approximation area")?;
    let distances = distance_matrix(&weighted, &border, &criteria).stage("distances")?;
    let ranking = scores_and_rank(&distances);
    warnings.extend(ranking.warnings.iter().cloned());
    let areas = classify_areas(&distances);

    let mut baselines = Vec::new();
    for kind in &options.methods {
        let result = match kind {
            MethodKind::Mabac => continue,
            MethodKind::Topsis => rough_topsis(&initial, &criteria).stage("topsis")?,
            MethodKind::Vikor => rough_vikor(&initial, &criteria, options.vikor_v).stage("vikor")?,
        };
        if baselines.iter().any(|b: &BaselineResult| b.ranking.method == *kind) {
            continue;
        }
        warnings.extend(result.ranking.warnings.iter().cloned());
        baselines.push(result);
    }

    let method = method_for(options.validity_method, options.vikor_v);
    let mut validity = Vec::new();
    for test in &options.validity_tests {
        let report = match test {
            ValidityTest::RankStability(s) => test_rank_stability(&problem, method.as_ref(), s),
            ValidityTest::Transitivity(p) => test_transitivity(&problem, method.as_ref(), p),
            ValidityTest::Composition(p) => test_composition(&problem, method.as_ref(), p),
        }
        .stage("validity")?;
        validity.push(report);
    }

    Ok(RunReport {
        project: project.name.clone(),
        alternatives: project.alternative_ids(),
        criteria,
        consistency,
        group_matrix,
        weights,
        matrices: vec![initial, normalized, weighted],
        border,
        distances,
        ranking,
        areas,
        baselines,
        validity,
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" | "text-table" => Ok(ReportFormat::Text),
            "structured" | "json" => Ok(ReportFormat::Structured),
            other => Err(Error::Config(format!("unknown report format {other:?}"))),
        }
    }
}

pub fn render_report(report: &RunReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => render_text(report),
        ReportFormat::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

pub fn parse_structured(text: &str) -> Result<RunReport> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("report:{}:{}", e.line(), e.column()),
        message: e.to_string(),
    })
}

/// Column-aligned table; the first column is left-aligned, the rest right-aligned.
pub fn format_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (j, cell) in cells.iter().enumerate().take(cols) {
            if j > 0 {
                s.push_str("  ");
            }
            let pad = widths[j] - cell.chars().count();
            if j == 0 {
                s.push_str(cell);
                s.push_str(&" ".repeat(pad));
            } else {
                s.push_str(&" ".repeat(pad));
                s.push_str(cell);
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(headers);
    out.push('\n');
    let total: usize = widths.iter().sum::<usize>() + 2 * cols.saturating_sub(1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn section(out: &mut String, title: &str) {
    if !out.is_empty() {
        out.push('\n');
    }
    let _ = writeln!(out, "{title}");
    let _ = writeln!(out, "{}", "=".repeat(title.chars().count()));
}

fn headers(first: &str, rest: &[String]) -> Vec<String> {
    std::iter::once(first.to_string()).chain(rest.iter().cloned()).collect()
}

fn f3(x: f64) -> String {
    // avoid "-0.000"
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn matrix_table(ids: &[String], criteria: &[String], m: &RoughDecisionMatrix) -> String {
    let rows: Vec<Vec<String>> = ids
        .iter()
        .zip(m.rows())
        .map(|(id, r)| std::iter::once(id.clone()).chain(r.iter().map(|x| format!("{x:.3}"))).collect())
        .collect();
    format_table(&headers("", criteria), &rows)
}

fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let crit: Vec<String> = r.criteria.iter().map(|c| c.id.clone()).collect();

    section(&mut out, "Consistency of expert pairwise matrices");
    let rows: Vec<Vec<String>> = r
        .consistency
        .iter()
        .map(|c| {
            vec![
                format!("expert {}", c.expert),
                format!("{:.3}", c.report.lambda_max),
                format!("{:.4}", c.report.ci),
                format!("{:.4}", c.report.cr),
                if c.report.acceptable { "yes" } else { "no" }.into(),
            ]
        })
        .collect();
    out.push_str(&format_table(
        &["".into(), "lambda_max".into(), "CI".into(), "CR".into(), "CR < 0.1".into()],
        &rows,
    ));

    section(&mut out, "Aggregated rough comparison matrix");
    let rows: Vec<Vec<String>> = crit
        .iter()
        .zip(r.group_matrix.rows())
        .map(|(id, row)| std::iter::once(id.clone()).chain(row.iter().map(|x| format!("{x:.3}"))).collect())
        .collect();
    out.push_str(&format_table(&headers("", &crit), &rows));

    section(&mut out, "Criteria weights");
    let rows: Vec<Vec<String>> = crit
        .iter()
        .zip(r.weights.raw.iter().zip(&r.weights.normalized))
        .map(|(id, (w, n))| vec![id.clone(), format!("{w:.3}"), format!("{n:.3}")])
        .collect();
    out.push_str(&format_table(&["".into(), "rough weight".into(), "normalized".into()], &rows));

    let titles = ["Initial rough decision matrix", "Normalized matrix", "Weighted matrix"];
    for (title, m) in titles.iter().zip(&r.matrices) {
        section(&mut out, title);
        out.push_str(&matrix_table(&r.alternatives, &crit, m));
    }

    section(&mut out, "Border approximation area");
    let row = vec![std::iter::once("g".to_string())
        .chain(r.border.g.iter().map(|g| format!("{g:.3}")))
        .collect::<Vec<_>>()];
    out.push_str(&format_table(&headers("", &crit), &row));

    section(&mut out, "Distances from the border approximation area");
    let rows: Vec<Vec<String>> = r
        .distances
        .alternatives
        .iter()
        .zip(r.distances.q.iter().zip(&r.distances.scores))
        .map(|(id, (q, s))| {
            std::iter::once(id.clone())
                .chain(q.iter().map(|x| f3(*x)))
                .chain(std::iter::once(f3(*s)))
                .collect()
        })
        .collect();
    let mut h = headers("", &crit);
    h.push("S".into());
    out.push_str(&format_table(&h, &rows));

    section(&mut out, "Ranking");
    out.push_str(&ranking_table(&r.ranking, "S"));

    section(&mut out, "Approximation areas");
    let rows: Vec<Vec<String>> = r
        .areas
        .by_criterion
        .iter()
        .map(|a| {
            vec![
                a.key.clone(),
                a.upper.join(", "),
                a.border.join(", "),
                a.lower.join(", "),
            ]
        })
        .collect();
    out.push_str(&format_table(&["".into(), "G+".into(), "G".into(), "G-".into()], &rows));

    if !r.baselines.is_empty() {
        section(&mut out, "Method comparison");
        let mut all = vec![&r.ranking];
        all.extend(r.baselines.iter().map(|b| &b.ranking));
        let rows: Vec<Vec<String>> = r
            .alternatives
            .iter()
            .map(|id| {
                std::iter::once(id.clone())
                    .chain(all.iter().map(|rk| rk.rank_of(id).map_or("-".into(), |x| x.to_string())))
                    .collect()
            })
            .collect();
        let h: Vec<String> = std::iter::once(String::new())
            .chain(all.iter().map(|rk| rk.method.name().to_string()))
            .collect();
        out.push_str(&format_table(&h, &rows));
        for b in &r.baselines {
            if let BaselineDetails::Vikor(v) = &b.details {
                let _ = writeln!(
                    out,
                    "vikor (v = {}): acceptable advantage {}, acceptable stability {}, compromise set {{{}}}",
                    v.v,
                    v.acceptable_advantage,
                    v.acceptable_stability,
                    v.compromise.join(", ")
                );
            }
        }
    }

    if !r.validity.is_empty() {
        section(&mut out, "Ranking validity");
        for v in &r.validity {
            let _ = writeln!(
                out,
                "criterion {} ({}): {:?}",
                v.criterion,
                v.method,
                v.outcome
            );
            let _ = writeln!(out, "  original:  {}", v.evidence.original.join(" > "));
            for o in &v.evidence.rankings {
                let _ = writeln!(out, "  {}: {}", o.label, o.order.join(" > "));
            }
            let _ = writeln!(out, "  {}", v.evidence.comparison);
            for c in &v.evidence.conflicts {
                let _ = writeln!(out, "  conflict: {c}");
            }
            if !v.evidence.unresolved.is_empty() {
                let pairs: Vec<String> = v
                    .evidence
                    .unresolved
                    .iter()
                    .map(|(a, b)| format!("{a}/{b}"))
                    .collect();
                let _ = writeln!(out, "  ordered by original ranking: {}", pairs.join(", "));
            }
        }
    }

    if !r.warnings.is_empty() {
        section(&mut out, "Warnings");
        for w in &r.warnings {
            let _ = writeln!(out, "- {w}");
        }
    }
    out
}

pub fn ranking_table(ranking: &Ranking, score_label: &str) -> String {
    let rows: Vec<Vec<String>> = ranking
        .entries
        .iter()
        .map(|e| vec![e.rank.to_string(), e.id.clone(), f3(e.score)])
        .collect();
    format_table(&["rank".into(), "alternative".into(), score_label.into()], &rows)
}

//! Rough MABAC: ranks alternatives by their signed distances from the border
//! approximation area (BAA) of each criterion.
//!
//! The pipeline runs initial matrix -> normalized -> weighted -> BAA ->
//! distances -> scores. Every stage is a plain value; nothing is mutated in
//! place, so stages can be inspected or reported independently.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ranking::{rank_by_score, RankedAlternative, Ranking, MethodKind};
use crate::rough::{interval_distance, rough_average, JudgmentSequence, RoughNumber, EPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Larger is better.
    Benefit,
    /// Smaller is better.
    Cost,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Criterion {
    pub id: String,
    pub direction: Direction,
    /// Normalized rough weight.
    pub weight: RoughNumber,
}

impl Criterion {
    pub fn new(id: impl Into<String>, direction: Direction, weight: RoughNumber) -> Result<Self> {
        let id = id.into();
        if weight.upper() > 1.0 + EPS || weight.lower() < 0.0 {
            return Err(Error::Domain(format!(
                "criterion {id}: weight {weight} is outside [0, 1]"
            )));
        }
        Ok(Self {
            id,
            direction,
            weight,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Initial,
    Normalized,
    Weighted,
}

/// `m` alternatives by `n` criteria of rough numbers at one pipeline stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoughDecisionMatrix {
    stage: Stage,
    alternatives: Vec<String>,
    rows: Vec<Vec<RoughNumber>>,
}

impl RoughDecisionMatrix {
    pub fn new(stage: Stage, alternatives: Vec<String>, rows: Vec<Vec<RoughNumber>>) -> Result<Self> {
        if alternatives.len() != rows.len() {
            return Err(Error::Domain(format!(
                "{} alternative labels for {} matrix rows",
                alternatives.len(),
                rows.len()
            )));
        }
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("decision matrix rows differ in length".into()));
        }
        Ok(Self {
            stage,
            alternatives,
            rows,
        })
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> RoughNumber {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<RoughNumber>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = RoughNumber> + '_ {
        self.rows.iter().map(move |r| r[j])
    }

    fn expect(&self, stage: Stage, criteria: Option<&[Criterion]>) -> Result<()> {
        if self.stage != stage {
            return Err(Error::Domain(format!(
                "expected a {stage:?} matrix, got {:?}",
                self.stage
            )));
        }
        if self.m() == 0 {
            return Err(Error::Domain("decision matrix has no alternatives".into()));
        }
        if let Some(criteria) = criteria {
            if criteria.len() != self.n() {
                return Err(Error::Domain(format!(
                    "{} criteria for a matrix with {} columns",
                    criteria.len(),
                    self.n()
                )));
            }
        }
        Ok(())
    }

    fn map(&self, stage: Stage, mut f: impl FnMut(usize, RoughNumber) -> RoughNumber) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().enumerate().map(|(j, x)| f(j, *x)).collect())
            .collect();
        Self {
            stage,
            alternatives: self.alternatives.clone(),
            rows,
        }
    }
}

/// Cell-wise rough averages of `k` expert rating matrices (`m x n` each).
pub fn build_initial_matrix(
    alternatives: &[String],
    ratings: &[Vec<Vec<f64>>],
) -> Result<RoughDecisionMatrix> {
    if ratings.is_empty() {
        return Err(Error::Domain("no expert rating matrices".into()));
    }
    let m = alternatives.len();
    let n = ratings[0].first().map_or(0, Vec::len);
    for (e, matrix) in ratings.iter().enumerate() {
        if matrix.len() != m {
            return Err(Error::Domain(format!(
                "expert {} rating matrix has {} rows, expected {m}",
                e + 1,
                matrix.len()
            )));
        }
        if let Some((i, row)) = matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Domain(format!(
                "expert {} rating matrix row {} has {} entries, expected {n}",
                e + 1,
                i + 1,
                row.len()
            )));
        }
    }
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let seq = JudgmentSequence::new(ratings.iter().map(|r| r[i][j]).collect())
                .map_err(|e| Error::Domain(format!("{} / criterion {}: {e}", alternatives[i], j + 1)))?;
            row.push(rough_average(&seq));
        }
        rows.push(row);
    }
    RoughDecisionMatrix::new(Stage::Initial, alternatives.to_vec(), rows)
}

/// Linear normalization onto `[0, 1]` per criterion.
///
/// Benefit columns use `x+ = max upper`, `x- = min lower`; cost columns use
/// `x+ = min lower`, `x- = max upper`.
pub fn normalize(x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<RoughDecisionMatrix> {
    x.expect(Stage::Initial, Some(criteria))?;
    let mut extremes = Vec::with_capacity(criteria.len());
    for (j, c) in criteria.iter().enumerate() {
        let max_upper = x.column(j).map(|r| r.upper()).fold(f64::MIN, f64::max);
        let min_lower = x.column(j).map(|r| r.lower()).fold(f64::MAX, f64::min);
        let (plus, minus) = match c.direction {
            Direction::Benefit => (max_upper, min_lower),
            Direction::Cost => (min_lower, max_upper),
        };
        if (plus - minus).abs() <= EPS {
            return Err(Error::Domain(format!(
                "criterion {} is degenerate: every alternative is rated {plus}",
                c.id
            )));
        }
        extremes.push((plus, minus));
    }
    Ok(x.map(Stage::Normalized, |j, v| {
        let (plus, minus) = extremes[j];
        let (lower, upper) = match criteria[j].direction {
            Direction::Benefit => (
                (v.lower() - minus) / (plus - minus),
                (v.upper() - minus) / (plus - minus),
            ),
            Direction::Cost => (
                (v.lower() - plus) / (minus - plus),
                (v.upper() - plus) / (minus - plus),
            ),
        };
        RoughNumber::from_ordered(lower, upper)
    }))
}

/// `v = [wL * (nL + 1), wU * (nU + 1)]`.
pub fn weight_matrix(n: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<RoughDecisionMatrix> {
    n.expect(Stage::Normalized, Some(criteria))?;
    Ok(n.map(Stage::Weighted, |j, x| {
        let w = criteria[j].weight;
        RoughNumber::from_ordered(w.lower() * (x.lower() + 1.0), w.upper() * (x.upper() + 1.0))
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BorderApproximationArea {
    pub g: Vec<RoughNumber>,
}

fn geometric_mean(values: impl Iterator<Item = f64>) -> f64 {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), v| (s + v.ln(), c + 1));
    (sum / count as f64).exp()
}

/// Column-wise geometric mean of the weighted matrix.
pub fn border_approximation_area(v: &RoughDecisionMatrix) -> Result<BorderApproximationArea> {
    v.expect(Stage::Weighted, None)?;
    for (i, row) in v.rows().iter().enumerate() {
        if let Some(j) = row.iter().position(|x| !x.is_positive()) {
            return Err(Error::Domain(format!(
                "weighted entry ({}, criterion {}) = {} is not strictly positive",
                v.alternatives()[i],
                j + 1,
                row[j]
            )));
        }
    }
    let g = (0..v.n())
        .map(|j| {
            RoughNumber::from_ordered(
                geometric_mean(v.column(j).map(|x| x.lower())),
                geometric_mean(v.column(j).map(|x| x.upper())),
            )
        })
        .collect();
    Ok(BorderApproximationArea { g })
}

/// Signed distances `q_ij` from the BAA, row scores and the resulting order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    pub q: Vec<Vec<f64>>,
    pub scores: Vec<f64>,
    /// Alternative indices, best first.
    pub ranking: Vec<usize>,
}

pub fn distance_matrix(
    v: &RoughDecisionMatrix,
    g: &BorderApproximationArea,
    criteria: &[Criterion],
) -> Result<DistanceMatrix> {
    v.expect(Stage::Weighted, Some(criteria))?;
    if g.g.len() != criteria.len() {
        return Err(Error::Domain(format!(
            "border area has {} entries for {} criteria",
            g.g.len(),
            criteria.len()
        )));
    }
    let q: Vec<Vec<f64>> = v
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(&g.g)
                .zip(criteria)
                .map(|((vij, gj), c)| {
                    let d = interval_distance(vij, gj);
                    let sign = match (vij.compare(gj), c.direction) {
                        (Ordering::Equal, _) => 0.0,
                        (Ordering::Greater, Direction::Benefit) | (Ordering::Less, Direction::Cost) => 1.0,
                        (Ordering::Less, Direction::Benefit) | (Ordering::Greater, Direction::Cost) => -1.0,
                    };
                    sign * d
                })
                .collect()
        })
        .collect();
    let scores: Vec<f64> = q.iter().map(|row| row.iter().sum()).collect();
    let ranking = rank_by_score(MethodKind::Mabac, v.alternatives(), &scores, true);
    let ranking = ranking
        .entries
        .iter()
        .map(|e| v.alternatives().iter().position(|a| *a == e.id).expect("ranked id"))
        .collect();
    Ok(DistanceMatrix {
        alternatives: v.alternatives().to_vec(),
        criteria: criteria.iter().map(|c| c.id.clone()).collect(),
        q,
        scores,
        ranking,
    })
}

/// Final scores `S(A_i) = sum_j q_ij`, best first. Exact score ties are
/// broken by alternative id and reported as warnings.
pub fn scores_and_rank(d: &DistanceMatrix) -> Ranking {
    rank_by_score(MethodKind::Mabac, &d.alternatives, &d.scores, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Area {
    /// `q > 0`, G+
    Upper,
    /// `q = 0`, G
    Border,
    /// `q < 0`, G-
    Lower,
}

impl Area {
    pub fn of(q: f64) -> Self {
        if q > 0.0 {
            Area::Upper
        } else if q < 0.0 {
            Area::Lower
        } else {
            Area::Border
        }
    }
}

/// Members of the three approximation areas for one criterion.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct AreaMembers {
    pub key: String,
    pub upper: Vec<String>,
    pub border: Vec<String>,
    pub lower: Vec<String>,
}

impl AreaMembers {
    fn push(&mut self, area: Area, id: &str) {
        match area {
            Area::Upper => self.upper.push(id.to_owned()),
            Area::Border => self.border.push(id.to_owned()),
            Area::Lower => self.lower.push(id.to_owned()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AreaClassification {
    /// Per criterion, which alternatives fall in each area.
    pub by_criterion: Vec<AreaMembers>,
    /// Per alternative, which criteria place it in each area.
    pub by_alternative: Vec<AreaMembers>,
}

impl AreaClassification {
    pub fn criterion(&self, id: &str) -> Option<&AreaMembers> {
        self.by_criterion.iter().find(|a| a.key == id)
    }

    pub fn alternative(&self, id: &str) -> Option<&AreaMembers> {
        self.by_alternative.iter().find(|a| a.key == id)
    }
}

pub fn classify_areas(d: &DistanceMatrix) -> AreaClassification {
    let mut by_criterion: Vec<AreaMembers> = d
        .criteria
        .iter()
        .map(|c| AreaMembers {
            key: c.clone(),
            ..Default::default()
        })
        .collect();
    let mut by_alternative: Vec<AreaMembers> = d
        .alternatives
        .iter()
        .map(|a| AreaMembers {
            key: a.clone(),
            ..Default::default()
        })
        .collect();
    for (i, row) in d.q.iter().enumerate() {
        for (j, &q) in row.iter().enumerate() {
            let area = Area::of(q);
            by_criterion[j].push(area, &d.alternatives[i]);
            by_alternative[i].push(area, &d.criteria[j]);
        }
    }
    AreaClassification {
        by_criterion,
        by_alternative,
    }
}

/// Every stage of one MABAC evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MabacPipeline {
    pub initial: RoughDecisionMatrix,
    pub normalized: RoughDecisionMatrix,
    pub weighted: RoughDecisionMatrix,
    pub border: BorderApproximationArea,
    pub distances: DistanceMatrix,
}

impl MabacPipeline {
    pub fn ranking(&self) -> Ranking {
        scores_and_rank(&self.distances)
    }

    pub fn ranked(&self) -> Vec<RankedAlternative> {
        self.ranking().entries
    }
}

pub fn mabac(x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<MabacPipeline> {
    let normalized = normalize(x, criteria)?;
    let weighted = weight_matrix(&normalized, criteria)?;
    let border = border_approximation_area(&weighted)?;
    let distances = distance_matrix(&weighted, &border, criteria)?;
    Ok(MabacPipeline {
        initial: x.clone(),
        normalized,
        weighted,
        border,
        distances,
    })
}

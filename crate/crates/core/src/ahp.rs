//! Rough AHP: consistency of expert pairwise comparison matrices and rough
//! criteria weights from their cell-wise rough aggregation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rough::{rough_average, JudgmentSequence, RoughNumber};

const RECIPROCITY_TOL: f64 = 1e-9;
const POWER_TOL: f64 = 1e-10;
const POWER_MAX_ITER: usize = 10_000;

/// Saaty's random consistency index for `n` in `3..=10`.
pub fn random_index(n: usize) -> Result<f64> {
    const RI: [f64; 8] = [0.52, 0.89, 1.11, 1.25, 1.35, 1.40, 1.45, 1.49];
    if (3..=10).contains(&n) {
        Ok(RI[n - 3])
    } else {
        Err(Error::Config(format!(
            "random consistency index is tabulated for 3 to 10 criteria, got {n}"
        )))
    }
}

/// Positive reciprocal `n x n` comparison matrix with unit diagonal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl PairwiseMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let cells = rows
            .into_iter()
            .map(|r| r.into_iter().map(Some).collect())
            .collect();
        Self::from_partial(cells)
    }

    /// Builds a matrix where missing cells are derived from their reciprocal.
    /// A missing diagonal cell is 1.
    pub fn from_partial(rows: Vec<Vec<Option<f64>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Validation("pairwise matrix is empty".into()));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Validation(format!(
                "pairwise matrix is not square: row {} has {} entries, expected {n}",
                i + 1,
                r.len()
            )));
        }
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = match (rows[i][j], rows[j][i]) {
                    (Some(v), _) => v,
                    (None, _) if i == j => 1.0,
                    (None, Some(r)) => 1.0 / r,
                    (None, None) => {
                        return Err(Error::Validation(format!(
                            "pairwise entries ({},{}) and ({},{}) are both missing",
                            i + 1,
                            j + 1,
                            j + 1,
                            i + 1
                        )))
                    }
                };
                if v <= 0.0 || !v.is_finite() {
                    return Err(Error::Validation(format!(
                        "pairwise entry ({},{}) = {v} is not strictly positive",
                        i + 1,
                        j + 1
                    )));
                }
                entries[i * n + j] = v;
            }
        }
        let m = Self { n, entries };
        m.check_invariants()?;
        Ok(m)
    }

    /// Fully consistent matrix `a_ij = w_i / w_j`.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let rows = weights
            .iter()
            .map(|wi| weights.iter().map(|wj| wi / wj).collect())
            .collect();
        Self::new(rows)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if (self.get(i, i) - 1.0).abs() > RECIPROCITY_TOL {
                return Err(Error::Validation(format!(
                    "diagonal entry ({0},{0}) = {1} is not 1",
                    i + 1,
                    self.get(i, i)
                )));
            }
            for j in i + 1..n {
                let p = self.get(i, j) * self.get(j, i);
                if (p - 1.0).abs() > RECIPROCITY_TOL {
                    return Err(Error::Validation(format!(
                        "entries ({},{}) = {} and ({},{}) = {} are not reciprocal",
                        i + 1,
                        j + 1,
                        self.get(i, j),
                        j + 1,
                        i + 1,
                        self.get(j, i)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    /// Entries that are not on the 1/9..9 Saaty scale.
    pub fn saaty_warnings(&self) -> Vec<String> {
        let on_scale = |v: f64| {
            (1..=9).any(|s| {
                let s = f64::from(s);
                (v - s).abs() <= RECIPROCITY_TOL || (v - 1.0 / s).abs() <= RECIPROCITY_TOL
            })
        };
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if !on_scale(v) {
                    out.push(format!(
                        "entry ({},{}) = {v} is off the Saaty 1/9..9 scale",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        out
    }

    fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Dominant eigenvalue by power iteration with a Rayleigh-quotient estimate.
pub fn max_eigenvalue(m: &PairwiseMatrix) -> Result<f64> {
    let n = m.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut previous = f64::NAN;
    for _ in 0..POWER_MAX_ITER {
        let y = m.mul_vec(&x);
        // x has unit norm, so the Rayleigh quotient is x.y
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if (lambda - previous).abs() < POWER_TOL {
            return Ok(lambda);
        }
        previous = lambda;
    }
    Err(Error::Numeric(format!(
        "power iteration did not converge within {POWER_MAX_ITER} iterations"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub lambda_max: f64,
    pub ci: f64,
    pub cr: f64,
    pub acceptable: bool,
}

impl ConsistencyReport {
    /// Report for one or two criteria, where every reciprocal matrix is
    /// consistent and no random index exists.
    pub fn trivial(n: usize) -> Self {
        Self {
            lambda_max: n as f64,
            ci: 0.0,
            cr: 0.0,
            acceptable: true,
        }
    }
}

pub fn consistency_ratio(m: &PairwiseMatrix) -> Result<ConsistencyReport> {
    let n = m.n();
    let ri = random_index(n)?;
    let lambda_max = max_eigenvalue(m)?;
    let ci = (lambda_max - n as f64) / (n as f64 - 1.0);
    let cr = ci / ri;
    Ok(ConsistencyReport {
        lambda_max,
        ci,
        cr,
        acceptable: cr < 0.1,
    })
}

/// Consistency for any size: [`consistency_ratio`] for tabulated sizes and
/// [`ConsistencyReport::trivial`] below three criteria.
pub fn consistency_report(m: &PairwiseMatrix) -> Result<ConsistencyReport> {
    if m.n() < 3 {
        Ok(ConsistencyReport::trivial(m.n()))
    } else {
        consistency_ratio(m)
    }
}

/// How expert matrices with `CR >= 0.1` are treated during aggregation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConsistencyGate {
    /// Reject the whole group.
    #[default]
    Strict,
    /// Aggregate anyway; callers report a warning.
    Lenient,
}

/// Cell-wise rough aggregation of `k` expert matrices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoughGroupMatrix {
    rows: Vec<Vec<RoughNumber>>,
}

impl RoughGroupMatrix {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> RoughNumber {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<RoughNumber>] {
        &self.rows
    }

    pub fn from_rows(rows: Vec<Vec<RoughNumber>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation("rough group matrix is not square".into()));
            }
            if !row[i].approx_eq(&RoughNumber::crisp(1.0), RECIPROCITY_TOL) {
                return Err(Error::Validation(format!(
                    "rough group matrix diagonal ({0},{0}) is {1}, not [1, 1]",
                    i + 1,
                    row[i]
                )));
            }
        }
        Ok(Self { rows })
    }
}

/// Aggregates expert comparison matrices into a rough group matrix.
///
/// Each off-diagonal cell becomes the average rough interval of the experts'
/// judgments for that cell; cells are aggregated independently, so the
/// result is in general not reciprocal.
pub fn aggregate_group(
    matrices: &[PairwiseMatrix],
    gate: ConsistencyGate,
) -> Result<RoughGroupMatrix> {
    let first = matrices
        .first()
        .ok_or_else(|| Error::Domain("no pairwise matrices to aggregate".into()))?;
    let n = first.n();
    if let Some((e, m)) = matrices.iter().enumerate().find(|(_, m)| m.n() != n) {
        return Err(Error::Domain(format!(
            "expert {} matrix is {}x{}, expected {n}x{n}",
            e + 1,
            m.n(),
            m.n()
        )));
    }
    if gate == ConsistencyGate::Strict {
        let mut offenders = Vec::new();
        for (e, m) in matrices.iter().enumerate() {
            let report = consistency_report(m)?;
            if !report.acceptable {
                offenders.push(format!("expert {} (CR = {:.4})", e + 1, report.cr));
            }
        }
        if !offenders.is_empty() {
            return Err(Error::Validation(format!(
                "inconsistent pairwise matrices (CR >= 0.1): {}",
                offenders.join(", ")
            )));
        }
    }

    let mut rows = vec![vec![RoughNumber::crisp(1.0); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i != j {
                let seq = JudgmentSequence::new(matrices.iter().map(|m| m.get(i, j)).collect())?;
                *cell = rough_average(&seq);
            }
        }
    }
    Ok(RoughGroupMatrix { rows })
}

/// Rough criteria weights and their max-normalized counterparts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoughWeightVector {
    pub raw: Vec<RoughNumber>,
    pub normalized: Vec<RoughNumber>,
}

fn geometric_mean(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len() as f64;
    (values.map(f64::ln).sum::<f64>() / n).exp()
}

/// Row-wise geometric means of the lower and upper limits, normalized by the
/// largest upper weight.
pub fn rough_weights(g: &RoughGroupMatrix) -> Result<RoughWeightVector> {
    if let Some((i, j)) = (0..g.n())
        .flat_map(|i| (0..g.n()).map(move |j| (i, j)))
        .find(|&(i, j)| !g.get(i, j).is_positive())
    {
        return Err(Error::Domain(format!(
            "rough group matrix entry ({},{}) = {} is not strictly positive",
            i + 1,
            j + 1,
            g.get(i, j)
        )));
    }
    let raw: Vec<RoughNumber> = g
        .rows()
        .iter()
        .map(|row| {
            RoughNumber::from_ordered(
                geometric_mean(row.iter().map(|r| r.lower())),
                geometric_mean(row.iter().map(|r| r.upper())),
            )
        })
        .collect();
    let max_upper = raw.iter().map(|w| w.upper()).fold(f64::MIN, f64::max);
    let normalized = raw
        .iter()
        .map(|w| RoughNumber::from_ordered(w.lower() / max_upper, w.upper() / max_upper))
        .collect();
    Ok(RoughWeightVector { raw, normalized })
}

//! Project files: a JSON document holding criteria, alternatives and the
//! experts' pairwise and rating matrices.
//!
//! Matrix cells may be numbers, numeric strings ("7", "1/5") or labels.
//! Rating labels resolve through `linguistic_scale`, pairwise labels through
//! `pairwise_scale` (or [`default_pairwise_scale`]); lookups ignore case.
//! The lower triangle of a pairwise matrix may be `null` and is then derived
//! from its reciprocal. Any matrix may instead be `{"csv": "relative/path.csv"}`.
//!
//! [`load_project`] resolves all of this, so the returned file holds plain
//! numbers only and serializes back to an equivalent document.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::ahp::PairwiseMatrix;
use crate::error::{Error, Result};
use crate::mabac::Direction;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default = "benefit")]
    pub direction: Direction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
}

fn benefit() -> Direction {
    Direction::Benefit
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Number(f64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSource {
    Inline(Vec<Vec<Option<Cell>>>),
    Csv { csv: PathBuf },
}

pub fn default_linguistic_scale() -> BTreeMap<String, f64> {
    [
        ("very low", 1.0),
        ("low", 3.0),
        ("moderate", 5.0),
        ("high", 7.0),
        ("very high", 9.0),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

/// Default word map for pairwise judgments on the 1-9 scale.
pub fn default_pairwise_scale() -> BTreeMap<String, f64> {
    [
        ("equal", 1.0),
        ("moderate", 3.0),
        ("high", 5.0),
        ("strong", 5.0),
        ("very high", 7.0),
        ("very strong", 7.0),
        ("extreme", 9.0),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub experts: usize,
    pub criteria: Vec<CriterionSpec>,
    pub alternatives: Vec<AlternativeSpec>,
    #[serde(default = "default_linguistic_scale")]
    pub linguistic_scale: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairwise_scale: Option<BTreeMap<String, f64>>,
    pub pairwise_matrices: Vec<MatrixSource>,
    pub rating_matrices: Vec<MatrixSource>,
}

/// Case-insensitive label lookup.
struct Scale(BTreeMap<String, f64>);

impl Scale {
    fn new(what: &str, map: &BTreeMap<String, f64>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (k, v) in map {
            if !(v.is_finite() && *v > 0.0) {
                return Err(Error::Validation(format!("{what} label {k:?} maps to non-positive {v}")));
            }
            if out.insert(normalize_label(k), *v).is_some() {
                return Err(Error::Validation(format!("{what} label {k:?} is defined more than once")));
            }
        }
        Ok(Self(out))
    }

    fn get(&self, label: &str) -> Option<f64> {
        self.0.get(&normalize_label(label)).copied()
    }
}

fn normalize_label(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase()
}

fn parse_number(s: &str) -> Option<f64> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let (a, b) = (a.trim().parse::<f64>().ok()?, b.trim().parse::<f64>().ok()?);
        return (b != 0.0).then_some(a / b);
    }
    s.parse::<f64>().ok()
}

fn resolve_cell(cell: &Cell, scale: &Scale, location: &str) -> Result<f64> {
    let v = match cell {
        Cell::Number(v) => *v,
        Cell::Text(s) => parse_number(s)
            .or_else(|| scale.get(s))
            .ok_or_else(|| Error::Validation(format!("{location}: unknown label {s:?}")))?,
    };
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::Validation(format!("{location}: value {v} is not positive")));
    }
    Ok(v)
}

fn read_csv(path: &Path) -> Result<Vec<Vec<Option<Cell>>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| csv_error(path, e))?;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        rows.push(
            record
                .iter()
                .map(|s| (!s.is_empty()).then(|| Cell::Text(s.to_string())))
                .collect(),
        );
    }
    Ok(rows)
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    let location = match e.position() {
        Some(p) => format!("{}:{}", path.display(), p.line()),
        None => path.display().to_string(),
    };
    match e.into_kind() {
        csv::ErrorKind::Io(source) => Error::Io {
            path: path.to_path_buf(),
            source,
        },
        kind => Error::Parse {
            location,
            message: format!("{kind:?}"),
        },
    }
}

fn load_matrix(source: &MatrixSource, base: &Path) -> Result<Vec<Vec<Option<Cell>>>> {
    match source {
        MatrixSource::Inline(rows) => Ok(rows.clone()),
        MatrixSource::Csv { csv } => read_csv(&base.join(csv)),
    }
}

fn inline(rows: Vec<Vec<f64>>) -> MatrixSource {
    MatrixSource::Inline(
        rows.into_iter()
            .map(|r| r.into_iter().map(|v| Some(Cell::Number(v))).collect())
            .collect(),
    )
}

fn numeric(source: &MatrixSource) -> Vec<Vec<f64>> {
    match source {
        MatrixSource::Inline(rows) => rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| match c {
                        Some(Cell::Number(v)) => *v,
                        _ => panic!("project matrices are resolved on load"),
                    })
                    .collect()
            })
            .collect(),
        MatrixSource::Csv { .. } => panic!("project matrices are resolved on load"),
    }
}

impl ProjectFile {
    /// Parses and resolves a project document; CSV includes are relative to `base`.
    pub fn from_json_str(text: &str, source_name: &str, base: &Path) -> Result<Self> {
        let raw: ProjectFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("{source_name}:{}:{}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        raw.resolve(base)
    }

    fn resolve(mut self, base: &Path) -> Result<Self> {
        let (k, m, n) = (self.experts, self.alternatives.len(), self.criteria.len());
        if k == 0 || m == 0 || n == 0 {
            return Err(Error::Validation(format!(
                "project needs at least one expert, alternative and criterion (got {k}, {m}, {n})"
            )));
        }
        check_unique("criterion", self.criteria.iter().map(|c| c.id.as_str()))?;
        check_unique("alternative", self.alternatives.iter().map(|a| a.id.as_str()))?;
        for (what, count) in [
            ("pairwise_matrices", self.pairwise_matrices.len()),
            ("rating_matrices", self.rating_matrices.len()),
        ] {
            if count != k {
                return Err(Error::Validation(format!(
                    "{what} has {count} matrices for {k} experts"
                )));
            }
        }

        let ratings_scale = Scale::new("linguistic_scale", &self.linguistic_scale)?;
        let pairwise_scale = Scale::new(
            "pairwise_scale",
            self.pairwise_scale.as_ref().unwrap_or(&default_pairwise_scale()),
        )?;

        let mut pairwise = Vec::with_capacity(k);
        for (e, source) in self.pairwise_matrices.iter().enumerate() {
            let what = format!("expert {} pairwise matrix", e + 1);
            let rows = load_matrix(source, base)?;
            check_shape(&what, &rows, n, n)?;
            let mut partial = Vec::with_capacity(n);
            for (i, row) in rows.iter().enumerate() {
                let mut out = Vec::with_capacity(n);
                for (j, cell) in row.iter().enumerate() {
                    let loc = format!("{what} ({}, {})", self.criteria[i].id, self.criteria[j].id);
                    out.push(cell.as_ref().map(|c| resolve_cell(c, &pairwise_scale, &loc)).transpose()?);
                }
                partial.push(out);
            }
            let matrix = PairwiseMatrix::from_partial(partial)
                .map_err(|err| Error::Validation(format!("{what}: {err}")))?;
            pairwise.push(inline(matrix.rows()));
        }

        let mut ratings = Vec::with_capacity(k);
        for (e, source) in self.rating_matrices.iter().enumerate() {
            let what = format!("expert {} rating matrix", e + 1);
            let rows = load_matrix(source, base)?;
            check_shape(&what, &rows, m, n)?;
            let mut out = Vec::with_capacity(m);
            for (i, row) in rows.iter().enumerate() {
                let mut r = Vec::with_capacity(n);
                for (j, cell) in row.iter().enumerate() {
                    let loc = format!("{what} ({}, {})", self.alternatives[i].id, self.criteria[j].id);
                    let cell = cell
                        .as_ref()
                        .ok_or_else(|| Error::Validation(format!("{loc}: missing value")))?;
                    r.push(resolve_cell(cell, &ratings_scale, &loc)?);
                }
                out.push(r);
            }
            ratings.push(inline(out));
        }

        self.pairwise_matrices = pairwise;
        self.rating_matrices = ratings;
        Ok(self)
    }

    pub fn alternative_ids(&self) -> Vec<String> {
        self.alternatives.iter().map(|a| a.id.clone()).collect()
    }

    pub fn criterion_ids(&self) -> Vec<String> {
        self.criteria.iter().map(|c| c.id.clone()).collect()
    }

    pub fn pairwise(&self) -> Result<Vec<PairwiseMatrix>> {
        self.pairwise_matrices
            .iter()
            .map(|m| PairwiseMatrix::new(numeric(m)))
            .collect()
    }

    /// Expert x alternative x criterion.
    pub fn ratings(&self) -> Vec<Vec<Vec<f64>>> {
        self.rating_matrices.iter().map(numeric).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("project serializes")
    }
}

fn check_unique<'a>(what: &str, ids: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(Error::Validation(format!("duplicate {what} id {id:?}")));
        }
    }
    Ok(())
}

fn check_shape<T>(what: &str, rows: &[Vec<T>], m: usize, n: usize) -> Result<()> {
    if rows.len() != m {
        return Err(Error::Validation(format!(
            "{what} has {} rows, expected {m}",
            rows.len()
        )));
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Validation(format!(
            "{what} row {} has {} columns, expected {n}",
            i + 1,
            r.len()
        )));
    }
    Ok(())
}

pub fn load_project(path: impl AsRef<Path>) -> Result<ProjectFile> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    ProjectFile::from_json_str(&text, &path.display().to_string(), base)
}

/// Reads a JSON document such as a substitution or partition file.
pub fn load_json<T: serde::de::DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        location: format!("{}:{}:{}", path.display(), e.line(), e.column()),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOY: &str = r#"{
        "experts": 1,
        "criteria": [{"id": "C1"}, {"id": "C2", "direction": "cost"}, {"id": "C3"}],
        "alternatives": [{"id": "A1"}, {"id": "A2"}],
        "pairwise_matrices": [[[1, "moderate", "1/5"], [null, 1, 2], [null, null, 1]]],
        "rating_matrices": [[["High", "moderate", 4], ["very  high", "3", 2]]]
    }"#;

    #[test]
    fn labels_fractions_and_reciprocals_resolve() {
        let p = ProjectFile::from_json_str(TOY, "toy", Path::new(".")).unwrap();
        assert_eq!(p.ratings()[0], vec![vec![7.0, 5.0, 4.0], vec![9.0, 3.0, 2.0]]);
        let b = &p.pairwise().unwrap()[0];
        assert_eq!(b.get(0, 1), 3.0);
        assert_eq!(b.get(1, 0), 1.0 / 3.0);
        assert_eq!(b.get(2, 0), 5.0);
        assert_eq!(p.criteria[1].direction, Direction::Cost);
        assert_eq!(p.criteria[0].direction, Direction::Benefit);
    }

    #[test]
    fn reserialization_is_idempotent() {
        let p = ProjectFile::from_json_str(TOY, "toy", Path::new(".")).unwrap();
        let once = p.to_json();
        let q = ProjectFile::from_json_str(&once, "toy", Path::new(".")).unwrap();
        assert_eq!(p, q);
        assert_eq!(once, q.to_json());
    }

    #[test]
    fn unknown_label_is_located() {
        let bad = TOY.replace("\"moderate\", 4", "\"superb\", 4");
        let err = ProjectFile::from_json_str(&bad, "toy", Path::new(".")).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("superb") && msg.contains("expert 1 rating matrix (A1, C2)"), "{msg}");
    }

    #[test]
    fn syntax_error_has_line_and_column() {
        let err = ProjectFile::from_json_str("{\n  \"experts\": ,\n}", "p.json", Path::new(".")).unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location.starts_with("p.json:2:")));
    }

    #[test]
    fn shape_error_names_expert_and_matrix() {
        let bad = TOY.replace(", [\"very  high\", \"3\", 2]", "");
        let err = ProjectFile::from_json_str(&bad, "toy", Path::new(".")).unwrap_err();
        assert!(err.to_string().contains("expert 1 rating matrix has 1 rows, expected 2"));
    }

    #[test]
    fn nonpositive_and_duplicate_labels() {
        let bad = TOY.replace("\"3\", 2]", "\"3\", 0]");
        assert!(ProjectFile::from_json_str(&bad, "toy", Path::new(".")).is_err());
        let dup = TOY.replace(
            "\"experts\": 1,",
            "\"experts\": 1, \"linguistic_scale\": {\"High\": 7, \"high\": 8},",
        );
        let err = ProjectFile::from_json_str(&dup, "toy", Path::new(".")).unwrap_err();
        assert!(err.to_string().contains("more than once"));
    }

    #[test]
    fn non_reciprocal_pairwise_is_rejected() {
        let bad = TOY.replace("[null, 1, 2]", "[2, 1, 2]");
        assert!(ProjectFile::from_json_str(&bad, "toy", Path::new(".")).is_err());
    }

    #[test]
    fn numbers_parse() {
        assert_eq!(parse_number(" 1 / 4 "), Some(0.25));
        assert_eq!(parse_number("7"), Some(7.0));
        assert_eq!(parse_number("1/0"), None);
        assert_eq!(parse_number("high"), None);
    }
}

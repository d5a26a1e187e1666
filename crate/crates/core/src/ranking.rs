use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::baselines::{rough_topsis, rough_vikor, DEFAULT_VIKOR_V};
use crate::error::{Error, Result};
use crate::mabac::{mabac, scores_and_rank, Criterion, RoughDecisionMatrix};
use crate::rough::EPS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodKind {
    Mabac,
    Topsis,
    Vikor,
}

impl MethodKind {
    pub const ALL: [MethodKind; 3] = [MethodKind::Mabac, MethodKind::Topsis, MethodKind::Vikor];

    pub fn name(self) -> &'static str {
        match self {
            MethodKind::Mabac => "mabac",
            MethodKind::Topsis => "topsis",
            MethodKind::Vikor => "vikor",
        }
    }

    /// The method with default parameters.
    pub fn method(self) -> Box<dyn RankingMethod + Send + Sync> {
        match self {
            MethodKind::Mabac => Box::new(Mabac),
            MethodKind::Topsis => Box::new(RoughTopsis),
            MethodKind::Vikor => Box::new(RoughVikor::default()),
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mabac" => Ok(MethodKind::Mabac),
            "topsis" => Ok(MethodKind::Topsis),
            "vikor" => Ok(MethodKind::Vikor),
            other => Err(Error::Config(format!("unknown ranking method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedAlternative {
    pub id: String,
    pub score: f64,
    /// 1 = best.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ranking {
    pub method: MethodKind,
    pub entries: Vec<RankedAlternative>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Ranking {
    /// Alternative ids, best first.
    pub fn order(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.id.as_str()).collect()
    }

    pub fn rank_of(&self, id: &str) -> Option<usize> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.rank)
    }

    pub fn score_of(&self, id: &str) -> Option<f64> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.score)
    }
}

/// Orders alternatives by score (`descending` = larger is better). Exact
/// ties fall back to id order; ties within `EPS` are reported as warnings.
pub fn rank_by_score(method: MethodKind, ids: &[String], scores: &[f64], descending: bool) -> Ranking {
    let mut idx: Vec<usize> = (0..ids.len()).collect();
    idx.sort_by(|&a, &b| {
        let by_score = if descending {
            scores[b].total_cmp(&scores[a])
        } else {
            scores[a].total_cmp(&scores[b])
        };
        by_score.then_with(|| ids[a].cmp(&ids[b]))
    });
    let warnings = idx
        .windows(2)
        .filter(|w| (scores[w[0]] - scores[w[1]]).abs() <= EPS)
        .map(|w| {
            format!(
                "{} and {} tie at score {:.6}; ordered by id",
                ids[w[0]], ids[w[1]], scores[w[0]]
            )
        })
        .collect();
    let entries = idx
        .iter()
        .enumerate()
        .map(|(r, &i)| RankedAlternative {
            id: ids[i].clone(),
            score: scores[i],
            rank: r + 1,
        })
        .collect();
    Ranking {
        method,
        entries,
        warnings,
    }
}

/// A method that turns an initial rough decision matrix and weighted criteria
/// into a ranking.
pub trait RankingMethod {
    fn kind(&self) -> MethodKind;
    fn rank(&self, x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<Ranking>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Mabac;

impl RankingMethod for Mabac {
    fn kind(&self) -> MethodKind {
        MethodKind::Mabac
    }

    fn rank(&self, x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<Ranking> {
        Ok(scores_and_rank(&mabac(x, criteria)?.distances))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RoughTopsis;

impl RankingMethod for RoughTopsis {
    fn kind(&self) -> MethodKind {
        MethodKind::Topsis
    }

    fn rank(&self, x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<Ranking> {
        Ok(rough_topsis(x, criteria)?.ranking)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RoughVikor {
    /// Weight of the group-utility term.
    pub v: f64,
}

impl Default for RoughVikor {
    fn default() -> Self {
        Self { v: DEFAULT_VIKOR_V }
    }
}

impl RankingMethod for RoughVikor {
    fn kind(&self) -> MethodKind {
        MethodKind::Vikor
    }

    fn rank(&self, x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<Ranking> {
        Ok(rough_vikor(x, criteria, self.v)?.ranking)
    }
}

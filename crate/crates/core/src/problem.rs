use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mabac::{build_initial_matrix, Criterion, RoughDecisionMatrix};
use crate::ranking::{RankingMethod, Ranking};

/// Weighted criteria plus raw expert ratings, indexed expert x alternative x criterion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    criteria: Vec<Criterion>,
    ratings: Vec<Vec<Vec<f64>>>,
}

impl DecisionProblem {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<Criterion>,
        ratings: Vec<Vec<Vec<f64>>>,
    ) -> Result<Self> {
        if alternatives.is_empty() {
            return Err(Error::Validation("problem has no alternatives".into()));
        }
        if criteria.is_empty() {
            return Err(Error::Validation("problem has no criteria".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = alternatives.iter().find(|a| !seen.insert(a.as_str())) {
            return Err(Error::Validation(format!("duplicate alternative id {dup}")));
        }
        if ratings.is_empty() {
            return Err(Error::Validation("problem has no expert ratings".into()));
        }
        for (e, matrix) in ratings.iter().enumerate() {
            if matrix.len() != alternatives.len() {
                return Err(Error::Validation(format!(
                    "expert {} rating matrix has {} rows, expected {}",
                    e + 1,
                    matrix.len(),
                    alternatives.len()
                )));
            }
            for (i, row) in matrix.iter().enumerate() {
                if row.len() != criteria.len() {
                    return Err(Error::Validation(format!(
                        "expert {} rating matrix row {} ({}) has {} entries, expected {}",
                        e + 1,
                        i + 1,
                        alternatives[i],
                        row.len(),
                        criteria.len()
                    )));
                }
                if let Some(v) = row.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
                    return Err(Error::Validation(format!(
                        "expert {} rating for {} is not positive: {v}",
                        e + 1,
                        alternatives[i]
                    )));
                }
            }
        }
        Ok(Self {
            alternatives,
            criteria,
            ratings,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    pub fn ratings(&self) -> &[Vec<Vec<f64>>] {
        &self.ratings
    }

    pub fn experts(&self) -> usize {
        self.ratings.len()
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.alternatives
            .iter()
            .position(|a| a == id)
            .ok_or_else(|| Error::Domain(format!("unknown alternative {id}")))
    }

    /// Ratings of one alternative, expert x criterion.
    pub fn ratings_of(&self, i: usize) -> Vec<Vec<f64>> {
        self.ratings.iter().map(|m| m[i].clone()).collect()
    }

    pub fn initial_matrix(&self) -> Result<RoughDecisionMatrix> {
        build_initial_matrix(&self.alternatives, &self.ratings)
    }

    pub fn rank(&self, method: &dyn RankingMethod) -> Result<Ranking> {
        method.rank(&self.initial_matrix()?, &self.criteria)
    }

    /// The same problem restricted to `ids` (in that order). Criteria and
    /// their weights are carried over unchanged.
    pub fn subproblem(&self, ids: &[String]) -> Result<Self> {
        let idx = ids
            .iter()
            .map(|id| self.index_of(id))
            .collect::<Result<Vec<_>>>()?;
        let ratings = self
            .ratings
            .iter()
            .map(|m| idx.iter().map(|&i| m[i].clone()).collect())
            .collect();
        Self::new(ids.to_vec(), self.criteria.clone(), ratings)
    }

    /// Replaces the ratings of alternative `i` (expert x criterion).
    pub fn with_ratings(&self, i: usize, ratings: &[Vec<f64>]) -> Result<Self> {
        if ratings.len() != self.experts() {
            return Err(Error::Validation(format!(
                "replacement for {} has {} expert rows, expected {}",
                self.alternatives[i],
                ratings.len(),
                self.experts()
            )));
        }
        let mut next = self.ratings.clone();
        for (m, row) in next.iter_mut().zip(ratings) {
            m[i] = row.clone();
        }
        Self::new(self.alternatives.clone(), self.criteria.clone(), next)
    }
}

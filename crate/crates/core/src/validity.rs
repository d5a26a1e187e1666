//! Ranking-validity checks that work with any [`RankingMethod`]:
//!
//! 1. replacing a non-optimal alternative by a worse one keeps the best alternative;
//! 2. rankings of overlapping subproblems are mutually consistent and acyclic;
//! 3. merging subproblem rankings reproduces the original ranking.
//!
//! Subproblems are always ranked with the original criteria weights.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mabac::Direction;
use crate::problem::DecisionProblem;
use crate::ranking::{MethodKind, Ranking, RankingMethod};
use crate::rough::EPS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Passed,
    Failed,
    /// Not enough comparisons to decide.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelledOrder {
    pub label: String,
    pub order: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Evidence {
    /// Original ranking, best first.
    pub original: Vec<String>,
    /// Perturbed ranking (test 1), subproblem rankings (tests 2, 3) and the merged order (test 3).
    pub rankings: Vec<LabelledOrder>,
    /// The comparison that decided the outcome.
    pub comparison: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub substitution: Vec<SubstitutionEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conflicts: Vec<String>,
    /// Pairs whose order the subproblems did not determine.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unresolved: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub criterion: u8,
    pub method: MethodKind,
    pub outcome: Outcome,
    pub evidence: Evidence,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ValidityReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Passed
    }
}

/// Replacement for one alternative: either a copy of another alternative's
/// original ratings or explicit ratings (expert x criterion).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubstitutionEntry {
    pub alternative: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub copy_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratings: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Substitution {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub substitutions: Vec<SubstitutionEntry>,
    /// Downgrade the "replacement is weakly worse" precondition to a warning.
    #[serde(default)]
    pub allow_non_dominated: bool,
}

impl Substitution {
    /// Applies all entries simultaneously; `copy_of` reads the unmodified problem.
    pub fn apply(&self, problem: &DecisionProblem) -> Result<DecisionProblem> {
        let mut next = problem.clone();
        for entry in &self.substitutions {
            let i = problem.index_of(&entry.alternative)?;
            let ratings = match (&entry.copy_of, &entry.ratings) {
                (Some(src), None) => problem.ratings_of(problem.index_of(src)?),
                (None, Some(r)) => r.clone(),
                _ => {
                    return Err(Error::Validation(format!(
                        "substitution for {} needs exactly one of copy_of or ratings",
                        entry.alternative
                    )))
                }
            };
            next = next.with_ratings(i, &ratings)?;
        }
        Ok(next)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    pub subsets: Vec<Vec<String>>,
}

fn order_of(r: &Ranking) -> Vec<String> {
    r.entries.iter().map(|e| e.id.clone()).collect()
}

/// Test 1.
pub fn test_rank_stability(
    problem: &DecisionProblem,
    method: &dyn RankingMethod,
    substitution: &Substitution,
) -> Result<ValidityReport> {
    let original = problem.rank(method)?;
    let best = original.entries[0].id.clone();
    let mut warnings = original.warnings.clone();

    let mut targets = BTreeSet::new();
    for e in &substitution.substitutions {
        if e.alternative == best {
            return Err(Error::Precondition(format!(
                "substitution targets {best}, the current best alternative"
            )));
        }
        if !targets.insert(e.alternative.as_str()) {
            return Err(Error::Precondition(format!(
                "{} is substituted more than once",
                e.alternative
            )));
        }
    }

    let perturbed_problem = substitution.apply(problem)?;
    let before = problem.initial_matrix()?;
    let after = perturbed_problem.initial_matrix()?;
    for e in &substitution.substitutions {
        let i = problem.index_of(&e.alternative)?;
        for (j, c) in problem.criteria().iter().enumerate() {
            let (old, new) = (before.get(i, j), after.get(i, j));
            let worse = match c.direction {
                Direction::Benefit => new.lower() <= old.lower() + EPS && new.upper() <= old.upper() + EPS,
                Direction::Cost => new.lower() + EPS >= old.lower() && new.upper() + EPS >= old.upper(),
            };
            if !worse {
                let msg = format!(
                    "replacement for {} is not weakly worse on {}: {new} vs {old}",
                    e.alternative, c.id
                );
                if substitution.allow_non_dominated {
                    warnings.push(msg);
                } else {
                    return Err(Error::Precondition(msg));
                }
            }
        }
    }

    let perturbed = perturbed_problem.rank(method)?;
    warnings.extend(perturbed.warnings.iter().cloned());
    let new_best = perturbed.entries[0].id.clone();
    let outcome = if new_best == best {
        Outcome::Passed
    } else {
        Outcome::Failed
    };
    Ok(ValidityReport {
        criterion: 1,
        method: method.kind(),
        outcome,
        evidence: Evidence {
            original: order_of(&original),
            rankings: vec![LabelledOrder {
                label: "perturbed".into(),
                order: order_of(&perturbed),
            }],
            comparison: format!("best before: {best}; best after: {new_best}"),
            substitution: substitution.substitutions.clone(),
            ..Default::default()
        },
        warnings,
    })
}

struct SubRankings {
    orders: Vec<LabelledOrder>,
    warnings: Vec<String>,
}

fn rank_subsets(
    problem: &DecisionProblem,
    method: &dyn RankingMethod,
    partition: &Partition,
) -> Result<SubRankings> {
    if partition.subsets.is_empty() {
        return Err(Error::Domain("partition has no subsets".into()));
    }
    let mut orders = Vec::new();
    let mut warnings = Vec::new();
    for (s, subset) in partition.subsets.iter().enumerate() {
        if subset.len() < 2 {
            return Err(Error::Domain(format!(
                "subset {} has {} alternative(s); at least 2 are required",
                s + 1,
                subset.len()
            )));
        }
        let sub = problem.subproblem(subset)?;
        debug_assert_eq!(sub.criteria(), problem.criteria());
        let ranking = sub.rank(method)?;
        warnings.extend(ranking.warnings.iter().cloned());
        orders.push(LabelledOrder {
            label: format!("subset {}", s + 1),
            order: order_of(&ranking),
        });
    }
    Ok(SubRankings { orders, warnings })
}

/// Directed "better than" graph over alternative indices.
struct OrderGraph {
    n: usize,
    better: Vec<BTreeSet<usize>>,
}

impl OrderGraph {
    fn from_orders(problem: &DecisionProblem, orders: &[LabelledOrder]) -> Result<Self> {
        let n = problem.alternatives().len();
        let mut better = vec![BTreeSet::new(); n];
        for o in orders {
            let idx = o
                .order
                .iter()
                .map(|id| problem.index_of(id))
                .collect::<Result<Vec<_>>>()?;
            for (a, &i) in idx.iter().enumerate() {
                for &j in &idx[a + 1..] {
                    better[i].insert(j);
                }
            }
        }
        Ok(Self { n, better })
    }

    /// Pairs ordered both ways by different subproblems.
    fn contradictions(&self, ids: &[String]) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for &j in &self.better[i] {
                if i < j && self.better[j].contains(&i) {
                    out.push(format!("{} and {} are ordered both ways", ids[i], ids[j]));
                }
            }
        }
        out
    }

    /// Transitive closure as a reachability matrix.
    fn closure(&self) -> Vec<Vec<bool>> {
        let mut reach = vec![vec![false; self.n]; self.n];
        for (i, row) in reach.iter_mut().enumerate() {
            for &j in &self.better[i] {
                row[j] = true;
            }
        }
        for k in 0..self.n {
            for i in 0..self.n {
                if reach[i][k] {
                    let via = reach[k].clone();
                    for (cell, step) in reach[i].iter_mut().zip(via) {
                        *cell |= step;
                    }
                }
            }
        }
        reach
    }

    fn cyclic_members(&self, ids: &[String]) -> Vec<String> {
        let reach = self.closure();
        (0..self.n)
            .filter(|&i| reach[i][i])
            .map(|i| ids[i].clone())
            .collect()
    }

    /// Topological order, choosing among available nodes by `priority`
    /// (lower first). `None` if the graph has a cycle.
    fn topo_order(&self, nodes: &[usize], priority: &[usize]) -> Option<Vec<usize>> {
        let in_set: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut indegree = vec![0usize; self.n];
        for &i in nodes {
            for &j in &self.better[i] {
                if in_set.contains(&j) {
                    indegree[j] += 1;
                }
            }
        }
        let mut ready: BTreeMap<usize, usize> = nodes
            .iter()
            .filter(|&&i| indegree[i] == 0)
            .map(|&i| (priority[i], i))
            .collect();
        let mut out = Vec::with_capacity(nodes.len());
        while let Some((_, i)) = ready.pop_first() {
            out.push(i);
            for &j in &self.better[i] {
                if in_set.contains(&j) {
                    indegree[j] -= 1;
                    if indegree[j] == 0 {
                        ready.insert(priority[j], j);
                    }
                }
            }
        }
        (out.len() == nodes.len()).then_some(out)
    }

    /// Whether the comparisons (ignoring direction) link every node in `nodes`.
    fn connected(&self, nodes: &[usize]) -> bool {
        let Some(&start) = nodes.first() else {
            return true;
        };
        let mut adj = vec![BTreeSet::new(); self.n];
        for i in 0..self.n {
            for &j in &self.better[i] {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if seen.insert(j) {
                    stack.push(j);
                }
            }
        }
        nodes.iter().all(|i| seen.contains(i))
    }
}

/// Test 2.
pub fn test_transitivity(
    problem: &DecisionProblem,
    method: &dyn RankingMethod,
    partition: &Partition,
) -> Result<ValidityReport> {
    let original = problem.rank(method)?;
    let sub = rank_subsets(problem, method, partition)?;
    let graph = OrderGraph::from_orders(problem, &sub.orders)?;
    let ids = problem.alternatives();

    let mut conflicts = graph.contradictions(ids);
    let cyclic = graph.cyclic_members(ids);
    if conflicts.is_empty() && !cyclic.is_empty() {
        conflicts.push(format!("cycle through {}", cyclic.join(", ")));
    }
    let outcome = if conflicts.is_empty() {
        Outcome::Passed
    } else {
        Outcome::Failed
    };
    let comparison = if conflicts.is_empty() {
        "shared pairs agree and the combined pairwise order is acyclic".to_string()
    } else {
        format!("{} inconsistency(ies) in the combined pairwise order", conflicts.len())
    };
    let mut warnings = original.warnings.clone();
    warnings.extend(sub.warnings);
    Ok(ValidityReport {
        criterion: 2,
        method: method.kind(),
        outcome,
        evidence: Evidence {
            original: order_of(&original),
            rankings: sub.orders,
            comparison,
            conflicts,
            ..Default::default()
        },
        warnings,
    })
}

/// Test 3. Subproblem orders are merged topologically; pairs left undecided by
/// the subproblems keep their original relative order and are listed as
/// unresolved. A cycle fails the test; subsets that share no alternatives
/// leave the merge inconclusive.
pub fn test_composition(
    problem: &DecisionProblem,
    method: &dyn RankingMethod,
    partition: &Partition,
) -> Result<ValidityReport> {
    let ids = problem.alternatives();
    let covered: BTreeSet<&str> = partition.subsets.iter().flatten().map(String::as_str).collect();
    let missing: Vec<&str> = ids
        .iter()
        .map(String::as_str)
        .filter(|a| !covered.contains(a))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Domain(format!(
            "partition does not cover {}",
            missing.join(", ")
        )));
    }

    let original = problem.rank(method)?;
    let sub = rank_subsets(problem, method, partition)?;
    let graph = OrderGraph::from_orders(problem, &sub.orders)?;
    let original_order = order_of(&original);
    let mut priority = vec![0; ids.len()];
    for (pos, id) in original_order.iter().enumerate() {
        priority[problem.index_of(id)?] = pos;
    }
    let nodes: Vec<usize> = (0..ids.len()).collect();
    let mut warnings = original.warnings.clone();
    warnings.extend(sub.warnings);

    let mut evidence = Evidence {
        original: original_order.clone(),
        rankings: sub.orders,
        ..Default::default()
    };

    let outcome = match graph.topo_order(&nodes, &priority) {
        None => {
            evidence.conflicts = graph.contradictions(ids);
            if evidence.conflicts.is_empty() {
                evidence.conflicts.push(format!(
                    "cycle through {}",
                    graph.cyclic_members(ids).join(", ")
                ));
            }
            evidence.comparison = "subproblem orders cannot be merged".into();
            Outcome::Failed
        }
        Some(_) if !graph.connected(&nodes) => {
            evidence.comparison = "subproblems share no comparisons linking all alternatives".into();
            Outcome::Inconclusive
        }
        Some(merged) => {
            let reach = graph.closure();
            for (a, &i) in merged.iter().enumerate() {
                for &j in &merged[a + 1..] {
                    if !reach[i][j] && !reach[j][i] {
                        evidence.unresolved.push((ids[i].clone(), ids[j].clone()));
                    }
                }
            }
            let merged: Vec<String> = merged.into_iter().map(|i| ids[i].clone()).collect();
            let same = merged == original_order;
            evidence.comparison = if same {
                "merged order equals the original ranking".into()
            } else {
                "merged order differs from the original ranking".into()
            };
            evidence.rankings.push(LabelledOrder {
                label: "merged".into(),
                order: merged,
            });
            if same {
                Outcome::Passed
            } else {
                Outcome::Failed
            }
        }
    };

    Ok(ValidityReport {
        criterion: 3,
        method: method.kind(),
        outcome,
        evidence,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mabac::Criterion;
    use crate::ranking::Mabac;
    use crate::rough::RoughNumber;

    fn ids(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// Alternative `Ai` is rated `i` on every criterion, so A1 is worst.
    fn ladder(m: usize) -> DecisionProblem {
        let c = vec![
            Criterion::new("C1", Direction::Benefit, RoughNumber::new(0.5, 0.7).unwrap()).unwrap(),
            Criterion::new("C2", Direction::Benefit, RoughNumber::new(0.3, 0.4).unwrap()).unwrap(),
        ];
        let alts = (1..=m).map(|i| format!("A{i}")).collect();
        let ratings = vec![
            (1..=m).map(|i| vec![i as f64, i as f64 + 0.5]).collect(),
            (1..=m).map(|i| vec![i as f64 + 0.5, i as f64]).collect(),
        ];
        DecisionProblem::new(alts, c, ratings).unwrap()
    }

    #[test]
    fn identity_substitution_passes() {
        let p = ladder(4);
        let s = Substitution {
            description: None,
            substitutions: vec![SubstitutionEntry {
                alternative: "A2".into(),
                copy_of: Some("A2".into()),
                ratings: None,
            }],
            allow_non_dominated: false,
        };
        let r = test_rank_stability(&p, &Mabac, &s).unwrap();
        assert!(r.passed());
        assert_eq!(r.evidence.original, r.evidence.rankings[0].order);
    }

    #[test]
    fn substituting_best_is_a_precondition_error() {
        let p = ladder(3);
        let s = Substitution {
            description: None,
            substitutions: vec![SubstitutionEntry {
                alternative: "A3".into(),
                copy_of: Some("A1".into()),
                ratings: None,
            }],
            allow_non_dominated: false,
        };
        assert!(matches!(test_rank_stability(&p, &Mabac, &s), Err(Error::Precondition(_))));
    }

    #[test]
    fn better_replacement_is_rejected_unless_allowed() {
        let p = ladder(3);
        let mut s = Substitution {
            description: None,
            substitutions: vec![SubstitutionEntry {
                alternative: "A1".into(),
                copy_of: Some("A2".into()),
                ratings: None,
            }],
            allow_non_dominated: false,
        };
        assert!(matches!(test_rank_stability(&p, &Mabac, &s), Err(Error::Precondition(_))));
        s.allow_non_dominated = true;
        let r = test_rank_stability(&p, &Mabac, &s).unwrap();
        assert!(!r.warnings.is_empty());
    }

    #[test]
    fn weaker_worst_alternative_passes() {
        let p = ladder(3);
        let s = Substitution {
            description: None,
            substitutions: vec![SubstitutionEntry {
                alternative: "A1".into(),
                copy_of: None,
                ratings: Some(vec![vec![0.5, 0.5], vec![0.5, 0.5]]),
            }],
            allow_non_dominated: false,
        };
        let r = test_rank_stability(&p, &Mabac, &s).unwrap();
        assert!(r.passed());
        assert_eq!(r.evidence.rankings[0].order, ids(&["A3", "A2", "A1"]));
    }

    #[test]
    fn pair_partition_is_transitive() {
        let p = ladder(4);
        let part = Partition {
            subsets: vec![ids(&["A1", "A2"]), ids(&["A2", "A3"]), ids(&["A3", "A4"])],
        };
        let r = test_transitivity(&p, &Mabac, &part).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = test_composition(&p, &Mabac, &part).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.evidence.unresolved.is_empty());
    }

    #[test]
    fn singleton_subset_is_a_domain_error() {
        let p = ladder(3);
        let part = Partition {
            subsets: vec![ids(&["A1"]), ids(&["A2", "A3"])],
        };
        assert!(matches!(test_transitivity(&p, &Mabac, &part), Err(Error::Domain(_))));
    }

    #[test]
    fn whole_set_composes() {
        let p = ladder(3);
        let part = Partition {
            subsets: vec![ids(&["A1", "A2", "A3"])],
        };
        assert!(test_composition(&p, &Mabac, &part).unwrap().passed());
    }

    #[test]
    fn incomplete_cover_and_disconnected_subsets() {
        let p = ladder(4);
        let part = Partition {
            subsets: vec![ids(&["A1", "A2"]), ids(&["A3", "A2"])],
        };
        assert!(matches!(test_composition(&p, &Mabac, &part), Err(Error::Domain(_))));
        let part = Partition {
            subsets: vec![ids(&["A1", "A2"]), ids(&["A3", "A4"])],
        };
        let r = test_composition(&p, &Mabac, &part).unwrap();
        assert_eq!(r.outcome, Outcome::Inconclusive);
    }

    #[test]
    fn cycles_are_detected() {
        let p = ladder(3);
        let orders = vec![
            LabelledOrder { label: "a".into(), order: ids(&["A1", "A2"]) },
            LabelledOrder { label: "b".into(), order: ids(&["A2", "A3"]) },
            LabelledOrder { label: "c".into(), order: ids(&["A3", "A1"]) },
        ];
        let g = OrderGraph::from_orders(&p, &orders).unwrap();
        assert!(g.contradictions(p.alternatives()).is_empty());
        assert_eq!(g.cyclic_members(p.alternatives()).len(), 3);
        assert!(g.topo_order(&[0, 1, 2], &[0, 1, 2]).is_none());
    }
}

//! Rough TOPSIS and rough VIKOR, evaluated on the same normalized and weighted
//! matrix as MABAC so that rankings are directly comparable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mabac::{normalize, weight_matrix, Criterion, Direction, RoughDecisionMatrix};
use crate::ranking::{rank_by_score, MethodKind, Ranking};
use crate::rough::{interval_distance, RoughNumber};

pub const DEFAULT_VIKOR_V: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopsisDetails {
    pub ideal: Vec<RoughNumber>,
    pub anti_ideal: Vec<RoughNumber>,
    pub d_plus: Vec<f64>,
    pub d_minus: Vec<f64>,
    /// Relative closeness, larger is better.
    pub closeness: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VikorDetails {
    pub v: f64,
    pub s: Vec<f64>,
    pub r: Vec<f64>,
    /// Smaller is better.
    pub q: Vec<f64>,
    pub acceptable_advantage: bool,
    pub acceptable_stability: bool,
    /// Compromise solution set under the two conditions.
    pub compromise: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BaselineDetails {
    Topsis(TopsisDetails),
    Vikor(VikorDetails),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineResult {
    pub ranking: Ranking,
    pub details: BaselineDetails,
}

fn weighted(x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<RoughDecisionMatrix> {
    weight_matrix(&normalize(x, criteria)?, criteria)
}

pub fn rough_topsis(x: &RoughDecisionMatrix, criteria: &[Criterion]) -> Result<BaselineResult> {
    let v = weighted(x, criteria)?;
    let (ideal, anti_ideal): (Vec<_>, Vec<_>) = criteria
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let lo_max = v.column(j).map(|r| r.lower()).fold(f64::MIN, f64::max);
            let up_max = v.column(j).map(|r| r.upper()).fold(f64::MIN, f64::max);
            let lo_min = v.column(j).map(|r| r.lower()).fold(f64::MAX, f64::min);
            let up_min = v.column(j).map(|r| r.upper()).fold(f64::MAX, f64::min);
            let best = RoughNumber::from_ordered(lo_max, up_max);
            let worst = RoughNumber::from_ordered(lo_min, up_min);
            match c.direction {
                Direction::Benefit => (best, worst),
                Direction::Cost => (worst, best),
            }
        })
        .unzip();
    let dist = |row: &[RoughNumber], target: &[RoughNumber]| {
        row.iter()
            .zip(target)
            .map(|(a, b)| interval_distance(a, b).powi(2))
            .sum::<f64>()
            .sqrt()
    };
    let d_plus: Vec<f64> = v.rows().iter().map(|r| dist(r, &ideal)).collect();
    let d_minus: Vec<f64> = v.rows().iter().map(|r| dist(r, &anti_ideal)).collect();
    let closeness: Vec<f64> = d_plus
        .iter()
        .zip(&d_minus)
        .map(|(p, m)| if p + m == 0.0 { 1.0 } else { m / (p + m) })
        .collect();
    let ranking = rank_by_score(MethodKind::Topsis, v.alternatives(), &closeness, true);
    Ok(BaselineResult {
        ranking,
        details: BaselineDetails::Topsis(TopsisDetails {
            ideal,
            anti_ideal,
            d_plus,
            d_minus,
            closeness,
        }),
    })
}

fn span_ratio(x: f64, best: f64, worst: f64) -> f64 {
    if worst - best == 0.0 {
        0.0
    } else {
        (x - best) / (worst - best)
    }
}

pub fn rough_vikor(x: &RoughDecisionMatrix, criteria: &[Criterion], v: f64) -> Result<BaselineResult> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::Config(format!("VIKOR weight v = {v} is outside [0, 1]")));
    }
    let w = weighted(x, criteria)?;
    let m = w.m();
    let mids: Vec<Vec<f64>> = w
        .rows()
        .iter()
        .map(|r| r.iter().map(RoughNumber::midpoint).collect())
        .collect();
    let best: Vec<f64> = criteria
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let col = mids.iter().map(|r| r[j]);
            match c.direction {
                Direction::Benefit => col.fold(f64::MIN, f64::max),
                Direction::Cost => col.fold(f64::MAX, f64::min),
            }
        })
        .collect();
    let gaps: Vec<Vec<f64>> = mids
        .iter()
        .map(|r| r.iter().zip(&best).map(|(f, b)| (b - f).abs()).collect())
        .collect();
    let s: Vec<f64> = gaps.iter().map(|g| g.iter().sum()).collect();
    let r: Vec<f64> = gaps.iter().map(|g| g.iter().cloned().fold(0.0, f64::max)).collect();
    let min = |v: &[f64]| v.iter().cloned().fold(f64::MAX, f64::min);
    let max = |v: &[f64]| v.iter().cloned().fold(f64::MIN, f64::max);
    let (s_best, s_worst, r_best, r_worst) = (min(&s), max(&s), min(&r), max(&r));
    let q: Vec<f64> = s
        .iter()
        .zip(&r)
        .map(|(si, ri)| v * span_ratio(*si, s_best, s_worst) + (1.0 - v) * span_ratio(*ri, r_best, r_worst))
        .collect();
    let ids = w.alternatives();
    let ranking = rank_by_score(MethodKind::Vikor, ids, &q, false);

    let index = |id: &str| ids.iter().position(|a| a == id).expect("ranked id");
    let order: Vec<usize> = ranking.entries.iter().map(|e| index(&e.id)).collect();
    let dq = if m > 1 { 1.0 / (m as f64 - 1.0) } else { 0.0 };
    let first = order[0];
    let acceptable_advantage = m < 2 || q[order[1]] - q[first] >= dq;
    let acceptable_stability = s[first] <= s_best || r[first] <= r_best;
    let compromise = if !acceptable_advantage {
        order
            .iter()
            .take_while(|&&i| q[i] - q[first] < dq)
            .map(|&i| ids[i].clone())
            .collect()
    } else if !acceptable_stability {
        order.iter().take(2).map(|&i| ids[i].clone()).collect()
    } else {
        vec![ids[first].clone()]
    };

    Ok(BaselineResult {
        ranking,
        details: BaselineDetails::Vikor(VikorDetails {
            v,
            s,
            r,
            q,
            acceptable_advantage,
            acceptable_stability,
            compromise,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mabac::Stage;

    fn rn(l: f64, u: f64) -> RoughNumber {
        RoughNumber::new(l, u).unwrap()
    }

    fn problem(dirs: &[Direction]) -> (RoughDecisionMatrix, Vec<Criterion>) {
        let x = RoughDecisionMatrix::new(
            Stage::Initial,
            vec!["A1".into(), "A2".into(), "A3".into()],
            vec![
                vec![rn(7.0, 8.0), rn(1.0, 2.0)],
                vec![rn(5.0, 6.0), rn(3.0, 4.0)],
                vec![rn(3.0, 4.0), rn(5.0, 6.0)],
            ],
        )
        .unwrap();
        let c = dirs
            .iter()
            .enumerate()
            .map(|(j, d)| Criterion::new(format!("C{}", j + 1), *d, rn(0.4, 0.6)).unwrap())
            .collect();
        (x, c)
    }

    #[test]
    fn dominant_alternative_wins_everywhere() {
        let (x, c) = problem(&[Direction::Benefit, Direction::Cost]);
        let t = rough_topsis(&x, &c).unwrap();
        assert_eq!(t.ranking.order(), vec!["A1", "A2", "A3"]);
        let v = rough_vikor(&x, &c, DEFAULT_VIKOR_V).unwrap();
        assert_eq!(v.ranking.order(), vec!["A1", "A2", "A3"]);
        let BaselineDetails::Vikor(d) = v.details else { panic!() };
        assert_eq!(d.q[0], 0.0);
        assert_eq!(d.q[2], 1.0);
        assert!(d.acceptable_advantage && d.acceptable_stability);
        assert_eq!(d.compromise, vec!["A1"]);
    }

    #[test]
    fn topsis_closeness_in_unit_interval() {
        let (x, c) = problem(&[Direction::Benefit, Direction::Benefit]);
        let t = rough_topsis(&x, &c).unwrap();
        let BaselineDetails::Topsis(d) = t.details else { panic!() };
        assert!(d.closeness.iter().all(|c| (0.0..=1.0).contains(c)));
    }

    #[test]
    fn vikor_rejects_bad_v() {
        let (x, c) = problem(&[Direction::Benefit, Direction::Benefit]);
        assert!(matches!(rough_vikor(&x, &c, 1.5), Err(Error::Config(_))));
    }
}

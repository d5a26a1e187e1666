//! Synthetic projects for benchmarking the pipeline at different sizes.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rough_mcdm::project::{AlternativeSpec, Cell, CriterionSpec, MatrixSource};
use rough_mcdm::{Direction, PairwiseMatrix, ProjectFile};

fn inline(rows: Vec<Vec<f64>>) -> MatrixSource {
    MatrixSource::Inline(
        rows.into_iter()
            .map(|r| r.into_iter().map(|v| Some(Cell::Number(v))).collect())
            .collect(),
    )
}

/// `experts` experts, `m` alternatives, `n` benefit criteria.
///
/// Pairwise matrices are built from random priority vectors, so they are
/// fully consistent and pass the strict CR gate. Ratings are drawn from 1..=9.
pub fn synthetic_project(experts: usize, m: usize, n: usize, seed: u64) -> ProjectFile {
    let mut rng = StdRng::seed_from_u64(seed);
    let pairwise = (0..experts)
        .map(|_| {
            let w: Vec<f64> = (0..n).map(|_| rng.random_range(1.0..9.0)).collect();
            inline(PairwiseMatrix::from_weights(&w).expect("positive weights").rows())
        })
        .collect();
    let ratings = (0..experts)
        .map(|_| {
            inline(
                (0..m)
                    .map(|_| (0..n).map(|_| rng.random_range(1..=9) as f64).collect())
                    .collect(),
            )
        })
        .collect();
    ProjectFile {
        name: Some(format!("synthetic {experts}x{m}x{n}")),
        notes: Vec::new(),
        experts,
        criteria: (1..=n)
            .map(|j| CriterionSpec {
                id: format!("C{j}"),
                name: None,
                direction: Direction::Benefit,
                group: None,
            })
            .collect(),
        alternatives: (1..=m)
            .map(|i| AlternativeSpec {
                id: format!("A{i}"),
                name: None,
            })
            .collect(),
        linguistic_scale: rough_mcdm::project::default_linguistic_scale(),
        pairwise_scale: None,
        pairwise_matrices: pairwise,
        rating_matrices: ratings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rough_mcdm::{run, RunOptions};

    #[test]
    fn synthetic_projects_run() {
        let p = synthetic_project(4, 12, 6, 7);
        let r = run(&p, &RunOptions::default()).unwrap();
        assert_eq!(r.ranking.entries.len(), 12);
        assert!(r.consistency.iter().all(|c| c.report.cr.abs() < 1e-6));
    }

    #[test]
    fn same_seed_same_project() {
        assert_eq!(synthetic_project(2, 3, 3, 1), synthetic_project(2, 3, 3, 1));
    }
}

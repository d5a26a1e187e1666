//! Group multi-criteria decision making with rough numbers.
//!
//! Expert judgments are turned into rough intervals, criteria weights come
//! from rough AHP, and alternatives are ranked by rough MABAC. Rough TOPSIS
//! and rough VIKOR are available for comparison, together with three
//! ranking-validity checks.
//!
//! ```
//! use rough_mcdm::{case_study, run, RunOptions};
//!
//! let project = case_study();
//! let report = run(&project, &RunOptions::default()).unwrap();
//! assert_eq!(report.ranking.order()[0], "A2");
//! ```

pub mod ahp;
pub mod baselines;
pub mod error;
pub mod mabac;
pub mod problem;
pub mod project;
pub mod ranking;
pub mod report;
pub mod rough;
pub mod validity;

use std::path::Path;

pub use ahp::{
    aggregate_group, consistency_ratio, consistency_report, max_eigenvalue, random_index, rough_weights,
    ConsistencyGate, ConsistencyReport, PairwiseMatrix, RoughGroupMatrix, RoughWeightVector,
};
pub use baselines::{rough_topsis, rough_vikor, BaselineDetails, BaselineResult, DEFAULT_VIKOR_V};
pub use error::{Error, Result};
pub use mabac::{
    border_approximation_area, build_initial_matrix, classify_areas, distance_matrix, mabac, normalize,
    scores_and_rank, weight_matrix, Area, AreaClassification, BorderApproximationArea, Criterion, Direction,
    DistanceMatrix, MabacPipeline, RoughDecisionMatrix, Stage,
};
pub use problem::DecisionProblem;
pub use project::{load_json, load_project, ProjectFile};
pub use ranking::{Mabac, MethodKind, RankedAlternative, Ranking, RankingMethod, RoughTopsis, RoughVikor};
pub use report::{
    derive_weights, decision_problem, parse_structured, render_report, run, ReportFormat, RunOptions, RunReport,
    ValidityTest,
};
pub use rough::{interval_distance, rough_approximate, rough_average, rough_sequence, JudgmentSequence, RoughNumber, EPS};
pub use validity::{
    test_composition, test_rank_stability, test_transitivity, Outcome, Partition, Substitution, ValidityReport,
};

/// The bundled medical-tourism site selection project (9 cities, 7 criteria, 6 experts).
pub const CASE_STUDY_JSON: &str = include_str!("../data/casestudy.json");
/// Swap used for the rank-stability check on the bundled project.
pub const CASE_STUDY_SUBSTITUTION_JSON: &str = include_str!("../data/casestudy_substitution.json");
/// Two overlapping subsets used for the transitivity and composition checks.
pub const CASE_STUDY_PARTITION_JSON: &str = include_str!("../data/casestudy_partition.json");

pub fn case_study() -> ProjectFile {
    ProjectFile::from_json_str(CASE_STUDY_JSON, "casestudy.json", Path::new("."))
        .expect("bundled project is valid")
}

pub fn case_study_substitution() -> Substitution {
    serde_json::from_str(CASE_STUDY_SUBSTITUTION_JSON).expect("bundled substitution is valid")
}

pub fn case_study_partition() -> Partition {
    serde_json::from_str(CASE_STUDY_PARTITION_JSON).expect("bundled partition is valid")
}

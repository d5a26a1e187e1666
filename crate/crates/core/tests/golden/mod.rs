//! Published values for the bundled case study and small parsing helpers.

#![allow(dead_code)]

pub mod tables;

use rough_mcdm::RoughNumber;

/// Consistency ratios of the six expert matrices.
pub const CONSISTENCY_RATIOS: [f64; 6] = [0.078, 0.090, 0.061, 0.089, 0.0895, 0.0602];

pub const FINAL_ORDER: [&str; 9] = ["A2", "A3", "A1", "A8", "A4", "A9", "A7", "A6", "A5"];

/// Rough TOPSIS and rough VIKOR orders.
pub const BASELINE_ORDER: [&str; 9] = FINAL_ORDER;

pub const PERTURBED_ORDER: [&str; 9] = ["A2", "A5", "A6", "A8", "A4", "A9", "A7", "A1", "A3"];
pub const SUBSET_ORDERS: [&[&str]; 2] = [
    &["A2", "A3", "A1", "A4", "A7", "A6", "A5"],
    &["A3", "A8", "A4", "A9", "A7"],
];
pub const MERGED_ORDER: [&str; 9] = FINAL_ORDER;

/// Per criterion: (upper area, lower area). No alternative sits on the border.
pub const AREAS: [(&str, &[&str], &[&str]); 7] = [
    ("C1", &["A1", "A2", "A3", "A4", "A8"], &["A5", "A6", "A7", "A9"]),
    ("C2", &["A2", "A3", "A5", "A7", "A9"], &["A1", "A4", "A6", "A8"]),
    ("C3", &["A1", "A2", "A3", "A7", "A8"], &["A4", "A5", "A6", "A9"]),
    ("C4", &["A1", "A2", "A3", "A9"], &["A4", "A5", "A6", "A7", "A8"]),
    ("C5", &["A1", "A2", "A3", "A4", "A6", "A7", "A9", "A8"], &["A5"]),
    ("C6", &["A1", "A2", "A6", "A7", "A9"], &["A3", "A4", "A5", "A8"]),
    ("C7", &["A1", "A2", "A3", "A4", "A8"], &["A5", "A6", "A7", "A9"]),
];

/// Worked example values.
pub const G1: [f64; 2] = [1.017, 1.524];
pub const S_A2: f64 = 2.006;
pub const S_A8: f64 = 0.492;
pub const AGGREGATED_C1_C2: [f64; 2] = [4.400, 5.600];
pub const AGGREGATED_C7_C1: [f64; 2] = [0.115, 0.129];

pub fn parse_interval(s: &str) -> RoughNumber {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let (l, u) = inner.split_once(',').expect("interval");
    RoughNumber::new(l.trim().parse().unwrap(), u.trim().parse().unwrap()).unwrap()
}

/// Rows of `label [l,u] [l,u] ...`.
pub fn interval_table(text: &str) -> Vec<(String, Vec<RoughNumber>)> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let mut parts = line.split_whitespace();
            let label = parts.next().unwrap().to_string();
            (label, parts.map(parse_interval).collect())
        })
        .collect()
}

/// Rows of `label x x ...`.
pub fn number_table(text: &str) -> Vec<(String, Vec<f64>)> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let mut parts = line.split_whitespace();
            let label = parts.next().unwrap().to_string();
            (label, parts.map(|x| x.parse().unwrap()).collect())
        })
        .collect()
}

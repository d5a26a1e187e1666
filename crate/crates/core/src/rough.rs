//! Rough numbers: intervals built from the lower and upper approximations of
//! a group of expert judgments, with their ordering, arithmetic and distance.
//!
//! Given a sequence of ratings, every distinct rating is a judgment class.
//! The lower limit of a class is the mean of all ratings not above it and the
//! upper limit is the mean of all ratings not below it. A rating therefore
//! maps to an interval whose width grows with the disagreement in the group.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for endpoint equality.
pub const EPS: f64 = 1e-9;

/// Closed interval `[lower, upper]` with `lower <= upper`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct RoughNumber {
    lower: f64,
    upper: f64,
}

impl RoughNumber {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::Domain(format!(
                "rough number endpoints must be finite, got [{lower}, {upper}]"
            )));
        }
        if lower > upper {
            return Err(Error::Domain(format!(
                "rough number lower limit {lower} exceeds upper limit {upper}"
            )));
        }
        Ok(Self { lower, upper })
    }

    /// Degenerate interval `[value, value]`.
    pub fn crisp(value: f64) -> Self {
        Self {
            lower: value,
            upper: value,
        }
    }

    pub(crate) fn from_ordered(lower: f64, upper: f64) -> Self {
        debug_assert!(lower <= upper, "[{lower}, {upper}]");
        Self { lower, upper }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn midpoint(&self) -> f64 {
        (self.lower + self.upper) / 2.0
    }

    /// Rough boundary interval: `upper - lower`.
    pub fn boundary_width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn is_positive(&self) -> bool {
        self.lower > 0.0
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    pub fn approx_eq(&self, other: &RoughNumber, tol: f64) -> bool {
        (self.lower - other.lower).abs() <= tol && (self.upper - other.upper).abs() <= tol
    }

    /// `[aL*bL, aU*bU]`; both operands must be strictly positive.
    pub fn multiply(self, rhs: RoughNumber) -> Result<RoughNumber> {
        if !self.is_positive() || !rhs.is_positive() {
            return Err(Error::Domain(format!(
                "multiplication needs strictly positive intervals, got {self} and {rhs}"
            )));
        }
        Ok(Self::from_ordered(self.lower * rhs.lower, self.upper * rhs.upper))
    }

    /// `[aL/bU, aU/bL]`; both operands must be strictly positive.
    pub fn divide(self, rhs: RoughNumber) -> Result<RoughNumber> {
        if rhs.contains(0.0) {
            return Err(Error::Domain(format!("division by interval {rhs} containing 0")));
        }
        if !self.is_positive() || !rhs.is_positive() {
            return Err(Error::Domain(format!(
                "division needs strictly positive intervals, got {self} and {rhs}"
            )));
        }
        Ok(Self::from_ordered(self.lower / rhs.upper, self.upper / rhs.lower))
    }

    /// `[mu*L, mu*U]` for `mu > 0`.
    pub fn scale(self, mu: f64) -> Result<RoughNumber> {
        if mu <= 0.0 || !mu.is_finite() {
            return Err(Error::Domain(format!(
                "scale factor must be positive and finite, got {mu}"
            )));
        }
        Ok(Self::from_ordered(mu * self.lower, mu * self.upper))
    }

    /// Interval ranking rule.
    ///
    /// Endpoint dominance decides directly. When one interval strictly nests
    /// the other, the larger midpoint wins, and on equal midpoints the wider
    /// interval ranks lower.
    pub fn compare(&self, other: &RoughNumber) -> Ordering {
        let dl = self.lower - other.lower;
        let du = self.upper - other.upper;
        let eq = |d: f64| d.abs() <= EPS;
        if eq(dl) && eq(du) {
            return Ordering::Equal;
        }
        if du >= -EPS && dl >= -EPS {
            return Ordering::Greater;
        }
        if du <= EPS && dl <= EPS {
            return Ordering::Less;
        }
        // One strictly nests the other.
        let dm = self.midpoint() - other.midpoint();
        if dm.abs() <= EPS {
            if du > 0.0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if dm > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl Add for RoughNumber {
    type Output = RoughNumber;

    fn add(self, rhs: RoughNumber) -> RoughNumber {
        Self::from_ordered(self.lower + rhs.lower, self.upper + rhs.upper)
    }
}

impl Sub for RoughNumber {
    type Output = RoughNumber;

    /// `[aL - bU, aU - bL]`.
    fn sub(self, rhs: RoughNumber) -> RoughNumber {
        Self::from_ordered(self.lower - rhs.upper, self.upper - rhs.lower)
    }
}

impl From<RoughNumber> for [f64; 2] {
    fn from(r: RoughNumber) -> Self {
        [r.lower, r.upper]
    }
}

impl TryFrom<[f64; 2]> for RoughNumber {
    type Error = Error;

    fn try_from([lower, upper]: [f64; 2]) -> Result<Self> {
        RoughNumber::new(lower, upper)
    }
}

impl fmt::Display for RoughNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "[{:.*}, {:.*}]", p, self.lower, p, self.upper),
            None => write!(f, "[{}, {}]", self.lower, self.upper),
        }
    }
}

/// Matched-endpoint Euclidean distance between two intervals.
pub fn interval_distance(v: &RoughNumber, g: &RoughNumber) -> f64 {
    (v.lower - g.lower).hypot(v.upper - g.upper)
}

/// Ratings given by `k` experts to one judgment cell.
#[derive(Debug, Clone, PartialEq)]
pub struct JudgmentSequence(Vec<f64>);

impl JudgmentSequence {
    pub fn new(ratings: Vec<f64>) -> Result<Self> {
        if ratings.is_empty() {
            return Err(Error::Domain("judgment sequence is empty".into()));
        }
        if let Some(bad) = ratings.iter().find(|r| **r <= 0.0 || !r.is_finite()) {
            return Err(Error::Domain(format!(
                "judgments must be strictly positive and finite, got {bad}"
            )));
        }
        Ok(Self(ratings))
    }

    pub fn ratings(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sorted ratings with running sums, so that the limits of any class are
/// one binary search away.
struct Classes {
    sorted: Vec<f64>,
    // prefix[i] = sum of sorted[..i]
    prefix: Vec<f64>,
    // suffix[i] = sum of sorted[i..]
    suffix: Vec<f64>,
}

impl Classes {
    fn new(seq: &JudgmentSequence) -> Self {
        let mut sorted = seq.0.clone();
        sorted.sort_by(f64::total_cmp);
        let k = sorted.len();
        let mut prefix = vec![0.0; k + 1];
        for i in 0..k {
            prefix[i + 1] = prefix[i] + sorted[i];
        }
        let mut suffix = vec![0.0; k + 1];
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1] + sorted[i];
        }
        Self {
            sorted,
            prefix,
            suffix,
        }
    }

    fn limits(&self, value: f64) -> RoughNumber {
        let k = self.sorted.len();
        let not_above = self.sorted.partition_point(|&x| x <= value);
        let below = self.sorted.partition_point(|&x| x < value);
        let lower = self.prefix[not_above] / not_above as f64;
        let upper = self.suffix[below] / (k - below) as f64;
        RoughNumber::from_ordered(lower, upper)
    }
}

/// Rough number of the class `value` within `seq`.
pub fn rough_approximate(seq: &JudgmentSequence, value: f64) -> Result<RoughNumber> {
    if !seq.0.contains(&value) {
        return Err(Error::Domain(format!(
            "{value} is not one of the judgments {:?}",
            seq.0
        )));
    }
    Ok(Classes::new(seq).limits(value))
}

/// Rough number of every element of `seq`, in order.
pub fn rough_sequence(seq: &JudgmentSequence) -> Vec<RoughNumber> {
    let classes = Classes::new(seq);
    seq.0.iter().map(|&v| classes.limits(v)).collect()
}

/// Average rough interval: element-wise mean of the rough sequence.
pub fn rough_average(seq: &JudgmentSequence) -> RoughNumber {
    let rough = rough_sequence(seq);
    let k = rough.len() as f64;
    let lower = rough.iter().map(|r| r.lower).sum::<f64>() / k;
    let upper = rough.iter().map(|r| r.upper).sum::<f64>() / k;
    // Averaging can drift by an ulp for crisp sequences.
    RoughNumber::from_ordered(lower, upper.max(lower))
}

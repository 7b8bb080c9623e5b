//! Triangular fuzzy sets over a partition and crisp-to-label mapping.
//!
//! Each interval `u_j` carries a fuzzy set with grade 1 on its own
//! interval and 0.5 on its immediate neighbors. Fuzzifying a crisp
//! value assigns the label of the interval where its membership is
//! maximal, which under this shape is simply the containing interval.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::TimeSeries;

/// How to treat values outside the universe of discourse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundaryMode {
    /// Reject the value with an error. The default: silent clamping
    /// would corrupt benchmark reproduction.
    #[default]
    Strict,
    /// Assign label 1 below the universe and label `n` above it.
    Clamp,
}

/// Labels assigned to a series, aligned one-to-one with its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzifiedSeries {
    labels: Vec<(i32, usize)>,
    interval_count: usize,
}

impl FuzzifiedSeries {
    pub fn new(labels: Vec<(i32, usize)>, interval_count: usize) -> Result<Self> {
        if let Some(&(year, label)) = labels.iter().find(|&&(_, l)| l < 1 || l > interval_count) {
            return Err(Error::InvalidArgument(format!(
                "label {label} for year {year} outside 1..={interval_count}"
            )));
        }
        Ok(Self {
            labels,
            interval_count,
        })
    }

    /// `(year, label)` pairs in series order.
    pub fn labels(&self) -> &[(i32, usize)] {
        &self.labels
    }

    /// Labels only, in series order.
    pub fn label_sequence(&self) -> Vec<usize> {
        self.labels.iter().map(|&(_, l)| l).collect()
    }

    /// Number of intervals `n` in the partition this was built against.
    pub fn interval_count(&self) -> usize {
        self.interval_count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Maps a crisp value to the 1-based label of its interval.
pub fn fuzzify_value(partition: &Partition, value: f64, mode: BoundaryMode) -> Result<usize> {
    match partition.locate(value) {
        Some(label) => Ok(label),
        None => match mode {
            BoundaryMode::Clamp if value < partition.universe().lo() => Ok(1),
            BoundaryMode::Clamp if value > partition.universe().hi() => Ok(partition.len()),
            _ => Err(Error::OutOfUniverse {
                year: None,
                value,
                lo: partition.universe().lo(),
                hi: partition.universe().hi(),
            }),
        },
    }
}

/// Fuzzifies every point of the series, aborting on the first value the
/// boundary mode rejects.
pub fn fuzzify_series(
    partition: &Partition,
    series: &TimeSeries,
    mode: BoundaryMode,
) -> Result<FuzzifiedSeries> {
    let mut labels = Vec::with_capacity(series.len());
    for &(year, value) in series.points() {
        let label = fuzzify_value(partition, value, mode).map_err(|err| match err {
            Error::OutOfUniverse { value, lo, hi, .. } => Error::OutOfUniverse {
                year: Some(year),
                value,
                lo,
                hi,
            },
            other => other,
        })?;
        labels.push((year, label));
    }
    FuzzifiedSeries::new(labels, partition.len())
}

/// Sparse membership grades of fuzzy set `label`: 1 on its own
/// interval, 0.5 on the neighbors that exist, zero elsewhere (omitted).
pub fn membership_vector(partition: &Partition, label: usize) -> Result<Vec<(usize, f64)>> {
    let n = partition.len();
    if label < 1 || label > n {
        return Err(Error::InvalidArgument(format!(
            "label {label} outside 1..={n}"
        )));
    }
    let mut grades = Vec::with_capacity(3);
    if label > 1 {
        grades.push((label - 1, 0.5));
    }
    grades.push((label, 1.0));
    if label < n {
        grades.push((label + 1, 0.5));
    }
    Ok(grades)
}

//! Crisp time series: ordered `(year, value)` observations.

use crate::error::{Error, Result};

/// A univariate yearly series. Points are stored in ascending year
/// order regardless of construction order; years are unique and values
/// are non-negative finite numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    points: Vec<(i32, f64)>,
}

impl TimeSeries {
    /// Builds a series from `(year, value)` pairs, normalizing to
    /// ascending year order.
    pub fn new(mut points: Vec<(i32, f64)>) -> Result<Self> {
        points.sort_by_key(|&(year, _)| year);
        for window in points.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::DuplicateYear(window[0].0));
            }
        }
        for &(year, value) in &points {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "value {value} for year {year} must be a non-negative finite number"
                )));
            }
        }
        Ok(Self { points })
    }

    /// Number of observations.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// True when the series has no observations.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The observations, ascending by year.
    pub fn points(&self) -> &[(i32, f64)] {
        &self.points
    }

    /// Years in ascending order.
    pub fn years(&self) -> impl Iterator<Item = i32> + '_ {
        self.points.iter().map(|&(year, _)| year)
    }

    /// Values in ascending year order.
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|&(_, value)| value)
    }

    /// Value recorded for `year`, if present.
    pub fn value_for(&self, year: i32) -> Option<f64> {
        self.points
            .binary_search_by_key(&year, |&(y, _)| y)
            .ok()
            .map(|idx| self.points[idx].1)
    }

    /// Smallest and largest value, or `None` for an empty series.
    pub fn value_range(&self) -> Option<(f64, f64)> {
        self.values().fold(None, |acc, v| match acc {
            None => Some((v, v)),
            Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
        })
    }
}

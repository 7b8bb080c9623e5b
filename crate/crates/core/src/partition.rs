//! Universe of discourse and its two-stage interval partition.
//!
//! The universe is first split into `m` equal base intervals, each base
//! interval is then refined into a configured number of equal-width
//! subintervals. Bounds are always computed at full precision from the
//! universe, never reconstructed from rounded prints.

use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// The closed interval assumed to contain every series value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Universe {
    lo: f64,
    hi: f64,
}

impl Universe {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::InvalidArgument(format!(
                "universe bounds must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// True when `value` lies inside the closed interval.
    pub fn contains(&self, value: f64) -> bool {
        value >= self.lo && value <= self.hi
    }
}

/// Splits the universe into `m` contiguous intervals of equal width.
/// The first interval starts at `universe.lo` and the last ends at
/// `universe.hi` exactly.
pub fn build_base_partition(universe: &Universe, m: usize) -> Result<Vec<(f64, f64)>> {
    let bounds = equal_bounds(universe.lo, universe.hi, m)?;
    Ok(bounds.windows(2).map(|w| (w[0], w[1])).collect())
}

/// `count + 1` equally spaced bounds over `[lo, hi]`, endpoints exact.
fn equal_bounds(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "interval count must be at least 1".into(),
        ));
    }
    let width = (hi - lo) / count as f64;
    let mut bounds: Vec<f64> = (0..count).map(|i| lo + i as f64 * width).collect();
    bounds.push(hi);
    Ok(bounds)
}

/// Counts the observations falling in each interval. Boundary values
/// belong to the higher-indexed interval (lower-inclusive convention);
/// the final interval is closed above.
pub fn count_frequencies(series: &TimeSeries, intervals: &[(f64, f64)]) -> Result<Vec<usize>> {
    if intervals.is_empty() {
        return Err(Error::InvalidArgument("no intervals to count into".into()));
    }
    let last = intervals.len() - 1;
    let mut counts = vec![0usize; intervals.len()];
    for &(year, value) in series.points() {
        let slot = intervals
            .iter()
            .enumerate()
            .position(|(i, &(lo, hi))| value >= lo && (value < hi || (i == last && value <= hi)));
        match slot {
            Some(i) => counts[i] += 1,
            None => {
                return Err(Error::OutOfUniverse {
                    year: Some(year),
                    value,
                    lo: intervals[0].0,
                    hi: intervals[last].1,
                })
            }
        }
    }
    Ok(counts)
}

/// The first-stage partition: equal base intervals annotated with the
/// observation count per interval and the number of subintervals each
/// will be refined into.
#[derive(Debug, Clone, PartialEq)]
pub struct BasePartition {
    universe: Universe,
    intervals: Vec<(f64, f64)>,
    frequencies: Vec<usize>,
    subdivision_counts: Vec<usize>,
}

impl BasePartition {
    /// Builds the base split, tallies `series` into it, and attaches
    /// the subdivision counts.
    pub fn from_series(
        universe: Universe,
        m: usize,
        series: &TimeSeries,
        subdivision_counts: Vec<usize>,
    ) -> Result<Self> {
        let intervals = build_base_partition(&universe, m)?;
        let frequencies = count_frequencies(series, &intervals)?;
        Self::new(universe, intervals, frequencies, subdivision_counts)
    }

    pub fn new(
        universe: Universe,
        intervals: Vec<(f64, f64)>,
        frequencies: Vec<usize>,
        subdivision_counts: Vec<usize>,
    ) -> Result<Self> {
        if intervals.len() != frequencies.len() || intervals.len() != subdivision_counts.len() {
            return Err(Error::InvalidArgument(format!(
                "expected matching lengths, got {} intervals, {} frequencies, {} subdivision counts",
                intervals.len(),
                frequencies.len(),
                subdivision_counts.len()
            )));
        }
        if let Some(idx) = subdivision_counts.iter().position(|&c| c == 0) {
            return Err(Error::InvalidArgument(format!(
                "subdivision count for base interval {} must be at least 1",
                idx + 1
            )));
        }
        Ok(Self {
            universe,
            intervals,
            frequencies,
            subdivision_counts,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn frequencies(&self) -> &[usize] {
        &self.frequencies
    }

    pub fn subdivision_counts(&self) -> &[usize] {
        &self.subdivision_counts
    }
}

/// The refined partition `u_1..u_n`. Interval `j` (1-based) spans
/// `bounds[j-1]..bounds[j]`; sharing one bound vector makes adjacent
/// intervals contiguous by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    universe: Universe,
    bounds: Vec<f64>,
    midpoints: Vec<f64>,
}

impl Partition {
    /// Replaces each base interval with its configured number of
    /// equal-width subintervals.
    pub fn refine(base: &BasePartition) -> Result<Self> {
        let mut bounds = Vec::with_capacity(base.subdivision_counts.iter().sum::<usize>() + 1);
        bounds.push(base.universe.lo);
        for (&(lo, hi), &count) in base.intervals.iter().zip(&base.subdivision_counts) {
            let inner = equal_bounds(lo, hi, count)?;
            bounds.extend_from_slice(&inner[1..]);
        }
        Self::from_bounds(base.universe, bounds)
    }

    /// Builds a partition directly from a strictly increasing bound
    /// vector covering the universe exactly.
    pub fn from_bounds(universe: Universe, bounds: Vec<f64>) -> Result<Self> {
        if bounds.len() < 2 {
            return Err(Error::InvalidArgument(
                "a partition needs at least two bounds".into(),
            ));
        }
        if bounds[0] != universe.lo() || *bounds.last().unwrap() != universe.hi() {
            return Err(Error::InvalidArgument(
                "partition bounds must cover the universe exactly".into(),
            ));
        }
        if bounds.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "partition bounds must be strictly increasing".into(),
            ));
        }
        let midpoints = bounds.windows(2).map(|w| (w[0] + w[1]) / 2.0).collect();
        Ok(Self {
            universe,
            bounds,
            midpoints,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Number of intervals `n`.
    pub fn len(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The shared bound vector (`n + 1` entries).
    pub fn bounds(&self) -> &[f64] {
        &self.bounds
    }

    /// Interval `j`, 1-based.
    pub fn interval(&self, j: usize) -> Option<(f64, f64)> {
        if j >= 1 && j <= self.len() {
            Some((self.bounds[j - 1], self.bounds[j]))
        } else {
            None
        }
    }

    /// Midpoint `a_j`, 1-based.
    pub fn midpoint(&self, j: usize) -> Option<f64> {
        self.midpoints.get(j.checked_sub(1)?).copied()
    }

    /// All midpoints in interval order.
    pub fn midpoints(&self) -> &[f64] {
        &self.midpoints
    }

    /// `(lo, hi)` pairs in interval order.
    pub fn intervals(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.bounds.windows(2).map(|w| (w[0], w[1]))
    }

    /// 1-based label of the interval containing `value` under the
    /// lower-inclusive convention, or `None` outside the universe.
    pub fn locate(&self, value: f64) -> Option<usize> {
        if !self.universe.contains(value) || value.is_nan() {
            return None;
        }
        // count interior upper bounds <= value; value == hi lands in n
        let n = self.len();
        let label = 1 + self.bounds[1..n].partition_point(|&b| b <= value);
        Some(label)
    }
}

/// Apportions `target_total` subdivision counts over the base intervals
/// proportionally to their observation frequencies, by largest
/// remainder with ties broken toward the lower index. Every interval
/// receives at least one subinterval.
///
/// This is an advisory heuristic; reproduction runs should use an
/// explicit count list.
pub fn suggest_subdivision_counts(frequencies: &[usize], target_total: usize) -> Result<Vec<usize>> {
    if frequencies.is_empty() {
        return Err(Error::InvalidArgument("no frequencies supplied".into()));
    }
    let total: usize = frequencies.iter().sum();
    if total == 0 {
        return Err(Error::InvalidArgument(
            "frequencies must not all be zero".into(),
        ));
    }
    if target_total < frequencies.len() {
        return Err(Error::InvalidArgument(format!(
            "target total {target_total} cannot give each of {} intervals at least one subinterval",
            frequencies.len()
        )));
    }

    // exact integer arithmetic: quota_i = numerator_i / total, and the
    // effective remainder (quota_i - count_i) scales to
    // numerator_i - count_i * total
    let numerators: Vec<u128> = frequencies
        .iter()
        .map(|&f| f as u128 * target_total as u128)
        .collect();
    let total = total as u128;
    let mut counts: Vec<usize> =
        numerators.iter().map(|&n| ((n / total) as usize).max(1)).collect();
    let remainder = |n: u128, count: usize| n as i128 - (count as u128 * total) as i128;

    let assigned: usize = counts.iter().sum();
    if assigned < target_total {
        // hand out the shortfall by descending remainder, lower index
        // first; the shortfall never exceeds the bucket count, so one
        // pass suffices
        let mut order: Vec<usize> = (0..counts.len()).collect();
        order.sort_by(|&a, &b| {
            remainder(numerators[b], counts[b])
                .cmp(&remainder(numerators[a], counts[a]))
                .then(a.cmp(&b))
        });
        for idx in order.into_iter().take(target_total - assigned) {
            counts[idx] += 1;
        }
    } else if assigned > target_total {
        // minimum-1 bumps overshot; reclaim from the most over-served,
        // higher index first on ties
        let mut excess = assigned - target_total;
        while excess > 0 {
            let idx = (0..counts.len())
                .filter(|&i| counts[i] > 1)
                .min_by(|&a, &b| {
                    remainder(numerators[a], counts[a])
                        .cmp(&remainder(numerators[b], counts[b]))
                        .then(b.cmp(&a))
                })
                .expect("target_total >= len guarantees a reducible count");
            counts[idx] -= 1;
            excess -= 1;
        }
    }
    Ok(counts)
}

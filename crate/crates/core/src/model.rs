//! Order-k fuzzy logical relationship groups and the weighted
//! harmonic-mean defuzzification table.
//!
//! A relationship takes `k` consecutive labels to the label that
//! follows them; identical antecedents are grouped and their consequent
//! labels merged into an ordered set. Defuzzifying label `j` combines
//! the midpoints of `u_{j-1}, u_j, u_{j+1}` with weights 0.5 / 1 / 0.5
//! as a weighted harmonic mean, dropping the missing neighbor at the
//! edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fuzzify::FuzzifiedSeries;
use crate::partition::Partition;

/// Enumeration order for relationship extraction.
///
/// `Ascending` walks the series chronologically and is the default.
/// `Descending` walks it newest-first, the order the bundled reference
/// group listing uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeriesDirection {
    #[default]
    Ascending,
    Descending,
}

/// Behavior when a forecast antecedent has no matching group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fallback {
    /// Forecast the defuzzified value of the last observed label.
    #[default]
    Persist,
    /// Return a no-match error.
    Error,
}

/// Weighted harmonic mean of `(weight, value)` pairs. Requires positive
/// values; the weighted harmonic form divides by each value.
fn weighted_harmonic_mean(terms: &[(f64, f64)]) -> Result<f64> {
    let mut weight_sum = 0.0;
    let mut denom = 0.0;
    for &(weight, value) in terms {
        if value <= 0.0 {
            return Err(Error::NonPositiveMidpoint(value));
        }
        weight_sum += weight;
        denom += weight / value;
    }
    Ok(weight_sum / denom)
}

/// Defuzzified value `t_j` for label `j` over `partition`.
///
/// Interior labels use weights 0.5/1/0.5 on `a_{j-1}, a_j, a_{j+1}`;
/// label 1 and label `n` drop the missing neighbor. The interior
/// branch applies for every `2 <= j <= n-1`.
pub fn defuzz_centroid(partition: &Partition, j: usize) -> Result<f64> {
    let n = partition.len();
    if n < 2 {
        return Err(Error::UnsupportedPartition);
    }
    if j < 1 || j > n {
        return Err(Error::InvalidArgument(format!(
            "label {j} outside 1..={n}"
        )));
    }
    let a = |k: usize| partition.midpoint(k).expect("validated label range");
    if j == 1 {
        weighted_harmonic_mean(&[(1.0, a(1)), (0.5, a(2))])
    } else if j == n {
        weighted_harmonic_mean(&[(0.5, a(n - 1)), (1.0, a(n))])
    } else {
        weighted_harmonic_mean(&[(0.5, a(j - 1)), (1.0, a(j)), (0.5, a(j + 1))])
    }
}

/// Defuzzified values for every label of a partition.
#[derive(Debug, Clone, PartialEq)]
pub struct DefuzzTable {
    values: Vec<f64>,
}

impl DefuzzTable {
    /// Evaluates `defuzz_centroid` for all labels.
    pub fn build(partition: &Partition) -> Result<Self> {
        let values = (1..=partition.len())
            .map(|j| defuzz_centroid(partition, j))
            .collect::<Result<Vec<f64>>>()?;
        Ok(Self { values })
    }

    /// `t_j`, 1-based.
    pub fn value(&self, label: usize) -> Option<f64> {
        self.values.get(label.checked_sub(1)?).copied()
    }

    /// All `t_j` in label order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Number of labels covered.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Grouped order-k fuzzy logical relationships.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlrgModel {
    k: usize,
    direction: SeriesDirection,
    groups: BTreeMap<Vec<usize>, BTreeSet<usize>>,
    relationship_count: usize,
}

impl FlrgModel {
    /// Builds the model in ascending chronological order.
    pub fn build(fuzzified: &FuzzifiedSeries, k: usize) -> Result<Self> {
        Self::build_directed(fuzzified, k, SeriesDirection::Ascending)
    }

    /// Builds the model walking the labels in the given direction.
    pub fn build_directed(
        fuzzified: &FuzzifiedSeries,
        k: usize,
        direction: SeriesDirection,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("order k must be at least 1".into()));
        }
        let len = fuzzified.len();
        if len <= k {
            return Err(Error::InsufficientData {
                len,
                k,
                min: k + 1,
            });
        }
        let mut sequence = fuzzified.label_sequence();
        if direction == SeriesDirection::Descending {
            sequence.reverse();
        }
        let mut groups: BTreeMap<Vec<usize>, BTreeSet<usize>> = BTreeMap::new();
        let mut relationship_count = 0;
        for i in k..sequence.len() {
            let antecedent = sequence[i - k..i].to_vec();
            groups.entry(antecedent).or_default().insert(sequence[i]);
            relationship_count += 1;
        }
        Ok(Self {
            k,
            direction,
            groups,
            relationship_count,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn direction(&self) -> SeriesDirection {
        self.direction
    }

    /// Number of relationships before grouping (series length − k).
    pub fn relationship_count(&self) -> usize {
        self.relationship_count
    }

    /// Number of distinct antecedents after grouping.
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Consequent set for an antecedent, if the group exists.
    pub fn consequents(&self, antecedent: &[usize]) -> Option<&BTreeSet<usize>> {
        self.groups.get(antecedent)
    }

    /// Groups in lexicographic antecedent order.
    pub fn groups(&self) -> impl Iterator<Item = (&Vec<usize>, &BTreeSet<usize>)> {
        self.groups.iter()
    }

    /// Plain-text listing, one `L1,L2,L3 -> C1[,C2...]` line per group,
    /// sorted lexicographically by antecedent.
    pub fn to_listing(&self) -> String {
        let mut out = String::new();
        for (antecedent, consequents) in &self.groups {
            let lhs = antecedent
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let rhs = consequents
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            writeln!(out, "{lhs} -> {rhs}").expect("writing to string cannot fail");
        }
        out
    }
}

/// One row of the in-sample reconstruction: the year's own label, its
/// interval midpoint, and its defuzzified forecast.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InSampleRow {
    pub year: i32,
    pub label: usize,
    pub midpoint: f64,
    pub forecast: f64,
}

/// Reconstructs the in-sample forecast for every year: `F_i` is the
/// defuzzified value of the year's own label, reported for all years
/// including the first `k`.
pub fn reconstruct_in_sample(
    partition: &Partition,
    table: &DefuzzTable,
    fuzzified: &FuzzifiedSeries,
) -> Result<Vec<InSampleRow>> {
    if fuzzified.interval_count() != partition.len() || table.len() != partition.len() {
        return Err(Error::Inconsistency(format!(
            "partition has {} intervals, labels expect {}, table covers {}",
            partition.len(),
            fuzzified.interval_count(),
            table.len()
        )));
    }
    fuzzified
        .labels()
        .iter()
        .map(|&(year, label)| {
            let midpoint = partition
                .midpoint(label)
                .ok_or_else(|| Error::Inconsistency(format!("label {label} has no interval")))?;
            let forecast = table
                .value(label)
                .ok_or_else(|| Error::Inconsistency(format!("label {label} has no t value")))?;
            Ok(InSampleRow {
                year,
                label,
                midpoint,
                forecast,
            })
        })
        .collect()
}

/// Forecasts one step from the `k` most recent labels. Returns the
/// forecast and whether the antecedent matched a group; an unmatched
/// antecedent either persists the last label's defuzzified value or
/// errors, per `fallback`.
pub fn forecast_next(
    model: &FlrgModel,
    table: &DefuzzTable,
    recent: &[usize],
    fallback: Fallback,
) -> Result<(f64, bool)> {
    if recent.len() != model.k() {
        return Err(Error::InvalidArgument(format!(
            "expected {} recent labels, got {}",
            model.k(),
            recent.len()
        )));
    }
    if let Some(&bad) = recent.iter().find(|&&l| l < 1 || l > table.len()) {
        return Err(Error::InvalidArgument(format!(
            "label {bad} outside 1..={}",
            table.len()
        )));
    }
    match model.consequents(recent) {
        Some(consequents) => {
            let sum: f64 = consequents
                .iter()
                .map(|&c| table.value(c).expect("labels validated at build time"))
                .sum();
            Ok((sum / consequents.len() as f64, true))
        }
        None => match fallback {
            Fallback::Persist => {
                let last = *recent.last().expect("k >= 1");
                Ok((table.value(last).expect("validated above"), false))
            }
            Fallback::Error => Err(Error::NoMatch(recent.to_vec())),
        },
    }
}

//! Forecast accuracy metrics and the evaluation / comparison reports.
//!
//! MSE is the mean of squared errors. AFER is the mean of per-row
//! `|actual − forecast| / actual`, expressed as a percentage; the
//! per-row division by the actual value is what the reference report's
//! error column and footer use.

use crate::error::{Error, Result};
use crate::fuzzify::FuzzifiedSeries;
use crate::model::{reconstruct_in_sample, DefuzzTable};
use crate::partition::Partition;
use crate::series::TimeSeries;

/// Mean squared error over `(actual, forecast)` pairs.
pub fn mse(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.is_empty() {
        return Err(Error::InvalidArgument(
            "mse of an empty pair list is undefined".into(),
        ));
    }
    let sum: f64 = pairs
        .iter()
        .map(|&(actual, forecast)| (actual - forecast) * (actual - forecast))
        .sum();
    Ok(sum / pairs.len() as f64)
}

/// Average forecasting error rate over `(actual, forecast)` pairs, in
/// percent. Every actual value must be positive.
pub fn afer(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.is_empty() {
        return Err(Error::InvalidArgument(
            "afer of an empty pair list is undefined".into(),
        ));
    }
    let mut sum = 0.0;
    for &(actual, forecast) in pairs {
        if actual <= 0.0 {
            return Err(Error::NonPositiveActual(actual));
        }
        sum += (actual - forecast).abs() / actual;
    }
    Ok(sum / pairs.len() as f64 * 100.0)
}

/// One evaluated year.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationRow {
    pub year: i32,
    pub actual: f64,
    pub midpoint: f64,
    pub forecast: f64,
    pub squared_error: f64,
    pub relative_error: f64,
}

/// Per-year forecasts with their errors and the aggregate metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationReport {
    pub rows: Vec<EvaluationRow>,
    pub mse: f64,
    pub afer: f64,
}

/// Evaluates the in-sample reconstruction against the actual series,
/// one row per year.
pub fn evaluate(
    series: &TimeSeries,
    partition: &Partition,
    table: &DefuzzTable,
    fuzzified: &FuzzifiedSeries,
) -> Result<EvaluationReport> {
    if series.len() != fuzzified.len() {
        return Err(Error::Inconsistency(format!(
            "series has {} points but {} labels were supplied",
            series.len(),
            fuzzified.len()
        )));
    }
    let reconstruction = reconstruct_in_sample(partition, table, fuzzified)?;
    let mut rows = Vec::with_capacity(series.len());
    for (&(year, actual), in_sample) in series.points().iter().zip(&reconstruction) {
        if year != in_sample.year {
            return Err(Error::Inconsistency(format!(
                "series year {year} does not match fuzzified year {}",
                in_sample.year
            )));
        }
        if actual <= 0.0 {
            return Err(Error::NonPositiveActual(actual));
        }
        let error = actual - in_sample.forecast;
        rows.push(EvaluationRow {
            year,
            actual,
            midpoint: in_sample.midpoint,
            forecast: in_sample.forecast,
            squared_error: error * error,
            relative_error: error.abs() / actual,
        });
    }
    let pairs: Vec<(f64, f64)> = rows.iter().map(|r| (r.actual, r.forecast)).collect();
    Ok(EvaluationReport {
        mse: mse(&pairs)?,
        afer: afer(&pairs)?,
        rows,
    })
}

/// A named method with its per-year forecasts and aggregate metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodSummary {
    pub name: String,
    pub forecasts: Vec<(i32, f64)>,
    pub mse: f64,
    pub afer: f64,
}

/// Actuals plus one or more methods evaluated over the same years.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub actuals: Vec<(i32, f64)>,
    pub methods: Vec<MethodSummary>,
}

impl ComparisonReport {
    /// The method with the smallest MSE.
    pub fn best_by_mse(&self) -> Option<&MethodSummary> {
        self.methods
            .iter()
            .min_by(|a, b| a.mse.partial_cmp(&b.mse).expect("metrics are finite"))
    }

    /// The method with the smallest AFER.
    pub fn best_by_afer(&self) -> Option<&MethodSummary> {
        self.methods
            .iter()
            .min_by(|a, b| a.afer.partial_cmp(&b.afer).expect("metrics are finite"))
    }
}

/// Scores each method against the actual series. Every method must
/// provide a forecast for every actual year; methods keep the order
/// they were given in.
pub fn compare(actuals: &TimeSeries, methods: &[(String, TimeSeries)]) -> Result<ComparisonReport> {
    if actuals.is_empty() {
        return Err(Error::InvalidArgument(
            "cannot compare against an empty actual series".into(),
        ));
    }
    let mut summaries = Vec::with_capacity(methods.len());
    for (name, forecasts) in methods {
        let mut aligned = Vec::with_capacity(actuals.len());
        let mut pairs = Vec::with_capacity(actuals.len());
        for &(year, actual) in actuals.points() {
            let forecast = forecasts.value_for(year).ok_or_else(|| {
                Error::Inconsistency(format!("method {name} has no forecast for year {year}"))
            })?;
            aligned.push((year, forecast));
            pairs.push((actual, forecast));
        }
        summaries.push(MethodSummary {
            name: name.clone(),
            forecasts: aligned,
            mse: mse(&pairs)?,
            afer: afer(&pairs)?,
        });
    }
    Ok(ComparisonReport {
        actuals: actuals.points().to_vec(),
        methods: summaries,
    })
}

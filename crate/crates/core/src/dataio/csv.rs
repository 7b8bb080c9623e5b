//! CSV readers and writers for every pipeline artifact.
//!
//! Writers are deterministic: no timestamps, `.` decimal point, and a
//! fixed column layout. The series writer emits lossless shortest
//! round-trip decimals so write-then-read reproduces the series
//! exactly; display-rounded columns appear only in the evaluation
//! report, which nothing downstream consumes.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::fuzzify::FuzzifiedSeries;
use crate::metrics::{ComparisonReport, EvaluationReport};
use crate::partition::Partition;
use crate::series::TimeSeries;

/// Lossless decimal rendering (shortest string that parses back to the
/// same f64).
fn fmt_full(x: f64) -> String {
    format!("{x}")
}

/// Fixed 10-decimal rendering for partition geometry.
fn fmt_wide(x: f64) -> String {
    format!("{x:.10}")
}

fn quote_if_needed(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Parses a numeric field, tolerating thousands separators ("1,369")
/// and surrounding whitespace.
fn parse_value(field: &str) -> Option<f64> {
    let cleaned = field.trim().replace(',', "");
    if cleaned.is_empty() {
        return None;
    }
    cleaned.parse().ok()
}

fn parse_year(field: &str) -> Option<i32> {
    field.trim().parse().ok()
}

fn reader(source: impl Read) -> csv::Reader<impl Read> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(source)
}

fn record_line(record: &csv::StringRecord, fallback: usize) -> usize {
    record
        .position()
        .map(|p| p.line() as usize)
        .unwrap_or(fallback)
}

/// Reads a `year,value` series. Rows may appear in any order and are
/// normalized to ascending years; values may carry thousands
/// separators.
pub fn read_series_csv(source: impl Read) -> Result<TimeSeries> {
    let mut rdr = reader(source);
    let mut rows = rdr.records().enumerate();

    let (_, header) = rows.next().ok_or(Error::EmptyData)?;
    let header = header.map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    expect_header(&header, &["year", "value"])?;

    let mut points = Vec::new();
    for (idx, record) in rows {
        let record = record.map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        let line = record_line(&record, idx + 1);
        if record.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected 2 fields, got {}", record.len()),
            });
        }
        let year = parse_year(&record[0]).ok_or_else(|| Error::Parse {
            line,
            message: format!("invalid year `{}`", &record[0]),
        })?;
        let value = parse_value(&record[1]).ok_or_else(|| Error::Parse {
            line,
            message: format!("invalid value `{}`", &record[1]),
        })?;
        points.push((year, value));
    }
    if points.is_empty() {
        return Err(Error::EmptyData);
    }
    TimeSeries::new(points)
}

fn expect_header(record: &csv::StringRecord, expected: &[&str]) -> Result<()> {
    let got: Vec<&str> = record.iter().collect();
    if got != expected {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header `{}`, got `{}`", expected.join(","), got.join(",")),
        });
    }
    Ok(())
}

/// Writes a `year,value` series that `read_series_csv` reproduces
/// exactly.
pub fn write_series_csv(series: &TimeSeries, mut sink: impl Write) -> Result<()> {
    let mut out = String::from("year,value\n");
    for &(year, value) in series.points() {
        out.push_str(&format!("{year},{}\n", fmt_full(value)));
    }
    sink.write_all(out.as_bytes())?;
    Ok(())
}

/// Writes the partition as `index,lo,hi,midpoint` rows at fixed
/// 10-decimal precision.
pub fn write_partition_csv(partition: &Partition, mut sink: impl Write) -> Result<()> {
    let mut out = String::from("index,lo,hi,midpoint\n");
    for (idx, (lo, hi)) in partition.intervals().enumerate() {
        let midpoint = partition.midpoint(idx + 1).expect("index in range");
        out.push_str(&format!(
            "{},{},{},{}\n",
            idx + 1,
            fmt_wide(lo),
            fmt_wide(hi),
            fmt_wide(midpoint)
        ));
    }
    sink.write_all(out.as_bytes())?;
    Ok(())
}

/// Writes the fuzzified series with its interval geometry.
pub fn write_fuzzified_csv(
    series: &TimeSeries,
    fuzzified: &FuzzifiedSeries,
    partition: &Partition,
    mut sink: impl Write,
) -> Result<()> {
    if series.len() != fuzzified.len() {
        return Err(Error::Inconsistency(format!(
            "series has {} points but {} labels were supplied",
            series.len(),
            fuzzified.len()
        )));
    }
    let mut out = String::from("year,value,label,interval_lo,interval_hi,midpoint\n");
    for (&(year, value), &(label_year, label)) in series.points().iter().zip(fuzzified.labels()) {
        if year != label_year {
            return Err(Error::Inconsistency(format!(
                "series year {year} does not match fuzzified year {label_year}"
            )));
        }
        let (lo, hi) = partition
            .interval(label)
            .ok_or_else(|| Error::Inconsistency(format!("label {label} has no interval")))?;
        let midpoint = partition.midpoint(label).expect("validated above");
        out.push_str(&format!(
            "{year},{},{label},{},{},{}\n",
            fmt_full(value),
            fmt_wide(lo),
            fmt_wide(hi),
            fmt_wide(midpoint)
        ));
    }
    sink.write_all(out.as_bytes())?;
    Ok(())
}

/// Reads a fuzzified export back into the series and its labels.
/// Labels are checked against the interval count of the partition the
/// caller rebuilt from configuration.
pub fn read_fuzzified_csv(
    source: impl Read,
    interval_count: usize,
) -> Result<(TimeSeries, FuzzifiedSeries)> {
    let mut rdr = reader(source);
    let mut rows = rdr.records().enumerate();

    let (_, header) = rows.next().ok_or(Error::EmptyData)?;
    let header = header.map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    expect_header(
        &header,
        &["year", "value", "label", "interval_lo", "interval_hi", "midpoint"],
    )?;

    let mut triples: Vec<(i32, f64, usize)> = Vec::new();
    for (idx, record) in rows {
        let record = record.map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        let line = record_line(&record, idx + 1);
        if record.len() != 6 {
            return Err(Error::Parse {
                line,
                message: format!("expected 6 fields, got {}", record.len()),
            });
        }
        let year = parse_year(&record[0]).ok_or_else(|| Error::Parse {
            line,
            message: format!("invalid year `{}`", &record[0]),
        })?;
        let value = parse_value(&record[1]).ok_or_else(|| Error::Parse {
            line,
            message: format!("invalid value `{}`", &record[1]),
        })?;
        let label: usize = record[2].trim().parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid label `{}`", &record[2]),
        })?;
        triples.push((year, value, label));
    }
    if triples.is_empty() {
        return Err(Error::EmptyData);
    }
    triples.sort_by_key(|&(year, _, _)| year);
    let series = TimeSeries::new(triples.iter().map(|&(y, v, _)| (y, v)).collect())?;
    let fuzzified = FuzzifiedSeries::new(
        triples.iter().map(|&(y, _, l)| (y, l)).collect(),
        interval_count,
    )?;
    Ok((series, fuzzified))
}

/// Writes the evaluation report in its display layout: four decimals
/// for forecasts and errors, then `MSE` (two decimals) and
/// `AFER_percent` (six decimals) footer rows.
pub fn write_evaluation_csv(report: &EvaluationReport, mut sink: impl Write) -> Result<()> {
    let mut out = String::from("year,actual,midpoint,forecast,squared_error,relative_error\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{},{:.4},{:.4},{:.4},{:.4}\n",
            row.year,
            fmt_full(row.actual),
            row.midpoint,
            row.forecast,
            row.squared_error,
            row.relative_error
        ));
    }
    out.push_str(&format!("MSE,{:.2}\n", report.mse));
    out.push_str(&format!("AFER_percent,{:.6}\n", report.afer));
    sink.write_all(out.as_bytes())?;
    Ok(())
}

/// Writes the comparison report: lossless forecast columns per method,
/// metric footer rows aligned under the method columns.
pub fn write_comparison_csv(report: &ComparisonReport, mut sink: impl Write) -> Result<()> {
    let mut out = String::from("year,actual");
    for method in &report.methods {
        out.push(',');
        out.push_str(&quote_if_needed(&method.name));
    }
    out.push('\n');
    for (idx, &(year, actual)) in report.actuals.iter().enumerate() {
        out.push_str(&format!("{year},{}", fmt_full(actual)));
        for method in &report.methods {
            let (forecast_year, forecast) = method.forecasts[idx];
            debug_assert_eq!(forecast_year, year);
            out.push_str(&format!(",{}", fmt_full(forecast)));
        }
        out.push('\n');
    }
    out.push_str("MSE,");
    for method in &report.methods {
        out.push_str(&format!(",{:.2}", method.mse));
    }
    out.push('\n');
    out.push_str("AFER_percent,");
    for method in &report.methods {
        out.push_str(&format!(",{:.6}", method.afer));
    }
    out.push('\n');
    sink.write_all(out.as_bytes())?;
    Ok(())
}

/// Reads a comparison export back. Metric footers are recomputed from
/// the parsed columns rather than trusted.
pub fn read_comparison_csv(source: impl Read) -> Result<ComparisonReport> {
    let mut rdr = reader(source);
    let mut rows = rdr.records().enumerate();

    let (_, header) = rows.next().ok_or(Error::EmptyData)?;
    let header = header.map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    let fields: Vec<&str> = header.iter().collect();
    if fields.len() < 3 || fields[0] != "year" || fields[1] != "actual" {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "expected header `year,actual,<method>...`, got `{}`",
                fields.join(",")
            ),
        });
    }
    let names: Vec<String> = fields[2..].iter().map(|s| s.to_string()).collect();

    let mut actuals = Vec::new();
    let mut columns: Vec<Vec<(i32, f64)>> = vec![Vec::new(); names.len()];
    for (idx, record) in rows {
        let record = record.map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        let line = record_line(&record, idx + 1);
        if record.get(0) == Some("MSE") || record.get(0) == Some("AFER_percent") {
            continue; // footer rows
        }
        if record.len() != names.len() + 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected {} fields, got {}", names.len() + 2, record.len()),
            });
        }
        let year = parse_year(&record[0]).ok_or_else(|| Error::Parse {
            line,
            message: format!("invalid year `{}`", &record[0]),
        })?;
        let actual = parse_value(&record[1]).ok_or_else(|| Error::Parse {
            line,
            message: format!("invalid value `{}`", &record[1]),
        })?;
        actuals.push((year, actual));
        for (column, field) in columns.iter_mut().zip(record.iter().skip(2)) {
            let forecast = parse_value(field).ok_or_else(|| Error::Parse {
                line,
                message: format!("invalid value `{field}`"),
            })?;
            column.push((year, forecast));
        }
    }
    if actuals.is_empty() {
        return Err(Error::EmptyData);
    }
    let actual_series = TimeSeries::new(actuals)?;
    let methods: Vec<(String, TimeSeries)> = names
        .into_iter()
        .zip(columns)
        .map(|(name, column)| Ok((name, TimeSeries::new(column)?)))
        .collect::<Result<Vec<_>>>()?;
    crate::metrics::compare(&actual_series, &methods)
}

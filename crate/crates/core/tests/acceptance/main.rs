//! Acceptance suite for the Belgium benchmark reproduction. One test
//! per criterion; each prints a `[PASS]`/`[FAIL]` line (visible with
//! `cargo test -p meanfts --test acceptance -- --nocapture`).
//!
//! Criteria 1 and 5 assert the reference listings exactly as printed.
//! Two of those printed values are internally inconsistent with the
//! rest of the reference data (see docs/ERRATA.md); the corresponding
//! checks fail by design rather than loosening the stated tolerances.


use meanfts::data;
use meanfts::dataio::{
    emit_plot_data, write_comparison_csv, write_evaluation_csv, write_fuzzified_csv,
    write_partition_csv, write_series_csv, PlotFormat, RunConfig,
};
use meanfts::fuzzify::{fuzzify_series, BoundaryMode};
use meanfts::metrics::{afer, mse};
use meanfts::model::{defuzz_centroid, FlrgModel, SeriesDirection};
use meanfts::partition::{build_base_partition, BasePartition, Partition, Universe};
use meanfts::pipeline;
use meanfts::TimeSeries;

use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestError, TestRunner};

type Check = (String, bool);

fn summarize(number: u32, title: &str, checks: &[Check]) -> bool {
    let failed: Vec<&Check> = checks.iter().filter(|(_, ok)| !ok).collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "[{status}] criterion {number}: {title} ({}/{} checks)",
        checks.len() - failed.len(),
        checks.len()
    );
    for (label, _) in &failed {
        println!("       {label}");
    }
    failed.is_empty()
}

fn reference_pairs(reference: &TimeSeries) -> Vec<(f64, f64)> {
    let actuals = data::belgium_accidents();
    actuals
        .points()
        .iter()
        .map(|&(year, actual)| (actual, reference.value_for(year).unwrap()))
        .collect()
}

#[test]
fn criterion_1_partition_reproduction() {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents()).unwrap();
    let partition = &output.partition;

    let mut checks: Vec<Check> = Vec::new();
    checks.push((
        format!("interval count {} = 29", partition.len()),
        partition.len() == 29,
    ));
    let mut max_delta: f64 = 0.0;
    for (idx, &(ref_lo, ref_hi)) in golden::REFERENCE_INTERVALS.iter().enumerate() {
        let (lo, hi) = partition.interval(idx + 1).unwrap();
        let delta = (lo - ref_lo).abs().max((hi - ref_hi).abs());
        max_delta = max_delta.max(delta);
        checks.push((
            format!(
                "u{} computed [{lo:.4}, {hi:.4}] vs listed [{ref_lo}, {ref_hi}] (|Δ| = {delta:.4})",
                idx + 1
            ),
            delta <= golden::BOUND_TOL + 1e-12,
        ));
    }
    let pass = summarize(
        1,
        "the 29 generated intervals match every listed bound within ±0.01",
        &checks,
    );
    if !pass {
        println!(
            "       analysis: the reference interval listing was generated by repeatedly adding\n\
             \u{20}      the 2-decimal-truncated subinterval width (1315.38, 1330.76, ...), so its\n\
             \u{20}      bounds drift from the full-precision refinement by up to {max_delta:.4}.\n\
             \u{20}      No partition can satisfy this criterion together with criterion 2: interval\n\
             \u{20}      20 is listed as [1484.56, 1500.00], whose midpoint 1492.28 ± 0.01 cannot\n\
             \u{20}      reach the listed 1989 midpoint 1492.3079 ± 0.01. The full-precision bounds\n\
             \u{20}      are the ones the midpoint and forecast columns (criteria 2-4) reproduce;\n\
             \u{20}      see docs/ERRATA.md."
        );
    }
    assert!(
        pass,
        "the listed interval bounds carry accumulated display rounding (up to {max_delta:.4}); \
         matching them within ±0.01 is incompatible with criteria 2-4 (see docs/ERRATA.md)"
    );
}

#[test]
fn criterion_2_fuzzification_reproduction() {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents()).unwrap();
    let labels: std::collections::BTreeMap<i32, usize> =
        output.fuzzified.labels().iter().copied().collect();

    let mut checks: Vec<Check> = Vec::new();
    for &(year, _, ref_mid, _) in &golden::REFERENCE_ROWS {
        let label = labels[&year];
        let mid = output.partition.midpoint(label).unwrap();
        let delta = (mid - ref_mid).abs();
        checks.push((
            format!("{year}: label {label} midpoint {mid:.4} vs listed {ref_mid} (|Δ| = {delta:.5})"),
            delta <= golden::VALUE_TOL,
        ));
    }
    let pass = summarize(
        2,
        "assigned labels' interval midpoints match the listed midpoint column within ±0.01 (31/31)",
        &checks,
    );
    assert!(pass);
}

#[test]
fn criterion_3_defuzzification_reproduction() {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents()).unwrap();
    let forecasts: std::collections::BTreeMap<i32, f64> = output
        .evaluation
        .rows
        .iter()
        .map(|row| (row.year, row.forecast))
        .collect();

    let mut checks: Vec<Check> = Vec::new();
    for &(year, _, _, ref_calc) in &golden::REFERENCE_ROWS {
        let forecast = forecasts[&year];
        let delta = (forecast - ref_calc).abs();
        checks.push((
            format!("{year}: forecast {forecast:.4} vs listed {ref_calc} (|Δ| = {delta:.5})"),
            delta <= golden::VALUE_TOL,
        ));
    }
    let pass = summarize(
        3,
        "reconstructed forecasts match the listed calculated column within ±0.01 (31/31)",
        &checks,
    );
    assert!(pass);
}

#[test]
fn criterion_4_aggregate_metrics() {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents()).unwrap();
    let checks = vec![
        (
            format!(
                "MSE {:.4} vs listed {} ±{}",
                output.evaluation.mse,
                golden::PROPOSED_MSE,
                golden::MSE_TOL
            ),
            (output.evaluation.mse - golden::PROPOSED_MSE).abs() <= golden::MSE_TOL,
        ),
        (
            format!(
                "AFER {:.6}% vs listed {}% ±{}",
                output.evaluation.afer,
                golden::PROPOSED_AFER,
                golden::AFER_TOL
            ),
            (output.evaluation.afer - golden::PROPOSED_AFER).abs() <= golden::AFER_TOL,
        ),
    ];
    let pass = summarize(4, "aggregate MSE and AFER match the listed footer", &checks);
    assert!(pass);
}

#[test]
fn criterion_5_reference_method_metrics() {
    let jilani = reference_pairs(&data::reference_jilani());
    let lee = reference_pairs(&data::reference_lee());
    let jilani_mse = mse(&jilani).unwrap();
    let jilani_afer = afer(&jilani).unwrap();
    let lee_mse = mse(&lee).unwrap();
    let lee_afer = afer(&lee).unwrap();

    let comparison = pipeline::compare_with_references(
        &RunConfig::default(),
        &data::belgium_accidents(),
        &[
            ("jilani".to_string(), data::reference_jilani()),
            ("lee".to_string(), data::reference_lee()),
        ],
    )
    .unwrap();

    let checks = vec![
        (
            format!(
                "jilani MSE {jilani_mse:.4} vs listed {} ±{}",
                golden::JILANI_MSE,
                golden::MSE_TOL
            ),
            (jilani_mse - golden::JILANI_MSE).abs() <= golden::MSE_TOL,
        ),
        (
            format!(
                "jilani AFER {jilani_afer:.6} vs listed {} ±{}",
                golden::JILANI_AFER,
                golden::AFER_TOL
            ),
            (jilani_afer - golden::JILANI_AFER).abs() <= golden::AFER_TOL,
        ),
        (
            format!(
                "lee MSE {lee_mse:.4} vs listed {} ±{}",
                golden::LEE_MSE,
                golden::MSE_TOL
            ),
            (lee_mse - golden::LEE_MSE).abs() <= golden::MSE_TOL,
        ),
        (
            format!(
                "lee AFER {lee_afer:.6} vs listed {} ±{}",
                golden::LEE_AFER,
                golden::AFER_TOL
            ),
            (lee_afer - golden::LEE_AFER).abs() <= golden::AFER_TOL,
        ),
        (
            "comparison ranks the proposed method smallest on both metrics".to_string(),
            comparison.best_by_mse().unwrap().name == "proposed"
                && comparison.best_by_afer().unwrap().name == "proposed",
        ),
    ];
    let pass = summarize(
        5,
        "reference-method metrics from the bundled columns match the listed summary",
        &checks,
    );
    if !pass {
        println!(
            "       analysis: the listed lee AFER 5.067887 equals, to all six printed decimals,\n\
             \u{20}      the mean relative error over 1975-2004 only (30 of the 31 rows, omitting\n\
             \u{20}      1974). The 31-row mean of the bundled column is {lee_afer:.6}, which no\n\
             \u{20}      row-complete computation can move within ±0.005 of the listed value;\n\
             \u{20}      see docs/ERRATA.md."
        );
    }
    assert!(
        pass,
        "the listed lee AFER (5.067887) is a 30-row mean of the bundled column (31-row mean: \
         {lee_afer:.6}); matching it within ±0.005 contradicts the row-complete AFER definition \
         (see docs/ERRATA.md)"
    );
}

#[test]
fn criterion_6_flrg_structure() {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents()).unwrap();
    let descending =
        FlrgModel::build_directed(&output.fuzzified, 3, SeriesDirection::Descending).unwrap();

    let mut checks: Vec<Check> = vec![
        (
            format!(
                "ascending model has {} relationships before grouping (expect 28)",
                output.model.relationship_count()
            ),
            output.model.relationship_count() == 28,
        ),
        (
            format!(
                "descending model has {} relationships before grouping (expect 28)",
                descending.relationship_count()
            ),
            descending.relationship_count() == 28,
        ),
        (
            "descending model contains (1,3,7) -> {6}".to_string(),
            descending
                .consequents(&[1, 3, 7])
                .is_some_and(|c| c.iter().copied().collect::<Vec<_>>() == vec![6]),
        ),
        (
            format!(
                "listing count 26 diverges from the enumerated {} groups",
                descending.len()
            ),
            descending.len() == 28,
        ),
    ];

    // every listed group must either match the data-derived model or be
    // one of the documented divergences
    for (number, ([a, b, c], consequent)) in golden::REFERENCE_GROUPS.iter().enumerate() {
        let number = number + 1;
        let antecedent = [*a, *b, *c];
        let matches = descending
            .consequents(&antecedent)
            .is_some_and(|set| set.contains(consequent) && set.len() == 1);
        if golden::DIVERGENT_GROUPS.contains(&number) {
            checks.push((
                format!(
                    "listed group {number} {antecedent:?} -> {consequent} is a documented divergence"
                ),
                !matches,
            ));
        } else {
            checks.push((
                format!("listed group {number} {antecedent:?} -> {consequent} matches the model"),
                matches,
            ));
        }
    }
    let pass = summarize(
        6,
        "order-3 structure: 28 relationships, group (1,3,7)->{6}, listed errata diverge",
        &checks,
    );
    assert!(pass);
}

fn run_property<S>(
    name: &str,
    strategy: S,
    case: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Check
where
    S: Strategy,
{
    let mut runner = TestRunner::deterministic();
    match runner.run(&strategy, case) {
        Ok(()) => (name.to_string(), true),
        Err(TestError::Fail(reason, _)) => (format!("{name}: {reason}"), false),
        Err(TestError::Abort(reason)) => (format!("{name}: aborted: {reason}"), false),
    }
}

/// A partition plus values placed safely inside chosen intervals, so
/// label assignments are stable under scaling.
fn partition_strategy() -> impl Strategy<Value = (Partition, Vec<f64>)> {
    (
        1.0f64..1000.0,
        1.0f64..5000.0,
        proptest::collection::vec(1usize..8, 1..5),
        proptest::collection::vec((0.0f64..1.0, 0.1f64..0.9), 5..40),
    )
        .prop_map(|(lo, width, counts, placements)| {
            let universe = Universe::new(lo, lo + width).unwrap();
            let intervals = build_base_partition(&universe, counts.len()).unwrap();
            let base =
                BasePartition::new(universe, intervals, vec![0; counts.len()], counts).unwrap();
            let partition = Partition::refine(&base).unwrap();
            let n = partition.len();
            let values: Vec<f64> = placements
                .into_iter()
                .map(|(pick, frac)| {
                    let j = 1 + ((pick * n as f64) as usize).min(n - 1);
                    let (ilo, ihi) = partition.interval(j).unwrap();
                    ilo + frac * (ihi - ilo)
                })
                .collect();
            (partition, values)
        })
}

#[test]
fn criterion_7_property_suite() {
    let mut checks: Vec<Check> = Vec::new();

    checks.push(run_property(
        "partition coverage, contiguity, midpoint monotonicity",
        partition_strategy(),
        |(partition, _)| {
            let universe = *partition.universe();
            prop_assert_eq!(partition.bounds()[0], universe.lo());
            prop_assert_eq!(*partition.bounds().last().unwrap(), universe.hi());
            let intervals: Vec<(f64, f64)> = partition.intervals().collect();
            for pair in intervals.windows(2) {
                prop_assert_eq!(pair[0].1, pair[1].0);
            }
            for pair in partition.midpoints().windows(2) {
                prop_assert!(pair[0] < pair[1]);
            }
            Ok(())
        },
    ));

    checks.push(run_property(
        "fuzzify(midpoint_j) = j for every label",
        partition_strategy(),
        |(partition, _)| {
            for j in 1..=partition.len() {
                let mid = partition.midpoint(j).unwrap();
                let label = fuzzify_value_strict(&partition, mid)?;
                prop_assert_eq!(label, j);
            }
            Ok(())
        },
    ));

    checks.push(run_property(
        "harmonic-mean bound: min < t_j < max of involved midpoints",
        partition_strategy(),
        |(partition, _)| {
            if partition.len() < 2 {
                return Ok(());
            }
            for j in 1..=partition.len() {
                let t = defuzz_centroid(&partition, j).map_err(|e| {
                    TestCaseError::fail(format!("defuzz failed at {j}: {e}"))
                })?;
                let involved: Vec<f64> = [j.checked_sub(1), Some(j), Some(j + 1)]
                    .into_iter()
                    .flatten()
                    .filter_map(|k| partition.midpoint(k))
                    .collect();
                let lo = involved.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = involved.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                prop_assert!(lo < t && t < hi, "t[{}] = {} outside ({}, {})", j, t, lo, hi);
            }
            Ok(())
        },
    ));

    checks.push(run_property(
        "homogeneity: scaling universe and data by c preserves labels, scales t and MSE, fixes AFER",
        (partition_strategy(), 0.1f64..10.0),
        |((partition, values), c)| {
            if partition.len() < 2 {
                return Ok(()); // defuzzification needs two intervals
            }
            let universe = *partition.universe();
            let series = TimeSeries::new(
                values.iter().enumerate().map(|(i, &v)| (i as i32, v)).collect(),
            )
            .unwrap();
            let scaled_series = TimeSeries::new(
                values.iter().enumerate().map(|(i, &v)| (i as i32, v * c)).collect(),
            )
            .unwrap();

            let counts: Vec<usize> = vec![partition.len()];
            let config = RunConfig {
                universe_lo: universe.lo(),
                universe_hi: universe.hi(),
                base_interval_count: 1,
                subdivision_counts: counts.clone(),
                order_k: 1,
                ..RunConfig::default()
            };
            let scaled_config = RunConfig {
                universe_lo: universe.lo() * c,
                universe_hi: universe.hi() * c,
                base_interval_count: 1,
                subdivision_counts: counts,
                order_k: 1,
                ..RunConfig::default()
            };
            let plain = pipeline::run(&config, &series)
                .map_err(|e| TestCaseError::fail(format!("plain run failed: {e}")))?;
            let scaled = pipeline::run(&scaled_config, &scaled_series)
                .map_err(|e| TestCaseError::fail(format!("scaled run failed: {e}")))?;

            prop_assert_eq!(plain.fuzzified.labels(), scaled.fuzzified.labels());
            for (t0, t1) in plain
                .defuzz_table
                .values()
                .iter()
                .zip(scaled.defuzz_table.values())
            {
                prop_assert!(((t1 - t0 * c) / (t0 * c)).abs() <= 1e-9);
            }
            let (m0, m1) = (plain.evaluation.mse, scaled.evaluation.mse);
            prop_assert!((m1 - m0 * c * c).abs() <= 1e-9 * (m0 * c * c).max(1e-12));
            let (a0, a1) = (plain.evaluation.afer, scaled.evaluation.afer);
            prop_assert!((a1 - a0).abs() <= 1e-9 * a0.max(1.0));
            Ok(())
        },
    ));

    checks.push(run_property(
        "metric non-negativity with equality iff perfect forecast",
        proptest::collection::vec((1.0f64..1e6, 0.0f64..1e6), 1..40),
        |pairs| {
            let m = mse(&pairs).unwrap();
            let a = afer(&pairs).unwrap();
            prop_assert!(m >= 0.0 && a >= 0.0);
            let perfect = pairs.iter().all(|&(actual, forecast)| actual == forecast);
            prop_assert_eq!(m == 0.0, perfect);
            prop_assert_eq!(a == 0.0, perfect);
            let perfect_pairs: Vec<(f64, f64)> =
                pairs.iter().map(|&(actual, _)| (actual, actual)).collect();
            prop_assert_eq!(mse(&perfect_pairs).unwrap(), 0.0);
            prop_assert_eq!(afer(&perfect_pairs).unwrap(), 0.0);
            Ok(())
        },
    ));

    checks.push(run_property(
        "CSV round-trip identity",
        proptest::collection::btree_map(1900i32..2100, 0.0f64..1e9, 1..40),
        |points| {
            let series = TimeSeries::new(points.into_iter().collect()).unwrap();
            let mut buffer = Vec::new();
            meanfts::dataio::write_series_csv(&series, &mut buffer).unwrap();
            let back = meanfts::dataio::read_series_csv(buffer.as_slice()).unwrap();
            prop_assert_eq!(series, back);
            Ok(())
        },
    ));

    checks.push((
        "deterministic byte-identical reruns of every artifact".to_string(),
        deterministic_rerun_check(),
    ));

    let pass = summarize(7, "property suite", &checks);
    assert!(pass);
}

fn fuzzify_value_strict(partition: &Partition, value: f64) -> Result<usize, TestCaseError> {
    meanfts::fuzzify::fuzzify_value(partition, value, BoundaryMode::Strict)
        .map_err(|e| TestCaseError::fail(format!("fuzzify failed: {e}")))
}

/// Runs the full pipeline twice and renders every artifact both times;
/// all byte streams must be identical.
fn deterministic_rerun_check() -> bool {
    let render = || {
        let series = data::belgium_accidents();
        let config = RunConfig::default();
        let output = pipeline::run(&config, &series).unwrap();
        let comparison = pipeline::compare_with_references(
            &config,
            &series,
            &[
                ("jilani".to_string(), data::reference_jilani()),
                ("lee".to_string(), data::reference_lee()),
            ],
        )
        .unwrap();
        let mut artifacts: Vec<Vec<u8>> = Vec::new();
        let mut buffer = Vec::new();
        write_series_csv(&series, &mut buffer).unwrap();
        artifacts.push(std::mem::take(&mut buffer));
        write_partition_csv(&output.partition, &mut buffer).unwrap();
        artifacts.push(std::mem::take(&mut buffer));
        write_fuzzified_csv(&series, &output.fuzzified, &output.partition, &mut buffer).unwrap();
        artifacts.push(std::mem::take(&mut buffer));
        artifacts.push(output.model.to_listing().into_bytes());
        write_evaluation_csv(&output.evaluation, &mut buffer).unwrap();
        artifacts.push(std::mem::take(&mut buffer));
        write_comparison_csv(&comparison, &mut buffer).unwrap();
        artifacts.push(std::mem::take(&mut buffer));
        artifacts.push(
            emit_plot_data(&comparison, PlotFormat::Svg)
                .unwrap()
                .into_bytes(),
        );
        artifacts.push(
            emit_plot_data(&comparison, PlotFormat::Tsv)
                .unwrap()
                .into_bytes(),
        );
        artifacts
    };
    render() == render()
}

#[test]
fn fuzzified_series_matches_reference_labels() {
    // companion check: the label sequence behind criteria 2-6
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents()).unwrap();
    let expected: Vec<usize> = vec![
        24, 18, 22, 25, 27, 24, 26, 23, 18, 19, 12, 8, 18, 13, 16, 20, 24, 19, 13, 10, 15, 5, 2,
        3, 5, 4, 6, 7, 3, 1, 1,
    ];
    assert_eq!(output.fuzzified.label_sequence(), expected);
    let fuzzified = fuzzify_series(
        &output.partition,
        &data::belgium_accidents(),
        BoundaryMode::Strict,
    )
    .unwrap();
    assert_eq!(fuzzified, output.fuzzified);
}

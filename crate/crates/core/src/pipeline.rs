//! End-to-end orchestration: configuration plus series in, every
//! intermediate artifact out.

use crate::dataio::RunConfig;
use crate::error::Result;
use crate::fuzzify::{fuzzify_series, FuzzifiedSeries};
use crate::metrics::{compare, evaluate, ComparisonReport, EvaluationReport};
use crate::model::{DefuzzTable, FlrgModel};
use crate::partition::{BasePartition, Partition};
use crate::series::TimeSeries;

/// Everything the pipeline produces for one series under one
/// configuration.
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub base: BasePartition,
    pub partition: Partition,
    pub fuzzified: FuzzifiedSeries,
    pub defuzz_table: DefuzzTable,
    pub model: FlrgModel,
    pub evaluation: EvaluationReport,
}

impl PipelineOutput {
    /// The in-sample forecasts as a series, for comparisons.
    pub fn proposed_forecasts(&self) -> Result<TimeSeries> {
        TimeSeries::new(
            self.evaluation
                .rows
                .iter()
                .map(|row| (row.year, row.forecast))
                .collect(),
        )
    }
}

/// Runs partition building, fuzzification, model construction, and
/// evaluation in order.
pub fn run(config: &RunConfig, series: &TimeSeries) -> Result<PipelineOutput> {
    config.validate()?;
    let universe = config.universe()?;
    // in clamp mode out-of-universe values tally into the edge
    // intervals, mirroring the labels fuzzification will assign
    let tally_series = match config.boundary_mode {
        crate::fuzzify::BoundaryMode::Strict => series.clone(),
        crate::fuzzify::BoundaryMode::Clamp => TimeSeries::new(
            series
                .points()
                .iter()
                .map(|&(year, value)| (year, value.clamp(universe.lo(), universe.hi())))
                .collect(),
        )?,
    };
    let base = BasePartition::from_series(
        universe,
        config.base_interval_count,
        &tally_series,
        config.subdivision_counts.clone(),
    )?;
    let partition = Partition::refine(&base)?;
    let fuzzified = fuzzify_series(&partition, series, config.boundary_mode)?;
    let defuzz_table = DefuzzTable::build(&partition)?;
    let model = FlrgModel::build_directed(&fuzzified, config.order_k, config.series_direction)?;
    let evaluation = evaluate(series, &partition, &defuzz_table, &fuzzified)?;
    Ok(PipelineOutput {
        base,
        partition,
        fuzzified,
        defuzz_table,
        model,
        evaluation,
    })
}

/// Runs the pipeline and scores it against named reference forecasts.
/// The proposed method is appended after the references.
pub fn compare_with_references(
    config: &RunConfig,
    series: &TimeSeries,
    references: &[(String, TimeSeries)],
) -> Result<ComparisonReport> {
    let output = run(config, series)?;
    let mut methods: Vec<(String, TimeSeries)> = references.to_vec();
    methods.push(("proposed".to_string(), output.proposed_forecasts()?));
    compare(series, &methods)
}

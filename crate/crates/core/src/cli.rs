//! Command-line interface. Each pipeline stage is a subcommand; `all`
//! chains them. Artifacts go to `--output` (or a conventional default
//! path), a human-readable summary goes to stdout, diagnostics go to
//! stderr.
//!
//! Exit codes: 0 success, 1 usage error, 2 data or domain error.

use std::ffi::OsString;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::data;
use crate::dataio::{
    emit_plot_data, read_comparison_csv, read_fuzzified_csv, read_series_csv,
    write_comparison_csv, write_evaluation_csv, write_fuzzified_csv, write_partition_csv,
    PlotFormat, RunConfig,
};
use crate::error::{Error, Result};
use crate::fuzzify::FuzzifiedSeries;
use crate::metrics::ComparisonReport;
use crate::pipeline;
use crate::series::TimeSeries;

#[derive(Debug, Parser)]
#[command(
    name = "meanfts",
    version,
    about = "Mean-based-partition fuzzy time series forecasting",
    after_help = "Without --input the bundled Belgium accident series is used; without \
                  --config the bundled reproduction preset applies."
)]
struct Cli {
    #[command(subcommand)]
    command: Stage,

    /// Configuration file (`key = value` lines, `#` comments).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Input file; a `year,value` series unless a stage documents
    /// otherwise.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Output file (or directory for `all`). Each stage has a default.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Configuration override, repeatable (e.g. `--set order_k=2`).
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    /// Output format where applicable (`plot` and `all`: svg or tsv).
    #[arg(long, global = true, value_enum, value_name = "FORMAT")]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Tsv,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Stage {
    /// Build the refined interval partition and export it as CSV.
    Partition,
    /// Fuzzify a series against the configured partition.
    Fuzzify,
    /// Build the order-k relationship groups and export the listing.
    Model,
    /// Reconstruct in-sample forecasts and report MSE / AFER.
    Evaluate,
    /// Score the proposed method against the bundled reference methods.
    Compare,
    /// Render the comparison as an SVG chart or TSV plot data.
    Plot,
    /// Run every stage and write all artifacts into a directory.
    All,
}

impl Stage {
    fn name(&self) -> &'static str {
        match self {
            Stage::Partition => "partition",
            Stage::Fuzzify => "fuzzify",
            Stage::Model => "model",
            Stage::Evaluate => "evaluate",
            Stage::Compare => "compare",
            Stage::Plot => "plot",
            Stage::All => "all",
        }
    }
}

/// Parses arguments and runs the invocation, returning the process
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests are successful exits
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let stage = cli.command.name();
    match execute(cli) {
        Ok(()) => 0,
        Err(Failure::Usage(message)) => {
            eprintln!("meanfts: usage error: {message}");
            1
        }
        Err(Failure::Stage(err)) => {
            eprintln!("meanfts: {stage}: {err}");
            2
        }
    }
}

enum Failure {
    Usage(String),
    Stage(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Stage(err)
    }
}

fn execute(cli: Cli) -> std::result::Result<(), Failure> {
    let config = load_config(&cli)?;
    match cli.command {
        Stage::Partition => run_partition(&cli, &config),
        Stage::Fuzzify => run_fuzzify(&cli, &config),
        Stage::Model => run_model(&cli, &config),
        Stage::Evaluate => run_evaluate(&cli, &config),
        Stage::Compare => run_compare(&cli, &config),
        Stage::Plot => run_plot(&cli, &config),
        Stage::All => run_all(&cli, &config),
    }
}

fn load_config(cli: &Cli) -> std::result::Result<RunConfig, Failure> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::parse(&read_file(path)?).map_err(Failure::Stage)?,
        None => RunConfig::default(),
    };
    for item in &cli.overrides {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--set expects KEY=VALUE, got `{item}`")))?;
        config
            .set(key.trim(), value.trim())
            .map_err(|err| Failure::Usage(err.to_string()))?;
    }
    config.validate().map_err(Failure::Stage)?;
    Ok(config)
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|err| {
        Error::Io(io::Error::new(
            err.kind(),
            format!("{}: {err}", path.display()),
        ))
    })
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|err| {
        Error::Io(io::Error::new(
            err.kind(),
            format!("{}: {err}", path.display()),
        ))
    })
}

/// Accepts tsv/svg for the plot-emitting stages, rejecting csv.
fn plot_format(cli: &Cli) -> std::result::Result<PlotFormat, Failure> {
    match cli.format {
        None | Some(Format::Svg) => Ok(PlotFormat::Svg),
        Some(Format::Tsv) => Ok(PlotFormat::Tsv),
        Some(Format::Csv) => Err(Failure::Usage(
            "plot output supports --format svg or tsv".into(),
        )),
    }
}

/// Rejects non-csv formats for the csv-emitting stages.
fn require_csv(cli: &Cli) -> std::result::Result<(), Failure> {
    match cli.format {
        None | Some(Format::Csv) => Ok(()),
        Some(_) => Err(Failure::Usage(
            "this stage only writes csv; drop --format or pass csv".into(),
        )),
    }
}

fn load_series(cli: &Cli) -> Result<TimeSeries> {
    match &cli.input {
        Some(path) => read_series_csv(read_file(path)?.as_bytes()),
        None => Ok(data::belgium_accidents()),
    }
}

/// Series input for stages that also accept a fuzzified export. The
/// labels are recomputed from the configured partition when only a
/// plain series is given.
fn load_labeled(
    cli: &Cli,
    config: &RunConfig,
) -> Result<(TimeSeries, crate::partition::Partition, FuzzifiedSeries)> {
    let universe = config.universe()?;
    let text = match &cli.input {
        Some(path) => read_file(path)?,
        None => data::BELGIUM_ACCIDENTS_CSV.to_string(),
    };
    let header = text.lines().next().unwrap_or("").trim();
    let refine = |series: &TimeSeries| -> Result<crate::partition::Partition> {
        let base = crate::partition::BasePartition::from_series(
            universe,
            config.base_interval_count,
            series,
            config.subdivision_counts.clone(),
        )?;
        crate::partition::Partition::refine(&base)
    };
    if header.starts_with("year,value,label") {
        // labels come from the file; geometry is rebuilt from config
        let (series, raw) = read_fuzzified_csv(text.as_bytes(), usize::MAX)?;
        let partition = refine(&series)?;
        let fuzzified = FuzzifiedSeries::new(raw.labels().to_vec(), partition.len())?;
        Ok((series, partition, fuzzified))
    } else {
        let series = read_series_csv(text.as_bytes())?;
        let partition = refine(&series)?;
        let fuzzified = crate::fuzzify::fuzzify_series(&partition, &series, config.boundary_mode)?;
        Ok((series, partition, fuzzified))
    }
}

fn output_path(cli: &Cli, default_name: &str) -> PathBuf {
    cli.output
        .clone()
        .unwrap_or_else(|| PathBuf::from(default_name))
}

fn run_partition(cli: &Cli, config: &RunConfig) -> std::result::Result<(), Failure> {
    require_csv(cli)?;
    let series = load_series(cli)?;
    let output = pipeline::run(config, &series)?;
    let path = output_path(cli, "partition.csv");
    let mut buffer = Vec::new();
    write_partition_csv(&output.partition, &mut buffer)?;
    write_file(&path, &buffer)?;
    println!(
        "universe = [{}, {}]",
        config.universe_lo, config.universe_hi
    );
    println!("base intervals = {}", config.base_interval_count);
    println!("intervals = {}", output.partition.len());
    println!("wrote {}", path.display());
    Ok(())
}

fn run_fuzzify(cli: &Cli, config: &RunConfig) -> std::result::Result<(), Failure> {
    require_csv(cli)?;
    let series = load_series(cli)?;
    let output = pipeline::run(config, &series)?;
    let path = output_path(cli, "fuzzified.csv");
    let mut buffer = Vec::new();
    write_fuzzified_csv(&series, &output.fuzzified, &output.partition, &mut buffer)?;
    write_file(&path, &buffer)?;
    println!("intervals = {}", output.partition.len());
    println!("points = {}", series.len());
    println!("wrote {}", path.display());
    Ok(())
}

fn run_model(cli: &Cli, config: &RunConfig) -> std::result::Result<(), Failure> {
    require_csv(cli)?;
    let (_, _, fuzzified) = load_labeled(cli, config)?;
    let model = crate::model::FlrgModel::build_directed(
        &fuzzified,
        config.order_k,
        config.series_direction,
    )?;
    let path = output_path(cli, "model.txt");
    write_file(&path, model.to_listing().as_bytes())?;
    println!("order = {}", model.k());
    println!("relationships = {}", model.relationship_count());
    println!("groups = {}", model.len());
    println!("wrote {}", path.display());
    Ok(())
}

fn run_evaluate(cli: &Cli, config: &RunConfig) -> std::result::Result<(), Failure> {
    require_csv(cli)?;
    let (series, partition, fuzzified) = load_labeled(cli, config)?;
    let table = crate::model::DefuzzTable::build(&partition)?;
    let report = crate::metrics::evaluate(&series, &partition, &table, &fuzzified)?;
    let path = output_path(cli, "evaluation.csv");
    let mut buffer = Vec::new();
    write_evaluation_csv(&report, &mut buffer)?;
    write_file(&path, &buffer)?;
    println!("rows = {}", report.rows.len());
    println!("MSE = {:.2}", report.mse);
    println!("AFER = {:.6}%", report.afer);
    println!("wrote {}", path.display());
    Ok(())
}

fn build_comparison(cli: &Cli, config: &RunConfig) -> Result<ComparisonReport> {
    let series = load_series(cli)?;
    pipeline::compare_with_references(
        config,
        &series,
        &[
            ("jilani".to_string(), data::reference_jilani()),
            ("lee".to_string(), data::reference_lee()),
        ],
    )
}

fn print_comparison_summary(report: &ComparisonReport) {
    println!("{:<12} {:>12} {:>12}", "method", "MSE", "AFER%");
    for method in &report.methods {
        println!(
            "{:<12} {:>12.2} {:>12.6}",
            method.name, method.mse, method.afer
        );
    }
    if let (Some(by_mse), Some(by_afer)) = (report.best_by_mse(), report.best_by_afer()) {
        println!("best by MSE = {}", by_mse.name);
        println!("best by AFER = {}", by_afer.name);
    }
}

fn run_compare(cli: &Cli, config: &RunConfig) -> std::result::Result<(), Failure> {
    require_csv(cli)?;
    let report = build_comparison(cli, config)?;
    let path = output_path(cli, "comparison.csv");
    let mut buffer = Vec::new();
    write_comparison_csv(&report, &mut buffer)?;
    write_file(&path, &buffer)?;
    print_comparison_summary(&report);
    println!("wrote {}", path.display());
    Ok(())
}

fn run_plot(cli: &Cli, config: &RunConfig) -> std::result::Result<(), Failure> {
    let format = plot_format(cli)?;
    // accept a comparison export; otherwise rebuild from the series
    let report = match &cli.input {
        Some(path) => {
            let text = read_file(path)?;
            if text.starts_with("year,actual") {
                read_comparison_csv(text.as_bytes())?
            } else {
                build_comparison(cli, config)?
            }
        }
        None => build_comparison(cli, config)?,
    };
    let rendered = emit_plot_data(&report, format)?;
    let default_name = match format {
        PlotFormat::Svg => "comparison.svg",
        PlotFormat::Tsv => "comparison.tsv",
    };
    let path = output_path(cli, default_name);
    write_file(&path, rendered.as_bytes())?;
    println!("series = {}", report.methods.len() + 1);
    println!("wrote {}", path.display());
    Ok(())
}

fn run_all(cli: &Cli, config: &RunConfig) -> std::result::Result<(), Failure> {
    let format = plot_format(cli)?;
    let dir = output_path(cli, "out");
    fs::create_dir_all(&dir).map_err(|err| {
        Failure::Stage(Error::Io(io::Error::new(
            err.kind(),
            format!("{}: {err}", dir.display()),
        )))
    })?;

    let series = load_series(cli)?;
    let output = pipeline::run(config, &series)?;
    let comparison = pipeline::compare_with_references(
        config,
        &series,
        &[
            ("jilani".to_string(), data::reference_jilani()),
            ("lee".to_string(), data::reference_lee()),
        ],
    )?;

    let mut buffer = Vec::new();
    write_partition_csv(&output.partition, &mut buffer)?;
    write_file(&dir.join("partition.csv"), &buffer)?;

    buffer.clear();
    write_fuzzified_csv(&series, &output.fuzzified, &output.partition, &mut buffer)?;
    write_file(&dir.join("fuzzified.csv"), &buffer)?;

    write_file(&dir.join("model.txt"), output.model.to_listing().as_bytes())?;

    buffer.clear();
    write_evaluation_csv(&output.evaluation, &mut buffer)?;
    write_file(&dir.join("evaluation.csv"), &buffer)?;

    buffer.clear();
    write_comparison_csv(&comparison, &mut buffer)?;
    write_file(&dir.join("comparison.csv"), &buffer)?;

    let plot_name = match format {
        PlotFormat::Svg => "comparison.svg",
        PlotFormat::Tsv => "comparison.tsv",
    };
    let rendered = emit_plot_data(&comparison, format)?;
    write_file(&dir.join(plot_name), rendered.as_bytes())?;

    println!("intervals = {}", output.partition.len());
    println!(
        "groups = {} (order {}, {} relationships)",
        output.model.len(),
        output.model.k(),
        output.model.relationship_count()
    );
    println!("MSE = {:.2}", output.evaluation.mse);
    println!("AFER = {:.6}%", output.evaluation.afer);
    print_comparison_summary(&comparison);
    println!("wrote {}", dir.display());
    Ok(())
}

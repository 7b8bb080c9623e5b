//! File ingestion and export: series CSVs (with thousands separators),
//! the evaluation report, and the comparison table.
//!
//! Run with: cargo run -p meanfts --example csv_io

use meanfts::dataio::{
    read_series_csv, write_comparison_csv, write_evaluation_csv, write_series_csv, RunConfig,
};
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    // values may carry thousands separators when quoted
    let csv = "year,value\n2004,953\n1984,\"1,369\"\n1974,\"1,574\"\n";
    let series = read_series_csv(csv.as_bytes())?;
    println!("parsed {} rows (normalized ascending):", series.len());
    for (year, value) in series.points() {
        println!("  {year}: {value}");
    }

    let mut round_trip = Vec::new();
    write_series_csv(&series, &mut round_trip)?;
    println!("\nround-trip output:\n{}", String::from_utf8_lossy(&round_trip));

    let full = data::belgium_accidents();
    let output = pipeline::run(&RunConfig::default(), &full)?;
    let mut evaluation = Vec::new();
    write_evaluation_csv(&output.evaluation, &mut evaluation)?;
    let text = String::from_utf8_lossy(&evaluation);
    println!("evaluation export, first and last lines:");
    for line in text.lines().take(3) {
        println!("  {line}");
    }
    println!("  ...");
    for line in text.lines().skip(text.lines().count() - 2) {
        println!("  {line}");
    }

    let comparison = pipeline::compare_with_references(
        &RunConfig::default(),
        &full,
        &[
            ("jilani".to_string(), data::reference_jilani()),
            ("lee".to_string(), data::reference_lee()),
        ],
    )?;
    let mut buffer = Vec::new();
    write_comparison_csv(&comparison, &mut buffer)?;
    let text = String::from_utf8_lossy(&buffer);
    println!("\ncomparison export, header and footers:");
    println!("  {}", text.lines().next().unwrap());
    for line in text.lines().skip(text.lines().count() - 2) {
        println!("  {line}");
    }
    Ok(())
}

//! Render the method comparison as an SVG line chart and as TSV plot
//! data.
//!
//! Run with: cargo run -p meanfts --example plot_chart

use std::fs;

use meanfts::dataio::{emit_plot_data, PlotFormat, RunConfig};
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    let report = pipeline::compare_with_references(
        &RunConfig::default(),
        &data::belgium_accidents(),
        &[
            ("jilani".to_string(), data::reference_jilani()),
            ("lee".to_string(), data::reference_lee()),
        ],
    )?;

    let dir = std::env::temp_dir();
    let svg = emit_plot_data(&report, PlotFormat::Svg)?;
    let svg_path = dir.join("comparison.svg");
    fs::write(&svg_path, &svg)?;
    println!("wrote {} ({} bytes)", svg_path.display(), svg.len());

    let tsv = emit_plot_data(&report, PlotFormat::Tsv)?;
    let tsv_path = dir.join("comparison.tsv");
    fs::write(&tsv_path, &tsv)?;
    println!("wrote {} ({} lines)", tsv_path.display(), tsv.lines().count());

    println!("\nfirst TSV lines:");
    for line in tsv.lines().take(4) {
        println!("  {line}");
    }
    Ok(())
}

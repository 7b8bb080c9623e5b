//! Score the pipeline against the bundled reference forecast columns.
//!
//! Run with: cargo run -p meanfts --example compare_methods

use meanfts::dataio::RunConfig;
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

    println!("{:<12} {:>12} {:>12}", "method", "MSE", "AFER %");
    for method in &report.methods {
        println!(
            "{:<12} {:>12.2} {:>12.6}",
            method.name, method.mse, method.afer
        );
    }
    println!(
        "\nsmallest MSE:  {}\nsmallest AFER: {}",
        report.best_by_mse().unwrap().name,
        report.best_by_afer().unwrap().name
    );
    Ok(())
}

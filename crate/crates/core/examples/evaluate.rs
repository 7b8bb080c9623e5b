//! Reconstruct the in-sample forecasts and score them: one row per
//! year with midpoint, forecast, squared error, and relative error.
//!
//! Run with: cargo run -p meanfts --example evaluate

use meanfts::dataio::RunConfig;
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents())?;
    let report = &output.evaluation;

    println!("year   actual     midpoint     forecast    sq. error   rel. error");
    for row in &report.rows {
        println!(
            "{}   {:6}   {:10.4}   {:10.4}   {:10.4}   {:10.4}",
            row.year, row.actual, row.midpoint, row.forecast, row.squared_error, row.relative_error
        );
    }
    println!("\nMSE  = {:.2}", report.mse);
    println!("AFER = {:.6} %", report.afer);
    Ok(())
}

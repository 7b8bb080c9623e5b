//! Run the pipeline under a non-default configuration and compare the
//! resulting accuracy with the preset.
//!
//! Run with: cargo run -p meanfts --example custom_config

use meanfts::dataio::RunConfig;
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    let series = data::belgium_accidents();

    let preset = RunConfig::default();
    let baseline = pipeline::run(&preset, &series)?;
    println!(
        "preset  counts {:?} order {}: {} intervals, MSE {:8.2}, AFER {:.6} %",
        preset.subdivision_counts,
        preset.order_k,
        baseline.partition.len(),
        baseline.evaluation.mse,
        baseline.evaluation.afer
    );

    // config text uses the same grammar as a config file on disk
    let custom = RunConfig::parse(
        "subdivision_counts = 2,8,12,7   # frequency-proportional for 29\norder_k = 2\n",
    )?;
    let run = pipeline::run(&custom, &series)?;
    println!(
        "custom  counts {:?} order {}: {} intervals, MSE {:8.2}, AFER {:.6} %",
        custom.subdivision_counts,
        custom.order_k,
        run.partition.len(),
        run.evaluation.mse,
        run.evaluation.afer
    );

    // a coarser partition forecasts worse
    let coarse = RunConfig {
        subdivision_counts: vec![1, 2, 3, 2],
        ..RunConfig::default()
    };
    let run = pipeline::run(&coarse, &series)?;
    println!(
        "coarse  counts {:?} order {}: {} intervals, MSE {:8.2}, AFER {:.6} %",
        coarse.subdivision_counts,
        coarse.order_k,
        run.partition.len(),
        run.evaluation.mse,
        run.evaluation.afer
    );
    Ok(())
}

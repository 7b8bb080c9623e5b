//! Fuzzify the bundled series: every crisp value gets the label of the
//! interval where its triangular membership peaks.
//!
//! Run with: cargo run -p meanfts --example fuzzify_series

use meanfts::dataio::RunConfig;
use meanfts::fuzzify::membership_vector;
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    let series = data::belgium_accidents();
    let output = pipeline::run(&RunConfig::default(), &series)?;

    println!("year   value   label   interval");
    for (&(year, value), &(_, label)) in series.points().iter().zip(output.fuzzified.labels()) {
        let (lo, hi) = output.partition.interval(label).unwrap();
        println!("{year}   {value:6}   A{label:<4} [{lo:9.4}, {hi:9.4})");
    }

    // grades are 1 on the set's own interval and 0.5 on its neighbors
    println!("\ntriangular membership of A15 over 29 sets:");
    for (index, grade) in membership_vector(&output.partition, 15)? {
        println!("  u{index}: {grade}");
    }
    Ok(())
}

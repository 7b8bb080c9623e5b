//! Build the two-stage interval partition for the bundled series.
//!
//! Run with: cargo run -p meanfts --example partition

use meanfts::partition::{
    build_base_partition, suggest_subdivision_counts, BasePartition, Partition, Universe,
};
use meanfts::{data, Result};

fn main() -> Result<()> {
    let series = data::belgium_accidents();
    let universe = Universe::new(900.0, 1700.0)?;

    let base_intervals = build_base_partition(&universe, 4)?;
    println!("base intervals over [{}, {}]:", universe.lo(), universe.hi());
    let base = BasePartition::from_series(universe, 4, &series, vec![1, 6, 13, 9])?;
    for ((lo, hi), (freq, count)) in base_intervals
        .iter()
        .zip(base.frequencies().iter().zip(base.subdivision_counts()))
    {
        println!("  [{lo:7.1}, {hi:7.1}]  observations: {freq:2}  subintervals: {count:2}");
    }

    // the counts above are the reproduction preset; this is what a
    // frequency-proportional apportionment would pick instead
    let suggested = suggest_subdivision_counts(base.frequencies(), 29)?;
    println!("\nfrequency-proportional suggestion for 29 intervals: {suggested:?}");

    let partition = Partition::refine(&base)?;
    println!("\nrefined partition ({} intervals):", partition.len());
    for (idx, (lo, hi)) in partition.intervals().enumerate() {
        let mid = partition.midpoint(idx + 1).unwrap();
        println!("  u{:<2} [{lo:9.4}, {hi:9.4}]  midpoint {mid:9.4}", idx + 1);
    }
    Ok(())
}

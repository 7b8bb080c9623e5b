//! The weighted harmonic-mean defuzzification table: each label's
//! crisp forecast from the midpoints of its interval and neighbors.
//!
//! Run with: cargo run -p meanfts --example defuzzify

use meanfts::dataio::RunConfig;
use meanfts::model::DefuzzTable;
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents())?;
    let partition = &output.partition;
    let table = DefuzzTable::build(partition)?;

    println!("label   midpoint a_j      t_j");
    for j in 1..=partition.len() {
        println!(
            "A{j:<5} {:12.4} {:12.4}",
            partition.midpoint(j).unwrap(),
            table.value(j).unwrap()
        );
    }

    let n = partition.len();
    println!("\nedge labels drop the missing neighbor:");
    println!(
        "  t_1 = 1.5 / (1/a_1 + 0.5/a_2)            = {:.4}",
        table.value(1).unwrap()
    );
    println!(
        "  t_n = 1.5 / (0.5/a_{} + 1/a_{n})         = {:.4}",
        n - 1,
        table.value(n).unwrap()
    );
    println!(
        "  t_15 = 2 / (0.5/a_14 + 1/a_15 + 0.5/a_16) = {:.4}",
        table.value(15).unwrap()
    );
    Ok(())
}

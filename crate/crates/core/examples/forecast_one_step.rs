//! One-step forecasting from the k most recent labels, including the
//! fallback when no relationship group matches.
//!
//! Run with: cargo run -p meanfts --example forecast_one_step

use meanfts::dataio::RunConfig;
use meanfts::model::{forecast_next, Fallback};
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents())?;
    let model = &output.model;
    let table = &output.defuzz_table;

    // the three most recent labels (2002, 2003, 2004)
    let labels = output.fuzzified.label_sequence();
    let recent: Vec<usize> = labels[labels.len() - 3..].to_vec();
    println!("labels for 2002..2004: {recent:?}");

    match forecast_next(model, table, &recent, Fallback::Persist)? {
        (forecast, true) => println!("2005 forecast (matched group): {forecast:.4}"),
        (forecast, false) => println!("2005 forecast (no match, persisted): {forecast:.4}"),
    }

    // an antecedent the data never produced
    let unseen = [1, 1, 1];
    let (forecast, matched) = forecast_next(model, table, &unseen, Fallback::Persist)?;
    println!("unseen antecedent {unseen:?}: matched = {matched}, forecast = {forecast:.4}");

    // the same lookup under the erroring fallback
    match forecast_next(model, table, &unseen, Fallback::Error) {
        Err(err) => println!("with fallback=error: {err}"),
        Ok(_) => unreachable!("antecedent is absent from the model"),
    }
    Ok(())
}

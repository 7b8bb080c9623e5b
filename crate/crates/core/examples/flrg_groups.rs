//! Third-order fuzzy logical relationship groups, in both enumeration
//! directions.
//!
//! Run with: cargo run -p meanfts --example flrg_groups

use meanfts::dataio::RunConfig;
use meanfts::model::{FlrgModel, SeriesDirection};
use meanfts::{data, pipeline, Result};

fn main() -> Result<()> {
    let output = pipeline::run(&RunConfig::default(), &data::belgium_accidents())?;

    let ascending = FlrgModel::build(&output.fuzzified, 3)?;
    println!(
        "ascending (chronological): {} relationships, {} groups",
        ascending.relationship_count(),
        ascending.len()
    );
    print!("{}", ascending.to_listing());

    let descending =
        FlrgModel::build_directed(&output.fuzzified, 3, SeriesDirection::Descending)?;
    println!(
        "\ndescending (newest first): {} relationships, {} groups",
        descending.relationship_count(),
        descending.len()
    );
    print!("{}", descending.to_listing());
    Ok(())
}

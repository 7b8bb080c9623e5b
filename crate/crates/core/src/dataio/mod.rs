//! File formats: series and report CSVs, run configuration, plot data.

mod config;
mod csv;
mod plot;

pub use config::RunConfig;
pub use csv::{
    read_comparison_csv, read_fuzzified_csv, read_series_csv, write_comparison_csv,
    write_evaluation_csv, write_fuzzified_csv, write_partition_csv, write_series_csv,
};
pub use plot::{emit_plot_data, PlotFormat};

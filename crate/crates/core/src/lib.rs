//! Mean-based-partition fuzzy time series forecasting.
//!
//! The pipeline splits a series' universe of discourse into equal base
//! intervals, refines each base interval into frequency-driven
//! subintervals, fuzzifies crisp values with triangular membership,
//! builds order-k fuzzy logical relationship groups, and defuzzifies
//! with a weighted harmonic mean of neighboring interval midpoints.
//! An evaluation harness scores the in-sample reconstruction (MSE,
//! AFER) and compares it against bundled reference methods.
//!
//! ```
//! use meanfts::{data, dataio::RunConfig, pipeline};
//!
//! let series = data::belgium_accidents();
//! let output = pipeline::run(&RunConfig::default(), &series).unwrap();
//! assert_eq!(output.partition.len(), 29);
//! assert!((output.evaluation.mse - 275.77).abs() < 0.5);
//! ```
//!
//! Every operation is a pure function of its inputs and every type is
//! immutable after construction, so values can be shared freely across
//! threads.

pub mod cli;
pub mod data;
pub mod dataio;
pub mod error;
pub mod fuzzify;
pub mod metrics;
pub mod model;
pub mod partition;
pub mod pipeline;
pub mod series;

pub use error::{Error, Result};
pub use series::TimeSeries;

//! Bundled reference data: the Belgium road-accident series and the
//! two reference forecast columns used by the comparison report.

use crate::dataio::read_series_csv;
use crate::series::TimeSeries;

/// Yearly road-accident fatalities in Belgium, 1974-2004.
pub const BELGIUM_ACCIDENTS_CSV: &str = include_str!("../data/belgium_accidents.csv");

/// Reference forecasts of the Jilani method over the same years.
pub const REFERENCE_JILANI_CSV: &str = include_str!("../data/reference_jilani.csv");

/// Reference forecasts of the Lee method over the same years.
pub const REFERENCE_LEE_CSV: &str = include_str!("../data/reference_lee.csv");

/// The default run configuration, as a config file.
pub const PRESET_CONF: &str = include_str!("../data/paper_preset.conf");

/// The bundled accident series, parsed.
pub fn belgium_accidents() -> TimeSeries {
    read_series_csv(BELGIUM_ACCIDENTS_CSV.as_bytes()).expect("bundled series is well-formed")
}

/// The bundled Jilani reference forecasts, parsed.
pub fn reference_jilani() -> TimeSeries {
    read_series_csv(REFERENCE_JILANI_CSV.as_bytes()).expect("bundled reference is well-formed")
}

/// The bundled Lee reference forecasts, parsed.
pub fn reference_lee() -> TimeSeries {
    read_series_csv(REFERENCE_LEE_CSV.as_bytes()).expect("bundled reference is well-formed")
}

//! Run configuration: flat `key = value` text with `#` comments and
//! comma-separated lists.

use crate::error::{Error, Result};
use crate::fuzzify::BoundaryMode;
use crate::model::{Fallback, SeriesDirection};
use crate::partition::Universe;

/// Every knob of the pipeline. `RunConfig::default()` is the bundled
/// reproduction preset for the Belgium series.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub universe_lo: f64,
    pub universe_hi: f64,
    pub base_interval_count: usize,
    pub subdivision_counts: Vec<usize>,
    pub order_k: usize,
    pub boundary_mode: BoundaryMode,
    pub fallback: Fallback,
    pub series_direction: SeriesDirection,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            universe_lo: 900.0,
            universe_hi: 1700.0,
            base_interval_count: 4,
            subdivision_counts: vec![1, 6, 13, 9],
            order_k: 3,
            boundary_mode: BoundaryMode::Strict,
            fallback: Fallback::Persist,
            series_direction: SeriesDirection::Ascending,
        }
    }
}

impl RunConfig {
    /// Parses config text on top of the defaults. Unknown keys and
    /// malformed values are parse errors carrying the line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut config = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: idx + 1,
                message: format!("expected `key = value`, got `{raw}`"),
            })?;
            config
                .set(key.trim(), value.trim())
                .map_err(|err| Error::Parse {
                    line: idx + 1,
                    message: err.to_string(),
                })?;
        }
        config.validate()?;
        Ok(config)
    }

    /// Applies a single `key = value` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::InvalidArgument(format!("{what} `{value}` for key {key}"));
        match key {
            "universe_lo" => self.universe_lo = value.parse().map_err(|_| bad("invalid number"))?,
            "universe_hi" => self.universe_hi = value.parse().map_err(|_| bad("invalid number"))?,
            "base_interval_count" => {
                self.base_interval_count = value.parse().map_err(|_| bad("invalid count"))?
            }
            "subdivision_counts" => {
                self.subdivision_counts = value
                    .split(',')
                    .map(|part| part.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("invalid count list"))?
            }
            "order_k" => self.order_k = value.parse().map_err(|_| bad("invalid order"))?,
            "boundary_mode" => {
                self.boundary_mode = match value {
                    "strict" => BoundaryMode::Strict,
                    "clamp" => BoundaryMode::Clamp,
                    _ => return Err(bad("unknown boundary mode")),
                }
            }
            "fallback" => {
                self.fallback = match value {
                    "persist" => Fallback::Persist,
                    "error" => Fallback::Error,
                    _ => return Err(bad("unknown fallback")),
                }
            }
            "series_direction" => {
                self.series_direction = match value {
                    "ascending" => SeriesDirection::Ascending,
                    "descending" | "paper-listing-descending" => SeriesDirection::Descending,
                    _ => return Err(bad("unknown series direction")),
                }
            }
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown configuration key `{key}`"
                )))
            }
        }
        Ok(())
    }

    /// Cross-field invariants.
    pub fn validate(&self) -> Result<()> {
        if self.universe_lo >= self.universe_hi {
            return Err(Error::InvalidArgument(format!(
                "universe_lo {} must be below universe_hi {}",
                self.universe_lo, self.universe_hi
            )));
        }
        if self.base_interval_count == 0 {
            return Err(Error::InvalidArgument(
                "base_interval_count must be at least 1".into(),
            ));
        }
        if self.subdivision_counts.len() != self.base_interval_count {
            return Err(Error::InvalidArgument(format!(
                "subdivision_counts has {} entries but base_interval_count is {}",
                self.subdivision_counts.len(),
                self.base_interval_count
            )));
        }
        if self.subdivision_counts.contains(&0) {
            return Err(Error::InvalidArgument(
                "subdivision_counts entries must be at least 1".into(),
            ));
        }
        if self.order_k == 0 {
            return Err(Error::InvalidArgument("order_k must be at least 1".into()));
        }
        Ok(())
    }

    pub fn universe(&self) -> Result<Universe> {
        Universe::new(self.universe_lo, self.universe_hi)
    }
}

//! Error type shared across the crate.

/// Errors returned by this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied argument violated a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A value fell outside the universe of discourse. Carries the
    /// offending year when the value came from a series.
    #[error("value {value} {} lies outside the universe [{lo}, {hi}]", year.map(|y| format!("(year {y})")).unwrap_or_default())]
    OutOfUniverse {
        year: Option<i32>,
        value: f64,
        lo: f64,
        hi: f64,
    },
    /// A text input could not be parsed. `line` is 1-based and counts
    /// the header.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// The same year appeared twice in a series input.
    #[error("duplicate year {0} in series")]
    DuplicateYear(i32),
    /// A series input contained a header but no data rows.
    #[error("no data rows in input")]
    EmptyData,
    /// The series is too short for the requested model order.
    #[error("series of {len} points cannot support order {k}; at least {min} points are required")]
    InsufficientData { len: usize, k: usize, min: usize },
    /// No relationship group matches the supplied antecedent.
    #[error("no relationship group matches antecedent {0:?}")]
    NoMatch(Vec<usize>),
    /// The weighted harmonic mean is undefined for non-positive midpoints.
    #[error("defuzzification requires positive midpoints, found {0}")]
    NonPositiveMidpoint(f64),
    /// Defuzzification needs at least two intervals.
    #[error("partition with a single interval cannot be defuzzified")]
    UnsupportedPartition,
    /// Relative error is undefined for non-positive actual values.
    #[error("relative error undefined for non-positive actual value {0}")]
    NonPositiveActual(f64),
    /// Two inputs that must describe the same data disagree.
    #[error("inconsistent inputs: {0}")]
    Inconsistency(String),
    /// An underlying I/O operation failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Plot-data emission for the comparison report: a tab-separated table
//! for external tooling, or a self-contained SVG line chart.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::metrics::ComparisonReport;

/// Output format for [`emit_plot_data`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Tsv,
}

impl std::str::FromStr for PlotFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(PlotFormat::Svg),
            "tsv" => Ok(PlotFormat::Tsv),
            other => Err(Error::InvalidArgument(format!(
                "unknown plot format `{other}` (expected svg or tsv)"
            ))),
        }
    }
}

/// Renders the comparison as plot data. Output is a deterministic
/// function of the report.
pub fn emit_plot_data(report: &ComparisonReport, format: PlotFormat) -> Result<String> {
    if report.actuals.is_empty() {
        return Err(Error::InvalidArgument("nothing to plot".into()));
    }
    Ok(match format {
        PlotFormat::Tsv => render_tsv(report),
        PlotFormat::Svg => render_svg(report),
    })
}

fn render_tsv(report: &ComparisonReport) -> String {
    let mut out = String::from("year\tactual");
    for method in &report.methods {
        out.push('\t');
        out.push_str(&method.name);
    }
    out.push('\n');
    for (idx, &(year, actual)) in report.actuals.iter().enumerate() {
        let _ = write!(out, "{year}\t{actual}");
        for method in &report.methods {
            let _ = write!(out, "\t{}", method.forecasts[idx].1);
        }
        out.push('\n');
    }
    out
}

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 560.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 190.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;

/// Actuals use the first color; methods take the rest in order.
const PALETTE: [&str; 7] = [
    "#222222", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
];

fn render_svg(report: &ComparisonReport) -> String {
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;

    let years: Vec<f64> = report.actuals.iter().map(|&(y, _)| y as f64).collect();
    let x_min = years.first().copied().unwrap_or(0.0);
    let x_max = years.last().copied().unwrap_or(1.0).max(x_min + 1.0);

    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for &(_, v) in &report.actuals {
        y_min = y_min.min(v);
        y_max = y_max.max(v);
    }
    for method in &report.methods {
        for &(_, v) in &method.forecasts {
            y_min = y_min.min(v);
            y_max = y_max.max(v);
        }
    }
    if y_min == y_max {
        y_min -= 1.0;
        y_max += 1.0;
    }
    let y_step = nice_step((y_max - y_min) / 6.0);
    let y_lo = (y_min / y_step).floor() * y_step;
    let y_hi = (y_max / y_step).ceil() * y_step;

    let x_pos = |year: f64| MARGIN_LEFT + (year - x_min) / (x_max - x_min) * plot_w;
    let y_pos = |value: f64| MARGIN_TOP + (y_hi - value) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r##"<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">Forecast comparison</text>"#,
        MARGIN_LEFT + plot_w / 2.0
    );

    // gridlines and y ticks
    let mut tick = y_lo;
    while tick <= y_hi + y_step / 2.0 {
        let y = y_pos(tick);
        let _ = writeln!(
            svg,
            r##"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#dddddd" stroke-width="1"/>"##,
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"#,
            MARGIN_LEFT - 8.0,
            y + 4.0,
            format_tick(tick)
        );
        tick += y_step;
    }

    // x ticks
    let x_step = nice_step((x_max - x_min) / 8.0).max(1.0);
    let mut year_tick = (x_min / x_step).ceil() * x_step;
    while year_tick <= x_max + x_step / 2.0 {
        let x = x_pos(year_tick);
        let _ = writeln!(
            svg,
            r##"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="#aaaaaa" stroke-width="1"/>"##,
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 6.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>"#,
            MARGIN_TOP + plot_h + 20.0,
            format_tick(year_tick)
        );
        year_tick += x_step;
    }

    // axes
    let _ = writeln!(
        svg,
        r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#000000" stroke-width="1"/>"##,
        MARGIN_LEFT,
        MARGIN_TOP + plot_h,
        MARGIN_LEFT + plot_w,
        MARGIN_TOP + plot_h
    );
    let _ = writeln!(
        svg,
        r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#000000" stroke-width="1"/>"##,
        MARGIN_LEFT, MARGIN_TOP, MARGIN_LEFT, MARGIN_TOP + plot_h
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">year</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 16.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle" transform="rotate(-90 20 {:.2})">value</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    );

    // one polyline per series, actuals first
    let mut series: Vec<(&str, Vec<(f64, f64)>)> = Vec::with_capacity(report.methods.len() + 1);
    series.push((
        "actual",
        report
            .actuals
            .iter()
            .map(|&(y, v)| (y as f64, v))
            .collect(),
    ));
    for method in &report.methods {
        series.push((
            method.name.as_str(),
            method.forecasts.iter().map(|&(y, v)| (y as f64, v)).collect(),
        ));
    }
    for (idx, (name, points)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let path: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", x_pos(x), y_pos(y)))
            .collect();
        let _ = writeln!(
            svg,
            r##"<polyline fill="none" stroke="{color}" stroke-width="1.8" points="{}"><title>{name}</title></polyline>"##,
            path.join(" ")
        );
    }

    // legend
    let legend_x = MARGIN_LEFT + plot_w + 18.0;
    for (idx, (name, _)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let y = MARGIN_TOP + 12.0 + idx as f64 * 22.0;
        let _ = writeln!(
            svg,
            r##"<line x1="{legend_x:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{color}" stroke-width="3"/>"##,
            legend_x + 24.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{name}</text>"#,
            legend_x + 32.0,
            y + 4.0
        );
    }

    svg.push_str("</svg>\n");
    svg
}

/// Rounds a raw step to 1, 2, or 5 times a power of ten.
fn nice_step(raw: f64) -> f64 {
    if raw <= 0.0 || !raw.is_finite() {
        return 1.0;
    }
    let exp = raw.log10().floor();
    let base = 10f64.powf(exp);
    let fraction = raw / base;
    let nice = if fraction <= 1.0 {
        1.0
    } else if fraction <= 2.0 {
        2.0
    } else if fraction <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * base
}

fn format_tick(value: f64) -> String {
    if value == value.trunc() {
        format!("{}", value as i64)
    } else {
        format!("{value}")
    }
}

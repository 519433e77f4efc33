//! Minimal deterministic SVG line plots.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 500.0;

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;
const TICKS: usize = 5;

const PALETTE: [&str; 10] = [
    "#d62728", "#9467bd", "#1f77b4", "#2ca02c", "#17becf", "#ff7f0e", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxesConfig {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    /// Dashed horizontal line, drawn at `S = 1` by default.
    pub reference_y: Option<f64>,
}

impl Default for AxesConfig {
    fn default() -> Self {
        Self {
            title: String::new(),
            x_label: "x".into(),
            y_label: "straightness".into(),
            reference_y: Some(1.0),
        }
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn span(lo: f64, hi: f64, pad: f64) -> (f64, f64) {
    if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
        (lo - 0.5, hi + 0.5)
    } else {
        let p = (hi - lo) * pad;
        (lo - p, hi + p)
    }
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn render_svg(series: &[Series], axes: &AxesConfig) -> Result<String> {
    let points = series.iter().flat_map(|s| s.points.iter());
    let (mut x_lo, mut x_hi, mut y_lo, mut y_hi) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    let mut any = false;
    for &(x, y) in points {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite("plot coordinate"));
        }
        any = true;
        x_lo = x_lo.min(x);
        x_hi = x_hi.max(x);
        y_lo = y_lo.min(y);
        y_hi = y_hi.max(y);
    }
    if !any {
        return Err(Error::Input("nothing to plot: the table is empty".into()));
    }
    if let Some(r) = axes.reference_y {
        y_lo = y_lo.min(r);
        y_hi = y_hi.max(r);
    }
    let (x_lo, x_hi) = span(x_lo, x_hi, 0.0);
    let (y_lo, y_hi) = span(y_lo, y_hi, 0.05);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut out = String::new();
    // writing into a String cannot fail
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    if !axes.title.is_empty() {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            MARGIN_LEFT + plot_w / 2.0,
            escape(&axes.title)
        );
    }

    let (left, right, top, bottom) = (
        MARGIN_LEFT,
        MARGIN_LEFT + plot_w,
        MARGIN_TOP,
        MARGIN_TOP + plot_h,
    );
    let _ = writeln!(
        out,
        r#"<rect x="{left:.2}" y="{top:.2}" width="{plot_w:.2}" height="{plot_h:.2}" fill="none" stroke="dimgray"/>"#
    );
    for i in 0..TICKS {
        let f = i as f64 / (TICKS - 1) as f64;
        let xv = x_lo + f * (x_hi - x_lo);
        let yv = y_lo + f * (y_hi - y_lo);
        let (px, py) = (sx(xv), sy(yv));
        let _ = writeln!(
            out,
            r#"<line x1="{px:.2}" y1="{bottom:.2}" x2="{px:.2}" y2="{:.2}" stroke="dimgray"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            bottom + 5.0,
            bottom + 20.0,
            tick_label(xv)
        );
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{left:.2}" y2="{py:.2}" stroke="dimgray"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            left - 5.0,
            left - 8.0,
            py + 4.0,
            tick_label(yv)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        left + plot_w / 2.0,
        HEIGHT - 15.0,
        escape(&axes.x_label)
    );
    let _ = writeln!(
        out,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
        top + plot_h / 2.0,
        top + plot_h / 2.0,
        escape(&axes.y_label)
    );

    if let Some(r) = axes.reference_y {
        let py = sy(r);
        let _ = writeln!(
            out,
            r#"<line class="reference" x1="{left:.2}" y1="{py:.2}" x2="{right:.2}" y2="{py:.2}" stroke="black" stroke-dasharray="6,4"/>"#
        );
    }

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        match s.points.as_slice() {
            [] => {}
            [(x, y)] => {
                let _ = writeln!(
                    out,
                    r#"<circle class="series" cx="{:.2}" cy="{:.2}" r="4" fill="{color}"/>"#,
                    sx(*x),
                    sy(*y)
                );
            }
            pts => {
                let coords: Vec<String> = pts
                    .iter()
                    .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                    .collect();
                let _ = writeln!(
                    out,
                    r#"<polyline class="series" fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
                    coords.join(" ")
                );
            }
        }
        let ly = top + 10.0 + 18.0 * i as f64;
        let lx = right + 15.0;
        let _ = writeln!(
            out,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="3"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(&s.name)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Which columns of a table to plot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableLayout {
    pub x: String,
    pub y: String,
    /// Columns whose values together name a series.
    pub group: Vec<String>,
    pub x_label: String,
}

impl TableLayout {
    /// Recognises the curve and sweep tables written by [`crate::output`].
    pub fn infer(headers: &[String]) -> Option<Self> {
        let has = |name: &str| headers.iter().any(|h| h == name);
        let layout = |x: &str, y: &str, group: &[&str], x_label: &str| TableLayout {
            x: x.into(),
            y: y.into(),
            group: group.iter().map(|g| g.to_string()).collect(),
            x_label: x_label.into(),
        };
        if has("alpha") && has("straightness") {
            Some(layout(
                "alpha",
                "straightness",
                &["network", "k"],
                "alpha (radians)",
            ))
        } else if has("squares_per_side") && has("mean") {
            Some(layout("squares_per_side", "mean", &[], "squares per side"))
        } else if has("radii") && has("rings") && has("mean") {
            Some(layout("radii", "mean", &["rings"], "number of radii"))
        } else {
            None
        }
    }
}

/// Splits a CSV table into series. Series appear in order of first
/// occurrence; points keep row order.
pub fn series_from_csv(text: &str, layout: &TableLayout) -> Result<Vec<Series>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Input(format!("missing column `{name}`")))
    };
    let xi = column(&layout.x)?;
    let yi = column(&layout.y)?;
    let gi: Vec<usize> = layout
        .group
        .iter()
        .map(|g| column(g))
        .collect::<Result<_>>()?;

    let mut order: Vec<String> = Vec::new();
    let mut groups: BTreeMap<String, Vec<(f64, f64)>> = BTreeMap::new();
    for record in reader.records() {
        let record = record?;
        let number = |i: usize| -> Result<f64> {
            record[i]
                .parse::<f64>()
                .map_err(|_| Error::Input(format!("non-numeric value `{}`", &record[i])))
        };
        let name = if gi.is_empty() {
            layout.y.clone()
        } else {
            gi.iter()
                .zip(&layout.group)
                .map(|(&i, g)| match g.as_str() {
                    "network" => record[i].to_string(),
                    other => format!("{other}={}", &record[i]),
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        if !groups.contains_key(&name) {
            order.push(name.clone());
        }
        groups
            .entry(name)
            .or_default()
            .push((number(xi)?, number(yi)?));
    }
    if order.is_empty() {
        return Err(Error::Input("nothing to plot: the table is empty".into()));
    }
    Ok(order
        .into_iter()
        .map(|name| {
            let points = groups.remove(&name).unwrap_or_default();
            Series { name, points }
        })
        .collect())
}

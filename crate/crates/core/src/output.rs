//! CSV tables with fixed headers and fixed significant-digit formatting.

use std::io::Write;

use crate::analytic::{CurvePoint, NetworkKind};
use crate::error::Result;
use crate::metrics::RouteMetrics;
use crate::sweep::SweepResult;

pub const CURVE_HEADER: [&str; 4] = ["alpha", "straightness", "network", "k"];
pub const RECT_SWEEP_HEADER: [&str; 5] = [
    "squares_per_side",
    "pair_count",
    "mean",
    "std_dev",
    "skipped",
];
pub const RADIAL_SWEEP_HEADER: [&str; 6] =
    ["radii", "rings", "pair_count", "mean", "std_dev", "skipped"];
pub const PAIRS_HEADER: [&str; 5] = ["u", "v", "d_spatial", "d_geodesic", "straightness"];

pub const ANGLE_DIGITS: usize = 12;
pub const STRAIGHTNESS_DIGITS: usize = 9;

/// Formats `x` with `digits` significant digits in positional notation.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan"
        } else if x > 0.0 {
            "inf"
        } else {
            "-inf"
        }
        .to_string();
    }
    let exponent = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

/// One sampled curve point tagged with its network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub kind: NetworkKind,
    pub point: CurvePoint,
}

pub fn write_curve_csv<W: Write>(out: W, rows: &[CurveRow]) -> Result<()> {
    let mut w = writer(out);
    w.write_record(CURVE_HEADER)?;
    for row in rows {
        w.write_record([
            format_significant(row.point.alpha, ANGLE_DIGITS),
            format_significant(row.point.straightness, STRAIGHTNESS_DIGITS),
            row.kind.name().to_string(),
            row.kind.sector().radii().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn summary_fields(result: &SweepResult) -> [String; 4] {
    let s = &result.summary;
    [
        s.pair_count.to_string(),
        format_significant(s.mean, STRAIGHTNESS_DIGITS),
        format_significant(s.std_dev, STRAIGHTNESS_DIGITS),
        s.skipped_pairs.to_string(),
    ]
}

pub fn write_rect_sweep_csv<W: Write>(out: W, results: &[SweepResult]) -> Result<()> {
    let mut w = writer(out);
    w.write_record(RECT_SWEEP_HEADER)?;
    for r in results {
        let size = r.parameter("squares_per_side").unwrap_or_default();
        let mut record = vec![size.to_string()];
        record.extend(summary_fields(r));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_radial_sweep_csv<W: Write>(out: W, results: &[SweepResult]) -> Result<()> {
    let mut w = writer(out);
    w.write_record(RADIAL_SWEEP_HEADER)?;
    for r in results {
        let mut record = vec![
            r.parameter("radii_count").unwrap_or_default().to_string(),
            r.parameter("rings_count").unwrap_or_default().to_string(),
        ];
        record.extend(summary_fields(r));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// Skipped pairs keep their distances and leave `straightness` empty.
pub fn write_pairs_csv<W: Write>(out: W, pairs: &[RouteMetrics]) -> Result<()> {
    let mut w = writer(out);
    w.write_record(PAIRS_HEADER)?;
    for p in pairs {
        w.write_record([
            p.source.to_string(),
            p.target.to_string(),
            format_significant(p.d_spatial, ANGLE_DIGITS),
            format_significant(p.d_geodesic, ANGLE_DIGITS),
            p.straightness
                .map(|s| format_significant(s, STRAIGHTNESS_DIGITS))
                .unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;

use straightness_core::analytic::{analytic_curve, NetworkKind, Sector};
use straightness_core::generators::{generate_radioconcentric, generate_rectilinear};
use straightness_core::metrics::{pair_metrics, summarize_with, SkipPolicy};
use straightness_core::output::{self, CurveRow};
use straightness_core::svg::{render_svg, series_from_csv, AxesConfig, TableLayout};
use straightness_core::sweep;
use straightness_core::validate::run_validation;
use straightness_core::{Error, GridSpec, NetworkGraph, RadialSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invariant violated: {0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Violation(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Core(Error::Io(_)) => 3,
            CliError::Core(Error::Csv(e)) if e.is_io_error() => 3,
            CliError::Core(_) => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, contents: impl AsRef<[u8]>) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_graph(graph: &NetworkGraph, out: &Path) -> Result<(), CliError> {
    write(out, graph.to_json()? + "\n")?;
    println!(
        "nodes: {}, edges: {}",
        graph.node_count(),
        graph.edge_count()
    );
    Ok(())
}

pub fn gen_rect(size: u32, out: &Path) -> Result<(), CliError> {
    write_graph(&generate_rectilinear(GridSpec::new(size)?)?, out)
}

pub fn gen_radial(radii: u32, rings: u32, subdivision: u32, out: &Path) -> Result<(), CliError> {
    write_graph(
        &generate_radioconcentric(RadialSpec::new(radii, rings, subdivision)?)?,
        out,
    )
}

fn parse_kind(text: &str) -> Result<NetworkKind, CliError> {
    match text.trim() {
        "rect" | "rectilinear" => Ok(NetworkKind::Rectilinear),
        other => {
            let radii = other.trim_start_matches('k').parse().map_err(|_| {
                CliError::Usage(format!(
                    "unknown network `{other}`: use `rect` or a radii count"
                ))
            })?;
            Ok(NetworkKind::Radial(Sector::new(radii)?))
        }
    }
}

/// Plots a table written by this tool; the layout is inferred from its header.
fn svg_from_csv(csv: &str, title: &str, y_label: &str) -> Result<String, CliError> {
    let headers: Vec<String> = csv
        .lines()
        .next()
        .unwrap_or_default()
        .split(',')
        .map(str::to_string)
        .collect();
    let layout = TableLayout::infer(&headers)
        .ok_or_else(|| CliError::Usage("cannot infer plot columns; pass --x and --y".into()))?;
    let series = series_from_csv(csv, &layout)?;
    let axes = AxesConfig {
        title: title.to_string(),
        x_label: layout.x_label,
        y_label: y_label.to_string(),
        reference_y: Some(1.0),
    };
    Ok(render_svg(&series, &axes)?)
}

fn emit_table(
    csv: Vec<u8>,
    out: &Path,
    svg: Option<&Path>,
    title: &str,
    y_label: &str,
) -> Result<(), CliError> {
    let text = String::from_utf8(csv).expect("csv output is utf-8");
    write(out, &text)?;
    if let Some(svg) = svg {
        write(svg, svg_from_csv(&text, title, y_label)?)?;
    }
    Ok(())
}

pub fn curve(
    kinds: &[String],
    steps: usize,
    alpha_max: f64,
    out: &Path,
    svg: Option<&Path>,
) -> Result<(), CliError> {
    let kinds = kinds
        .iter()
        .map(|k| parse_kind(k))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for kind in kinds {
        rows.extend(
            analytic_curve(kind, steps, alpha_max)?
                .into_iter()
                .map(|point| CurveRow { kind, point }),
        );
    }
    let mut csv = Vec::new();
    output::write_curve_csv(&mut csv, &rows)?;
    println!("{} rows", rows.len());
    emit_table(
        csv,
        out,
        svg,
        "Center-to-periphery straightness",
        "straightness",
    )
}

fn report(results: &[sweep::SweepResult]) {
    for r in results {
        let params: Vec<String> = r
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        println!(
            "{}  mean {:.6}  std {:.6}  pairs {}  ({} ms)",
            params.join(" "),
            r.summary.mean,
            r.summary.std_dev,
            r.summary.pair_count,
            r.wall_time_ms
        );
    }
}

pub fn sweep_rect(
    sizes: RangeInclusive<u32>,
    out: &Path,
    svg: Option<&Path>,
) -> Result<(), CliError> {
    let results = sweep::sweep_rect(sizes)?;
    report(&results);
    let mut csv = Vec::new();
    output::write_rect_sweep_csv(&mut csv, &results)?;
    emit_table(
        csv,
        out,
        svg,
        "Average straightness of square grids",
        "mean straightness",
    )
}

pub fn sweep_radial(
    radii: RangeInclusive<u32>,
    rings: RangeInclusive<u32>,
    subdivision: u32,
    out: &Path,
    svg: Option<&Path>,
) -> Result<(), CliError> {
    let results = sweep::sweep_radial(radii, rings, subdivision)?;
    report(&results);
    let mut csv = Vec::new();
    output::write_radial_sweep_csv(&mut csv, &results)?;
    emit_table(
        csv,
        out,
        svg,
        "Average straightness of radial networks",
        "mean straightness",
    )
}

pub fn straightness(input: &Path, strict: bool, pairs: Option<&Path>) -> Result<(), CliError> {
    let graph = NetworkGraph::from_json(&read(input)?)?;
    let policy = if strict {
        SkipPolicy::Strict
    } else {
        SkipPolicy::Lenient
    };
    let summary = summarize_with(&graph, policy)?;
    println!(
        "nodes: {}, edges: {}",
        graph.node_count(),
        graph.edge_count()
    );
    println!(
        "pairs: {} (skipped {})",
        summary.pair_count, summary.skipped_pairs
    );
    println!(
        "mean straightness: {}",
        output::format_significant(summary.mean, 9)
    );
    println!(
        "std deviation: {}",
        output::format_significant(summary.std_dev, 9)
    );
    if let Some(path) = pairs {
        let mut csv = Vec::new();
        output::write_pairs_csv(&mut csv, &pair_metrics(&graph))?;
        write(path, csv)?;
    }
    Ok(())
}

pub fn validate() -> Result<(), CliError> {
    let report = run_validation()?;
    print!("{report}");
    if report.all_passed() {
        println!("all checks passed");
        Ok(())
    } else {
        let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
        Err(CliError::Violation(failed.join(", ")))
    }
}

pub fn plot(
    input: &Path,
    out: &Path,
    x: Option<String>,
    y: Option<String>,
    group: Vec<String>,
    title: &str,
) -> Result<(), CliError> {
    let text = read(input)?;
    let svg = match (x, y) {
        (None, None) if group.is_empty() => svg_from_csv(&text, title, "straightness")?,
        (Some(x), Some(y)) => {
            let layout = TableLayout {
                x_label: x.clone(),
                x,
                y: y.clone(),
                group,
            };
            let axes = AxesConfig {
                title: title.to_string(),
                x_label: layout.x_label.clone(),
                y_label: y,
                reference_y: Some(1.0),
            };
            render_svg(&series_from_csv(&text, &layout)?, &axes)?
        }
        _ => return Err(CliError::Usage("--x and --y must be given together".into())),
    };
    write(out, svg)
}

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

use commands::CliError;

/// Straightness of rectilinear and radio-concentric networks.
#[derive(Debug, Parser)]
#[command(name = "straightness", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a network and write it as graph JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Closed-form center-to-periphery straightness as a function of the angle.
    Curve(CurveArgs),
    /// Average all-pairs straightness of square grids by size.
    SweepRect(SweepRectArgs),
    /// Average all-pairs straightness of radial networks by radii and rings.
    SweepRadial(SweepRadialArgs),
    /// All-pairs straightness summary of a graph JSON file.
    Straightness(StraightnessArgs),
    /// Check the closed forms against geometry and measured graphs.
    Validate,
    /// Render a curve or sweep CSV as an SVG line plot.
    Plot(PlotArgs),
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Square grid.
    Rect {
        /// Squares per side.
        #[arg(long)]
        size: u32,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Radio-concentric network with straight sides.
    Radial {
        #[arg(long)]
        radii: u32,
        #[arg(long)]
        rings: u32,
        /// Pieces per side chord; 1 keeps sides whole.
        #[arg(long, default_value_t = 1)]
        subdivision: u32,
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct CurveArgs {
    /// Comma-separated networks: `rect` or a radii count.
    #[arg(long, value_delimiter = ',', default_value = "rect,3,4,8,16")]
    kinds: Vec<String>,
    #[arg(long, default_value_t = 201)]
    steps: usize,
    /// Upper end of the sampled angle range, in radians.
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    alpha_max: f64,
    #[arg(long, short)]
    out: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepRectArgs {
    /// Inclusive range such as `1..15`, or a single size.
    #[arg(long, default_value = "1..15", value_parser = parse_range)]
    sizes: RangeInclusive<u32>,
    #[arg(long, short)]
    out: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepRadialArgs {
    #[arg(long, default_value = "3..20", value_parser = parse_range)]
    radii: RangeInclusive<u32>,
    #[arg(long, default_value = "1..5", value_parser = parse_range)]
    rings: RangeInclusive<u32>,
    #[arg(long, default_value_t = 1)]
    subdivision: u32,
    #[arg(long, short)]
    out: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct StraightnessArgs {
    /// Graph JSON file.
    input: PathBuf,
    /// Fail on unreachable or co-located pairs instead of skipping them.
    #[arg(long)]
    strict: bool,
    /// Also write per-pair metrics to this CSV.
    #[arg(long)]
    pairs: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PlotArgs {
    input: PathBuf,
    #[arg(long, short)]
    out: PathBuf,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    y: Option<String>,
    /// Columns whose values split the rows into series.
    #[arg(long, value_delimiter = ',')]
    group: Vec<String>,
    #[arg(long, default_value = "")]
    title: String,
}

/// `a..b` (inclusive) or a single value.
fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let parse = |s: &str| s.trim().parse::<u32>().map_err(|e| format!("`{s}`: {e}"));
    match text.split_once("..") {
        Some((lo, hi)) => {
            let range = parse(lo)?..=parse(hi.trim_start_matches('='))?;
            if range.is_empty() {
                return Err(format!("empty range `{text}`"));
            }
            Ok(range)
        }
        None => parse(text).map(|v| v..=v),
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("STRAIGHTNESS_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().map_err(|_| {
        CliError::Usage(format!(
            "STRAIGHTNESS_THREADS must be an integer, got `{value}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Gen { kind } => match kind {
            GenKind::Rect { size, out } => commands::gen_rect(size, &out),
            GenKind::Radial {
                radii,
                rings,
                subdivision,
                out,
            } => commands::gen_radial(radii, rings, subdivision, &out),
        },
        Command::Curve(a) => {
            commands::curve(&a.kinds, a.steps, a.alpha_max, &a.out, a.svg.as_deref())
        }
        Command::SweepRect(a) => commands::sweep_rect(a.sizes, &a.out, a.svg.as_deref()),
        Command::SweepRadial(a) => {
            commands::sweep_radial(a.radii, a.rings, a.subdivision, &a.out, a.svg.as_deref())
        }
        Command::Straightness(a) => commands::straightness(&a.input, a.strict, a.pairs.as_deref()),
        Command::Validate => commands::validate(),
        Command::Plot(a) => commands::plot(&a.input, &a.out, a.x, a.y, a.group, &a.title),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

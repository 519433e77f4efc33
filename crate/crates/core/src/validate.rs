//! Consistency checks between the closed forms, the mesh geometry and
//! measured graph straightness.
//!
//! Each check takes the piece it exercises as a parameter so that a broken
//! implementation can be substituted and shown to fail.

use std::fmt;

use crate::analytic::{mesh_oracle_radial, straightness_radial, Angle, Sector};
use crate::error::Result;
use crate::generators::{generate_radioconcentric, generate_rectilinear, GridSpec, RadialSpec};
use crate::metrics::{center_curve_check, center_radial_check};
use crate::model::NetworkGraph;

pub const TRIG_TOLERANCE: f64 = 1e-12;
pub const GEOMETRY_TOLERANCE: f64 = 1e-9;
pub const LIMIT_RADII: u32 = 10_000;
pub const LIMIT_TOLERANCE: f64 = 1e-3;

pub const SYMMETRY_SAMPLES: usize = 10_000;
pub const ORACLE_SAMPLES: usize = 1_000;
pub const SAMPLED_RADII: std::ops::RangeInclusive<u32> = 3..=32;
pub const GRID_SIZES: std::ops::RangeInclusive<u32> = 1..=15;
pub const RADIAL_CASES: [(u32, u32); 6] = [(4, 1), (4, 3), (8, 1), (8, 3), (16, 1), (16, 3)];
pub const RADIAL_SUBDIVISION: u32 = 4;

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Deterministic low-discrepancy sample: `(sector, fraction in [0, 1))`.
pub fn sample(i: usize) -> (Sector, f64) {
    let span = SAMPLED_RADII.end() - SAMPLED_RADII.start() + 1;
    let radii = SAMPLED_RADII.start() + (i as u32 % span);
    let fraction = (0.5 + i as f64 * GOLDEN).fract();
    (Sector::new(radii).expect("sampled radii >= 3"), fraction)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} {}  max deviation {:.3e} (tolerance {:.0e})",
            self.name,
            if self.passed() { "ok  " } else { "FAIL" },
            self.max_deviation,
            self.tolerance
        )
    }
}

/// `|S(α) − S(θ − α)|` over the first half-sector.
pub fn check_symmetry(formula: impl Fn(Sector, Angle) -> f64) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for i in 0..SYMMETRY_SAMPLES {
        let (sector, t) = sample(i);
        let theta = sector.theta();
        let alpha = 0.5 * t * theta;
        let d = formula(sector, Angle::new(alpha)?) - formula(sector, Angle::new(theta - alpha)?);
        worst = worst.max(d.abs());
    }
    Ok(CheckOutcome {
        name: "symmetry",
        max_deviation: worst,
        tolerance: TRIG_TOLERANCE,
    })
}

/// `|S(α + jθ) − S(α)|` for small positive and negative `j`.
pub fn check_rotation(formula: impl Fn(Sector, Angle) -> f64) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for i in 0..ORACLE_SAMPLES {
        let (sector, t) = sample(i);
        let theta = sector.theta();
        let base = formula(sector, Angle::new(t * theta)?);
        for j in [-3.0, -1.0, 1.0, 2.0, 5.0] {
            let d = formula(sector, Angle::new(t * theta + j * theta)?) - base;
            worst = worst.max(d.abs());
        }
    }
    Ok(CheckOutcome {
        name: "rotation",
        max_deviation: worst,
        tolerance: TRIG_TOLERANCE,
    })
}

/// Closed form against explicit triangle geometry over the whole sector.
pub fn check_oracle(formula: impl Fn(Sector, Angle) -> f64) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for i in 0..ORACLE_SAMPLES {
        let (sector, t) = sample(i);
        let alpha = Angle::new(t * sector.theta())?;
        let d = formula(sector, alpha) - mesh_oracle_radial(sector, alpha)?;
        worst = worst.max(d.abs());
    }
    Ok(CheckOutcome {
        name: "oracle",
        max_deviation: worst,
        tolerance: GEOMETRY_TOLERANCE,
    })
}

/// With very many radii the worst direction is almost perfectly straight.
pub fn check_limit(formula: impl Fn(Sector, Angle) -> f64) -> Result<CheckOutcome> {
    let sector = Sector::new(LIMIT_RADII)?;
    let half = sector.theta() / 2.0;
    let mut min = f64::INFINITY;
    for i in 0..=1000 {
        min = min.min(formula(sector, Angle::new(half * i as f64 / 1000.0)?));
    }
    Ok(CheckOutcome {
        name: "limit",
        max_deviation: 1.0 - min,
        tolerance: LIMIT_TOLERANCE,
    })
}

/// Dijkstra-measured corner-to-node straightness against the grid formula.
pub fn check_center_curve() -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for s in GRID_SIZES {
        worst = worst.max(center_curve_check(&generate_rectilinear(GridSpec::new(
            s,
        )?)?)?);
    }
    Ok(CheckOutcome {
        name: "center-curve",
        max_deviation: worst,
        tolerance: GEOMETRY_TOLERANCE,
    })
}

/// Center-to-node straightness on subdivided radial networks against the
/// radial formula, and its spread across rings. Returns the
/// `center-radial` and `homothety` outcomes.
pub fn check_center_radial(
    build: impl Fn(RadialSpec) -> Result<NetworkGraph>,
) -> Result<[CheckOutcome; 2]> {
    let (mut deviation, mut spread): (f64, f64) = (0.0, 0.0);
    for (k, m) in RADIAL_CASES {
        let spec = RadialSpec::new(k, m, RADIAL_SUBDIVISION)?;
        let check = center_radial_check(&build(spec)?, &spec)?;
        deviation = deviation.max(check.max_deviation);
        spread = spread.max(check.max_ring_spread);
    }
    Ok([
        CheckOutcome {
            name: "center-radial",
            max_deviation: deviation,
            tolerance: GEOMETRY_TOLERANCE,
        },
        CheckOutcome {
            name: "homothety",
            max_deviation: spread,
            tolerance: GEOMETRY_TOLERANCE,
        },
    ])
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

pub fn run_validation() -> Result<ValidationReport> {
    let [radial, homothety] = check_center_radial(generate_radioconcentric)?;
    Ok(ValidationReport {
        checks: vec![
            check_symmetry(straightness_radial)?,
            check_rotation(straightness_radial)?,
            check_oracle(straightness_radial)?,
            check_limit(straightness_radial)?,
            check_center_curve()?,
            radial,
            homothety,
        ],
    })
}

//! Closed-form straightness of center-to-periphery routes.
//!
//! Every closed form here is only valid on the first half-sector
//! `[0, θ/2]`; other directions are first reduced by rotation (modulo `θ`)
//! and reflection about the sector bisector.

use std::f64::consts::{FRAC_PI_4, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{euclidean_distance, Point2D};

/// A direction in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self> {
        if !radians.is_finite() {
            return Err(Error::NonFinite("angle"));
        }
        Ok(Self(radians))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Angle {
    type Error = Error;

    fn try_from(radians: f64) -> Result<Self> {
        Self::new(radians)
    }
}

/// Angular sector between two consecutive radii of a network with `k`
/// radii, `θ = 2π / k`. A square grid is the `k = 4` case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sector {
    radii: u32,
}

impl Sector {
    pub const QUADRANT: Sector = Sector { radii: 4 };

    pub fn new(radii: u32) -> Result<Self> {
        if radii < 3 {
            return Err(Error::TooFewRadii(radii));
        }
        Ok(Self { radii })
    }

    pub fn radii(self) -> u32 {
        self.radii
    }

    pub fn theta(self) -> f64 {
        TAU / self.radii as f64
    }

    /// Angle between a radius and a side chord, `(π − θ) / 2`.
    pub fn side_angle(self) -> f64 {
        (PI - self.theta()) / 2.0
    }
}

/// Reduces `alpha` to `[0, θ/2]` using rotation by `θ` and reflection about
/// the bisector.
pub fn canonicalize(sector: Sector, alpha: Angle) -> Angle {
    let theta = sector.theta();
    let r = alpha.0.rem_euclid(theta);
    let r = if r > theta / 2.0 { theta - r } else { r };
    // rem_euclid can round up to exactly theta
    Angle(r.clamp(0.0, theta / 2.0))
}

/// Straightness of the route running along the first radius and then along
/// the side towards a destination at angle `alpha`, for `alpha` in `[0, θ]`.
/// No reduction is applied: past the bisector this is not the shortest
/// route.
pub fn lower_route_straightness(sector: Sector, alpha: f64) -> f64 {
    let beta = sector.side_angle();
    let (sin, cos) = alpha.sin_cos();
    1.0 / (cos + sin / beta.tan() + sin / beta.sin())
}

fn rectilinear_half_quadrant(alpha: f64) -> f64 {
    let (sin, cos) = alpha.sin_cos();
    1.0 / (cos + sin)
}

/// Center-to-periphery straightness of a square grid for direction `alpha`.
pub fn straightness_rectilinear(alpha: Angle) -> f64 {
    rectilinear_half_quadrant(canonicalize(Sector::QUADRANT, alpha).0)
}

/// Center-to-periphery straightness of a radio-concentric network.
pub fn straightness_radial(sector: Sector, alpha: Angle) -> f64 {
    lower_route_straightness(sector, canonicalize(sector, alpha).0)
}

/// Network families with a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NetworkKind {
    Rectilinear,
    Radial(Sector),
}

impl NetworkKind {
    pub fn name(self) -> &'static str {
        match self {
            NetworkKind::Rectilinear => "rectilinear",
            NetworkKind::Radial(_) => "radial",
        }
    }

    pub fn sector(self) -> Sector {
        match self {
            NetworkKind::Rectilinear => Sector::QUADRANT,
            NetworkKind::Radial(sector) => sector,
        }
    }

    pub fn label(self) -> String {
        match self {
            NetworkKind::Rectilinear => "rectilinear".to_string(),
            NetworkKind::Radial(s) => format!("radial k={}", s.radii()),
        }
    }

    /// Straightness via the canonical half-sector reduction.
    pub fn straightness(self, alpha: Angle) -> f64 {
        match self {
            NetworkKind::Rectilinear => straightness_rectilinear(alpha),
            NetworkKind::Radial(sector) => straightness_radial(sector, alpha),
        }
    }

    /// Straightness as the better of the two candidate routes (via the
    /// first or the second radius of the sector), without reflecting `alpha`.
    /// Traces the periodic ripple directly.
    pub fn ripple(self, alpha: Angle) -> f64 {
        let theta = self.sector().theta();
        let r = alpha.0.rem_euclid(theta);
        let route = |a: f64| match self {
            NetworkKind::Rectilinear => rectilinear_half_quadrant(a),
            NetworkKind::Radial(sector) => lower_route_straightness(sector, a),
        };
        route(r).max(route(theta - r))
    }
}

/// Explicit triangle geometry of a destination on the unit-ring side chord
/// of the first sector: the center, the two chord endpoints on consecutive
/// radii and the destination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshGeometry {
    /// Center to destination, as the crow flies.
    pub crow_flies: f64,
    /// Projection of the destination onto the first radius.
    pub radial_projection: f64,
    /// Rest of the first radius beyond the projection.
    pub radial_remainder: f64,
    /// Distance from the destination to the first radius.
    pub offset: f64,
    /// Side travel from the first radius to the destination.
    pub side_from_first: f64,
    /// Side travel from the second radius to the destination.
    pub side_from_second: f64,
    /// Angle between the first radius and the side.
    pub beta: f64,
}

impl MeshGeometry {
    pub fn radial(sector: Sector, alpha: Angle) -> Result<Self> {
        let theta = sector.theta();
        if !(0.0..=theta).contains(&alpha.0) {
            return Err(Error::AngleOutsideSector {
                alpha: alpha.0,
                theta,
            });
        }
        let first = Point2D { x: 1.0, y: 0.0 };
        let second = Point2D::from_polar(1.0, theta);
        let side = Point2D {
            x: second.x - first.x,
            y: second.y - first.y,
        };
        let ray = Point2D::from_polar(1.0, alpha.0);
        let cross = |a: Point2D, b: Point2D| a.x * b.y - a.y * b.x;
        // ray(s) == first + t * side
        let t = cross(first, ray) / cross(ray, side);
        let dest = first.lerp(&second, t);

        let inward = Point2D {
            x: -first.x,
            y: -first.y,
        };
        let beta = cross(inward, side)
            .abs()
            .atan2(inward.x * side.x + inward.y * side.y);

        Ok(Self {
            crow_flies: dest.norm(),
            radial_projection: dest.x,
            radial_remainder: first.x - dest.x,
            offset: dest.y,
            side_from_first: euclidean_distance(dest, first),
            side_from_second: euclidean_distance(dest, second),
            beta,
        })
    }

    /// On-network length of the route through the first radius.
    pub fn lower_route(&self) -> f64 {
        self.radial_projection + self.radial_remainder + self.side_from_first
    }

    /// On-network length of the route through the second radius.
    pub fn upper_route(&self) -> f64 {
        1.0 + self.side_from_second
    }

    pub fn straightness(&self) -> f64 {
        self.crow_flies / self.lower_route().min(self.upper_route())
    }
}

/// Straightness from explicit 2-D geometry, independent of the closed form.
/// `alpha` must lie in `[0, θ]`.
pub fn mesh_oracle_radial(sector: Sector, alpha: Angle) -> Result<f64> {
    Ok(MeshGeometry::radial(sector, alpha)?.straightness())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub alpha: f64,
    pub straightness: f64,
}

/// Samples straightness over `[0, alpha_max]` at `steps` evenly spaced
/// directions, using the ripple evaluation.
pub fn analytic_curve(kind: NetworkKind, steps: usize, alpha_max: f64) -> Result<Vec<CurvePoint>> {
    if steps < 2 {
        return Err(Error::TooFew {
            what: "alpha steps",
            required: 2,
            got: steps,
        });
    }
    let alpha_max = Angle::new(alpha_max)?.0;
    if alpha_max <= 0.0 {
        return Err(Error::Input("alpha range must be positive".into()));
    }
    Ok((0..steps)
        .map(|i| {
            let alpha = alpha_max * i as f64 / (steps - 1) as f64;
            CurvePoint {
                alpha,
                straightness: kind.ripple(Angle(alpha)),
            }
        })
        .collect())
}

/// The plotted domain of the comparison curves.
pub const DEFAULT_ALPHA_MAX: f64 = FRAC_PI_4;

/// Fraction of `samples` evenly spaced directions in `[0, π/4]` where the
/// radial network is at least as straight as the square grid.
pub fn dominance_fraction(sector: Sector, samples: usize) -> f64 {
    let radial = NetworkKind::Radial(sector);
    let wins = (0..samples)
        .filter(|&i| {
            let alpha = Angle(FRAC_PI_4 * i as f64 / (samples - 1).max(1) as f64);
            radial.ripple(alpha) >= NetworkKind::Rectilinear.ripple(alpha)
        })
        .count();
    wins as f64 / samples as f64
}

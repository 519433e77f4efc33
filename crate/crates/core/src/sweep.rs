//! Parameter sweeps of all-pairs straightness.

use std::ops::RangeInclusive;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{generate_radioconcentric, generate_rectilinear, GridSpec, RadialSpec};
use crate::metrics::{summarize, StraightnessSummary};

/// Grid sizes beyond this make the pair count impractical.
pub const MAX_GRID_SIZE: u32 = 50;

pub const DEFAULT_GRID_SIZES: RangeInclusive<u32> = 1..=15;
pub const DEFAULT_RADII: RangeInclusive<u32> = 3..=20;
pub const DEFAULT_RINGS: RangeInclusive<u32> = 1..=5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub parameters: Vec<(String, u32)>,
    pub summary: StraightnessSummary,
    pub wall_time_ms: u64,
}

impl SweepResult {
    pub fn parameter(&self, name: &str) -> Option<u32> {
        self.parameters
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }
}

fn timed(
    parameters: Vec<(String, u32)>,
    run: impl FnOnce() -> Result<StraightnessSummary>,
) -> Result<SweepResult> {
    let start = Instant::now();
    let summary = run()?;
    Ok(SweepResult {
        parameters,
        summary,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn sweep_rect(sizes: RangeInclusive<u32>) -> Result<Vec<SweepResult>> {
    if sizes.is_empty() || *sizes.start() < 1 || *sizes.end() > MAX_GRID_SIZE {
        return Err(Error::InvalidSpec(format!(
            "grid sizes must lie within 1..={MAX_GRID_SIZE} (got {}..={})",
            sizes.start(),
            sizes.end()
        )));
    }
    sizes
        .map(|s| {
            timed(vec![("squares_per_side".into(), s)], || {
                summarize(&generate_rectilinear(GridSpec::new(s)?)?)
            })
        })
        .collect()
}

/// One row per `(radii, rings)` cell, radii varying slowest.
pub fn sweep_radial(
    radii: RangeInclusive<u32>,
    rings: RangeInclusive<u32>,
    side_subdivision: u32,
) -> Result<Vec<SweepResult>> {
    if radii.is_empty() || rings.is_empty() {
        return Err(Error::InvalidSpec("empty radii or rings range".into()));
    }
    let mut results = Vec::new();
    for k in radii {
        for m in rings.clone() {
            let spec = RadialSpec::new(k, m, side_subdivision)?;
            let parameters = vec![("radii_count".into(), k), ("rings_count".into(), m)];
            results.push(timed(parameters, || {
                summarize(&generate_radioconcentric(spec)?)
            })?);
        }
    }
    Ok(results)
}

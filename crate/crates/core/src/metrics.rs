//! Per-pair straightness and all-pairs aggregates.

use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::{straightness_radial, straightness_rectilinear, Angle, Sector};
use crate::error::{Error, Result};
use crate::generators::RadialSpec;
use crate::model::{NetworkGraph, NodeId, Point2D};
use crate::shortest_paths::{dijkstra, DistanceRow};

/// Crow-flies and on-network distance between two nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RouteMetrics {
    pub source: NodeId,
    pub target: NodeId,
    pub d_spatial: f64,
    pub d_geodesic: f64,
    /// `None` when the pair is unreachable or the nodes coincide.
    pub straightness: Option<f64>,
}

impl RouteMetrics {
    fn new(source: NodeId, target: NodeId, d_spatial: f64, d_geodesic: f64) -> Self {
        let straightness =
            (d_geodesic.is_finite() && d_spatial > 0.0).then(|| d_spatial / d_geodesic);
        Self {
            source,
            target,
            d_spatial,
            d_geodesic,
            straightness,
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.straightness.is_none()
    }

    fn skip_reason(&self) -> &'static str {
        if self.d_geodesic.is_infinite() {
            "unreachable"
        } else {
            "zero spatial distance"
        }
    }
}

pub fn pair_straightness(
    graph: &NetworkGraph,
    rows: &[DistanceRow],
    u: NodeId,
    v: NodeId,
) -> Result<RouteMetrics> {
    let count = graph.node_count();
    for id in [u, v] {
        if id >= count {
            return Err(Error::NodeOutOfRange { id, count });
        }
    }
    if u == v {
        return Err(Error::SamePair(u));
    }
    let row = rows
        .iter()
        .find(|r| r.source == u)
        .ok_or_else(|| Error::Input(format!("no distance row for source {u}")))?;
    Ok(RouteMetrics::new(
        u,
        v,
        graph.spatial_distance(u, v),
        row.to(v),
    ))
}

/// What to do with pairs whose straightness is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SkipPolicy {
    /// Leave them out of the aggregates and count them.
    #[default]
    Lenient,
    /// Fail on the first one.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StraightnessSummary {
    pub pair_count: usize,
    pub mean: f64,
    /// Population standard deviation.
    pub std_dev: f64,
    pub skipped_pairs: usize,
}

/// Metrics for every unordered pair `u < v`, sorted by `(u, v)`.
pub fn pair_metrics(graph: &NetworkGraph) -> Vec<RouteMetrics> {
    let n = graph.node_count();
    (0..n)
        .into_par_iter()
        .map(|u| {
            let row = dijkstra(graph, u).expect("source id in range");
            ((u + 1)..n)
                .map(|v| RouteMetrics::new(u, v, graph.spatial_distance(u, v), row.to(v)))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn summarize(graph: &NetworkGraph) -> Result<StraightnessSummary> {
    summarize_with(graph, SkipPolicy::Lenient)
}

/// Mean and population standard deviation of straightness over all
/// unordered pairs. Rows may be computed in parallel; the sums always run
/// sequentially over pairs sorted by `(u, v)`, so the result does not depend
/// on the thread count.
pub fn summarize_with(graph: &NetworkGraph, policy: SkipPolicy) -> Result<StraightnessSummary> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::TooFew {
            what: "nodes",
            required: 2,
            got: n,
        });
    }
    let pairs = pair_metrics(graph);

    let mut values = Vec::with_capacity(pairs.len());
    let mut skipped = 0;
    for pair in &pairs {
        match pair.straightness {
            Some(s) => values.push(s),
            None if policy == SkipPolicy::Strict => {
                return Err(Error::SkippedPair {
                    u: pair.source,
                    v: pair.target,
                    reason: pair.skip_reason(),
                })
            }
            None => skipped += 1,
        }
    }
    if values.is_empty() {
        return Err(Error::TooFew {
            what: "measurable pairs",
            required: 1,
            got: 0,
        });
    }

    let count = values.len() as f64;
    let mean = values.iter().sum::<f64>() / count;
    let variance = values.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / count;
    Ok(StraightnessSummary {
        pair_count: values.len(),
        mean,
        std_dev: variance.sqrt(),
        skipped_pairs: skipped,
    })
}

/// Largest gap between measured corner-to-node straightness on a square
/// grid and the closed form. The source is the node at the origin.
pub fn center_curve_check(graph: &NetworkGraph) -> Result<f64> {
    let source = graph
        .find_node(Point2D::origin())
        .ok_or_else(|| Error::Input("grid has no node at the origin".into()))?;
    let row = dijkstra(graph, source)?;
    let mut worst: f64 = 0.0;
    for (target, p) in graph.positions().iter().enumerate() {
        if target == source {
            continue;
        }
        let measured = p.norm() / row.to(target);
        let expected = straightness_rectilinear(Angle::new(p.y.atan2(p.x))?);
        worst = worst.max((measured - expected).abs());
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialCheck {
    /// Worst gap between measured and closed-form straightness.
    pub max_deviation: f64,
    /// Worst spread of measured straightness among destinations at the same
    /// angular position on different rings and radii.
    pub max_ring_spread: f64,
    pub destinations: usize,
}

/// Measures center-to-node straightness on a radio-concentric network with
/// subdivided sides and compares it against the closed form. Node ids must
/// follow the layout of [`RadialSpec`].
pub fn center_radial_check(graph: &NetworkGraph, spec: &RadialSpec) -> Result<RadialCheck> {
    spec.validate()?;
    if spec.side_subdivision < 2 {
        return Err(Error::InvalidSpec(
            "side subdivision must be at least 2 to place destinations between radii".into(),
        ));
    }
    if graph.node_count() != spec.node_count() {
        return Err(Error::Input(format!(
            "graph has {} nodes, layout expects {}",
            graph.node_count(),
            spec.node_count()
        )));
    }
    let sector = Sector::new(spec.radii_count)?;
    let row = dijkstra(graph, 0)?;
    let center = graph.position(0);
    let measure = |id: NodeId| -> Result<(f64, f64)> {
        let p = graph.position(id);
        let (dx, dy) = (p.x - center.x, p.y - center.y);
        let measured = dx.hypot(dy) / row.to(id);
        let expected = straightness_radial(sector, Angle::new(dy.atan2(dx))?);
        Ok((measured, expected))
    };

    let k = spec.radii_count as usize;
    let m = spec.rings_count as usize;
    let q = spec.side_subdivision as usize;
    let mut max_deviation: f64 = 0.0;
    let mut destinations = 0;
    for ring in 1..=m {
        for radius in 0..k {
            let (measured, expected) = measure(spec.ring_node(ring, radius))?;
            max_deviation = max_deviation.max((measured - expected).abs());
            destinations += 1;
        }
    }
    let mut max_ring_spread: f64 = 0.0;
    for step in 1..q {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for ring in 1..=m {
            for radius in 0..k {
                let (measured, expected) = measure(spec.subdivision_node(ring, radius, step))?;
                max_deviation = max_deviation.max((measured - expected).abs());
                lo = lo.min(measured);
                hi = hi.max(measured);
                destinations += 1;
            }
        }
        max_ring_spread = max_ring_spread.max(hi - lo);
    }
    Ok(RadialCheck {
        max_deviation,
        max_ring_spread,
        destinations,
    })
}

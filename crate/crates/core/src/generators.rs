//! Perfect rectilinear grids and perfect radio-concentric networks.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{NetworkGraph, NodeId, Point2D};

/// Square grid with `squares_per_side` unit cells along each axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub squares_per_side: u32,
}

impl GridSpec {
    pub fn new(squares_per_side: u32) -> Result<Self> {
        let spec = Self { squares_per_side };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.squares_per_side < 1 {
            return Err(Error::InvalidSpec(
                "a grid needs at least one square per side".into(),
            ));
        }
        Ok(())
    }

    pub fn nodes_per_side(&self) -> usize {
        self.squares_per_side as usize + 1
    }

    /// Row-major id of the node at integer coordinates `(i, j)`.
    pub fn node_id(&self, i: usize, j: usize) -> NodeId {
        j * self.nodes_per_side() + i
    }
}

/// Center, `radii_count` radii and `rings_count` concentric layers of
/// straight sides. Each side chord is cut into `side_subdivision` collinear
/// pieces; `1` leaves the chords whole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadialSpec {
    pub radii_count: u32,
    pub rings_count: u32,
    pub side_subdivision: u32,
}

impl RadialSpec {
    pub fn new(radii_count: u32, rings_count: u32, side_subdivision: u32) -> Result<Self> {
        let spec = Self {
            radii_count,
            rings_count,
            side_subdivision,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.radii_count < 3 {
            return Err(Error::TooFewRadii(self.radii_count));
        }
        if self.rings_count < 1 {
            return Err(Error::InvalidSpec(
                "a radial network needs at least one ring".into(),
            ));
        }
        if self.side_subdivision < 1 {
            return Err(Error::InvalidSpec(
                "side subdivision must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Angle between consecutive radii.
    pub fn sector_angle(&self) -> f64 {
        TAU / self.radii_count as f64
    }

    pub fn radius_angle(&self, radius: usize) -> f64 {
        TAU * radius as f64 / self.radii_count as f64
    }

    /// Id of the node on `ring` (1-based) and `radius` (0-based).
    pub fn ring_node(&self, ring: usize, radius: usize) -> NodeId {
        1 + (ring - 1) * self.radii_count as usize + radius
    }

    /// Id of the `step`-th interior node (1..q) on the side of `ring` that
    /// starts at `radius` and ends at `radius + 1`.
    pub fn subdivision_node(&self, ring: usize, radius: usize, step: usize) -> NodeId {
        let k = self.radii_count as usize;
        let interior = self.side_subdivision as usize - 1;
        1 + k * self.rings_count as usize + ((ring - 1) * k + radius) * interior + (step - 1)
    }

    pub fn node_count(&self) -> usize {
        let k = self.radii_count as usize;
        let m = self.rings_count as usize;
        1 + k * m + k * m * (self.side_subdivision as usize - 1)
    }

    pub fn edge_count(&self) -> usize {
        let km = self.radii_count as usize * self.rings_count as usize;
        km + km * self.side_subdivision as usize
    }
}

pub fn generate_rectilinear(spec: GridSpec) -> Result<NetworkGraph> {
    spec.validate()?;
    let n = spec.nodes_per_side();
    let positions = (0..n)
        .flat_map(|j| {
            (0..n).map(move |i| Point2D {
                x: i as f64,
                y: j as f64,
            })
        })
        .collect();
    let mut edges = Vec::with_capacity(2 * (n - 1) * n);
    for j in 0..n {
        for i in 0..n {
            let id = spec.node_id(i, j);
            if i + 1 < n {
                edges.push((id, spec.node_id(i + 1, j)));
            }
            if j + 1 < n {
                edges.push((id, spec.node_id(i, j + 1)));
            }
        }
    }
    NetworkGraph::new(positions, &edges)
}

pub fn generate_radioconcentric(spec: RadialSpec) -> Result<NetworkGraph> {
    spec.validate()?;
    let k = spec.radii_count as usize;
    let m = spec.rings_count as usize;
    let q = spec.side_subdivision as usize;

    let mut positions = Vec::with_capacity(spec.node_count());
    positions.push(Point2D::origin());
    for ring in 1..=m {
        for radius in 0..k {
            positions.push(Point2D::from_polar(ring as f64, spec.radius_angle(radius)));
        }
    }
    for ring in 1..=m {
        for radius in 0..k {
            let start = positions[spec.ring_node(ring, radius)];
            let end = positions[spec.ring_node(ring, (radius + 1) % k)];
            for step in 1..q {
                positions.push(start.lerp(&end, step as f64 / q as f64));
            }
        }
    }

    let mut edges = Vec::with_capacity(spec.edge_count());
    for radius in 0..k {
        edges.push((0, spec.ring_node(1, radius)));
        for ring in 1..m {
            edges.push((
                spec.ring_node(ring, radius),
                spec.ring_node(ring + 1, radius),
            ));
        }
    }
    for ring in 1..=m {
        for radius in 0..k {
            let mut previous = spec.ring_node(ring, radius);
            for step in 1..q {
                let node = spec.subdivision_node(ring, radius, step);
                edges.push((previous, node));
                previous = node;
            }
            edges.push((previous, spec.ring_node(ring, (radius + 1) % k)));
        }
    }
    NetworkGraph::new(positions, &edges)
}

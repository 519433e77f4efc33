//! Embedded undirected graphs with straight-segment edges.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type NodeId = usize;

/// A position in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite("point coordinate"));
        }
        Ok(Self { x, y })
    }

    pub fn origin() -> Self {
        Self { x: 0.0, y: 0.0 }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        Self {
            x: radius * angle.cos(),
            y: radius * angle.sin(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn lerp(&self, other: &Point2D, t: f64) -> Point2D {
        Point2D {
            x: self.x + (other.x - self.x) * t,
            y: self.y + (other.y - self.y) * t,
        }
    }
}

pub fn euclidean_distance(a: Point2D, b: Point2D) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

/// Immutable undirected geometric graph.
///
/// Edge lengths are always the Euclidean distance between the endpoints and
/// are derived from node positions, never stored separately.
#[derive(Debug, Clone)]
pub struct NetworkGraph {
    positions: Vec<Point2D>,
    edges: Vec<(NodeId, NodeId)>,
    adjacency: Vec<Vec<(NodeId, f64)>>,
}

fn position_key(p: Point2D) -> (u64, u64) {
    // +0.0 and -0.0 are the same place
    let norm = |v: f64| if v == 0.0 { 0.0f64 } else { v };
    (norm(p.x).to_bits(), norm(p.y).to_bits())
}

impl NetworkGraph {
    /// Validates and builds a graph. Edges are kept in the given order with
    /// endpoints normalised so that `u < v`.
    pub fn new(positions: Vec<Point2D>, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let count = positions.len();
        let mut seen = HashMap::with_capacity(count);
        for (id, p) in positions.iter().enumerate() {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::NonFinite("point coordinate"));
            }
            if let Some(&first) = seen.get(&position_key(*p)) {
                return Err(Error::DuplicatePosition { first, second: id });
            }
            seen.insert(position_key(*p), id);
        }

        let mut unique = HashSet::with_capacity(edges.len());
        let mut normalised = Vec::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); count];
        for &(a, b) in edges {
            for id in [a, b] {
                if id >= count {
                    return Err(Error::NodeOutOfRange { id, count });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !unique.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            let length = euclidean_distance(positions[u], positions[v]);
            adjacency[u].push((v, length));
            adjacency[v].push((u, length));
            normalised.push((u, v));
        }

        Ok(Self {
            positions,
            edges: normalised,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.positions.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn position(&self, id: NodeId) -> Point2D {
        self.positions[id]
    }

    pub fn positions(&self) -> &[Point2D] {
        &self.positions
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn edge_length(&self, edge: usize) -> f64 {
        let (u, v) = self.edges[edge];
        euclidean_distance(self.positions[u], self.positions[v])
    }

    /// Neighbours of `id` with the length of the connecting edge.
    pub fn neighbors(&self, id: NodeId) -> &[(NodeId, f64)] {
        &self.adjacency[id]
    }

    pub fn spatial_distance(&self, u: NodeId, v: NodeId) -> f64 {
        euclidean_distance(self.positions[u], self.positions[v])
    }

    /// Id of the node sitting exactly at `p`, if any.
    pub fn find_node(&self, p: Point2D) -> Option<NodeId> {
        let key = position_key(p);
        self.positions.iter().position(|q| position_key(*q) == key)
    }

    /// Returns a copy with every position passed through `f`.
    pub fn map_positions(&self, f: impl Fn(Point2D) -> Point2D) -> Result<Self> {
        let positions = self.positions.iter().map(|p| f(*p)).collect();
        Self::new(positions, &self.edges)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            nodes: self
                .positions
                .iter()
                .enumerate()
                .map(|(id, p)| NodeRecord { id, x: p.x, y: p.y })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| EdgeRecord { u, v })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_document())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        Self::try_from(doc)
    }
}

/// Builds a validated graph from node positions and an edge list.
pub fn build_graph(nodes: Vec<Point2D>, edges: &[(NodeId, NodeId)]) -> Result<NetworkGraph> {
    NetworkGraph::new(nodes, edges)
}

/// Serialized graph layout. Lengths are never written.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: NodeId,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub u: NodeId,
    pub v: NodeId,
}

impl TryFrom<GraphDocument> for NetworkGraph {
    type Error = Error;

    fn try_from(doc: GraphDocument) -> Result<Self> {
        let count = doc.nodes.len();
        let mut slots: Vec<Option<Point2D>> = vec![None; count];
        for node in &doc.nodes {
            let slot = slots.get_mut(node.id).ok_or_else(|| Error::SparseIds {
                count,
                detail: format!("id {} is out of range", node.id),
            })?;
            if slot.is_some() {
                return Err(Error::SparseIds {
                    count,
                    detail: format!("id {} appears twice", node.id),
                });
            }
            *slot = Some(Point2D::new(node.x, node.y)?);
        }
        // every slot is filled: count ids, all distinct, all < count
        let positions = slots.into_iter().map(Option::unwrap).collect();
        let edges: Vec<_> = doc.edges.iter().map(|e| (e.u, e.v)).collect();
        NetworkGraph::new(positions, &edges)
    }
}

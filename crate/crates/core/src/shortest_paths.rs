//! Geodesic distances under the edge-length metric.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{NetworkGraph, NodeId};

/// Distances from one source to every node; `f64::INFINITY` marks
/// unreachable nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceRow {
    pub source: NodeId,
    pub distances: Vec<f64>,
}

impl DistanceRow {
    pub fn to(&self, target: NodeId) -> f64 {
        self.distances[target]
    }
}

#[derive(Copy, Clone, PartialEq)]
struct State {
    cost: f64,
    node: NodeId,
}

impl Eq for State {}

// Min-heap on (cost, node id).
impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn dijkstra(graph: &NetworkGraph, source: NodeId) -> Result<DistanceRow> {
    let count = graph.node_count();
    if source >= count {
        return Err(Error::NodeOutOfRange { id: source, count });
    }
    let mut dist = vec![f64::INFINITY; count];
    let mut settled = vec![false; count];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(State {
        cost: 0.0,
        node: source,
    });

    while let Some(State { cost, node }) = heap.pop() {
        if settled[node] {
            continue;
        }
        settled[node] = true;
        for &(next, length) in graph.neighbors(node) {
            let candidate = cost + length;
            if candidate < dist[next] {
                dist[next] = candidate;
                heap.push(State {
                    cost: candidate,
                    node: next,
                });
            }
        }
    }

    Ok(DistanceRow {
        source,
        distances: dist,
    })
}

/// One row per source, ordered by source id. Rows are computed on the
/// current rayon pool.
pub fn all_pairs(graph: &NetworkGraph) -> Vec<DistanceRow> {
    (0..graph.node_count())
        .into_par_iter()
        .map(|source| dijkstra(graph, source).expect("source id in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_radioconcentric, generate_rectilinear, GridSpec, RadialSpec};
    use crate::model::Point2D;
    use approx::assert_abs_diff_eq;

    fn grid(s: u32) -> (GridSpec, NetworkGraph) {
        let spec = GridSpec::new(s).unwrap();
        (spec, generate_rectilinear(spec).unwrap())
    }

    #[test]
    fn unit_square_from_corner() {
        let (_, g) = grid(1);
        // ids: (0,0)=0, (1,0)=1, (0,1)=2, (1,1)=3
        assert_eq!(dijkstra(&g, 0).unwrap().distances, vec![0.0, 1.0, 1.0, 2.0]);
    }

    #[test]
    fn grid_l1_distance() {
        let (spec, g) = grid(4);
        assert_eq!(dijkstra(&g, 0).unwrap().to(spec.node_id(3, 4)), 7.0);
    }

    #[test]
    fn radial_k4_from_center() {
        let g = generate_radioconcentric(RadialSpec::new(4, 1, 1).unwrap()).unwrap();
        let row = dijkstra(&g, 0).unwrap();
        for ring_node in 1..5 {
            assert_abs_diff_eq!(row.to(ring_node), 1.0, epsilon = 1e-15);
        }
        // opposite ring nodes: through the center, 2 < two chords 2√2
        assert_abs_diff_eq!(dijkstra(&g, 1).unwrap().to(3), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn radial_k3_m2_step_down_and_chord() {
        let spec = RadialSpec::new(3, 2, 1).unwrap();
        let g = generate_radioconcentric(spec).unwrap();
        let rows = all_pairs(&g);
        let d = rows[spec.ring_node(2, 0)].to(spec.ring_node(1, 1));
        assert_abs_diff_eq!(
            d,
            1.0 + 2.0 * (std::f64::consts::PI / 3.0).sin(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(d, 2.7320508, epsilon = 1e-7);
    }

    #[test]
    fn single_node() {
        let g = NetworkGraph::new(vec![Point2D::origin()], &[]).unwrap();
        let rows = all_pairs(&g);
        assert_eq!(
            rows,
            vec![DistanceRow {
                source: 0,
                distances: vec![0.0]
            }]
        );
    }

    #[test]
    fn unreachable_is_infinite() {
        let nodes = vec![
            Point2D::origin(),
            Point2D { x: 1.0, y: 0.0 },
            Point2D { x: 5.0, y: 5.0 },
        ];
        let g = NetworkGraph::new(nodes, &[(0, 1)]).unwrap();
        let row = dijkstra(&g, 0).unwrap();
        assert_eq!(row.to(1), 1.0);
        assert!(row.to(2).is_infinite());
    }

    #[test]
    fn invalid_source() {
        let (_, g) = grid(1);
        assert!(matches!(
            dijkstra(&g, 4),
            Err(Error::NodeOutOfRange { id: 4, count: 4 })
        ));
    }

    #[test]
    fn rows_ordered_and_symmetric() {
        let (_, g) = grid(1);
        let rows = all_pairs(&g);
        assert_eq!(rows.len(), 4);
        for (u, row) in rows.iter().enumerate() {
            assert_eq!(row.source, u);
            for (v, other) in rows.iter().enumerate() {
                assert_eq!(row.to(v), other.to(u));
            }
        }
    }
}

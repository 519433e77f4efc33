use proptest::prelude::*;

use straightness_core::generators::{generate_radioconcentric, generate_rectilinear};
use straightness_core::metrics::{center_curve_check, pair_metrics, summarize};
use straightness_core::model::euclidean_distance;
use straightness_core::shortest_paths::all_pairs;
use straightness_core::{GridSpec, NetworkGraph, Point2D, RadialSpec};

/// Relaxes every edge `n - 1` times.
fn bellman_ford(graph: &NetworkGraph, source: usize) -> Vec<f64> {
    let n = graph.node_count();
    let mut dist = vec![f64::INFINITY; n];
    dist[source] = 0.0;
    for _ in 1..n.max(2) {
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            let w = graph.edge_length(e);
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
            }
            if dist[v] + w < dist[u] {
                dist[u] = dist[v] + w;
            }
        }
    }
    dist
}

/// Up to 10 nodes on distinct lattice points with an arbitrary edge subset.
fn small_graph() -> impl Strategy<Value = NetworkGraph> {
    (1usize..=10)
        .prop_flat_map(|n| {
            (
                proptest::sample::subsequence((0..64).collect::<Vec<i32>>(), n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                Just(n),
            )
        })
        .prop_map(|(cells, mask, n)| {
            let positions = cells
                .iter()
                .map(|c| {
                    Point2D::new((c % 8) as f64 * 1.5, (c / 8) as f64 + 0.25 * (c % 3) as f64)
                        .unwrap()
                })
                .collect();
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e)
                .collect();
            NetworkGraph::new(positions, &edges).unwrap()
        })
}

fn generated() -> Vec<NetworkGraph> {
    vec![
        generate_rectilinear(GridSpec::new(5).unwrap()).unwrap(),
        generate_radioconcentric(RadialSpec::new(7, 3, 1).unwrap()).unwrap(),
        generate_radioconcentric(RadialSpec::new(5, 2, 3).unwrap()).unwrap(),
    ]
}

proptest! {
    #[test]
    fn dijkstra_matches_bellman_ford(graph in small_graph()) {
        let rows = all_pairs(&graph);
        for row in &rows {
            let oracle = bellman_ford(&graph, row.source);
            for (d, o) in row.distances.iter().zip(&oracle) {
                if o.is_infinite() {
                    prop_assert!(d.is_infinite());
                } else {
                    prop_assert!((d - o).abs() <= 1e-12, "{d} vs {o}");
                }
            }
        }
    }

    #[test]
    fn rows_satisfy_edge_relaxation(graph in small_graph()) {
        for row in all_pairs(&graph) {
            prop_assert_eq!(row.distances[row.source], 0.0);
            for (e, &(u, v)) in graph.edges().iter().enumerate() {
                let (du, dv) = (row.distances[u], row.distances[v]);
                if du.is_finite() || dv.is_finite() {
                    prop_assert!((du - dv).abs() <= graph.edge_length(e) + 1e-12);
                }
            }
        }
    }

    #[test]
    fn json_round_trip(graph in small_graph()) {
        let back = NetworkGraph::from_json(&graph.to_json().unwrap()).unwrap();
        prop_assert_eq!(back.positions(), graph.positions());
        prop_assert_eq!(back.edges(), graph.edges());
    }

    #[test]
    fn scale_invariance(c in 0.01f64..100.0) {
        for g in generated() {
            let scaled = g.map_positions(|p| Point2D { x: c * p.x, y: c * p.y }).unwrap();
            let (a, b) = (pair_metrics(&g), pair_metrics(&scaled));
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x.straightness.unwrap() - y.straightness.unwrap()).abs() <= 1e-12);
            }
            let (sa, sb) = (summarize(&g).unwrap(), summarize(&scaled).unwrap());
            prop_assert!((sa.mean - sb.mean).abs() <= 1e-12);
            prop_assert!((sa.std_dev - sb.std_dev).abs() <= 1e-12);
        }
    }

    #[test]
    fn rigid_motion_invariance(angle in -3.2f64..3.2, dx in -50.0f64..50.0, dy in -50.0f64..50.0) {
        let (s, c) = angle.sin_cos();
        for g in generated() {
            let moved = g
                .map_positions(|p| Point2D { x: c * p.x - s * p.y + dx, y: s * p.x + c * p.y + dy })
                .unwrap();
            for (x, y) in pair_metrics(&g).iter().zip(&pair_metrics(&moved)) {
                prop_assert!((x.straightness.unwrap() - y.straightness.unwrap()).abs() <= 1e-9);
            }
            let (sa, sb) = (summarize(&g).unwrap(), summarize(&moved).unwrap());
            prop_assert!((sa.mean - sb.mean).abs() <= 1e-9);
            prop_assert!((sa.std_dev - sb.std_dev).abs() <= 1e-9);
        }
    }
}

#[test]
fn geodesic_bounds_and_symmetry() {
    for g in generated() {
        let rows = all_pairs(&g);
        for u in 0..g.node_count() {
            for v in 0..g.node_count() {
                let d = rows[u].distances[v];
                assert!((d - rows[v].distances[u]).abs() <= 1e-12);
                assert!(d >= euclidean_distance(g.position(u), g.position(v)) - 1e-12);
            }
        }
    }
}

#[test]
fn summary_independent_of_node_order() {
    let g = generate_radioconcentric(RadialSpec::new(6, 3, 2).unwrap()).unwrap();
    let n = g.node_count();
    // reverse the ids
    let positions: Vec<_> = (0..n).rev().map(|i| g.position(i)).collect();
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| (n - 1 - u, n - 1 - v))
        .collect();
    let relabelled = NetworkGraph::new(positions, &edges).unwrap();
    let (a, b) = (summarize(&g).unwrap(), summarize(&relabelled).unwrap());
    assert_eq!(a.pair_count, b.pair_count);
    assert!((a.mean - b.mean).abs() <= 1e-12);
    assert!((a.std_dev - b.std_dev).abs() <= 1e-12);
}

#[test]
fn summary_invariants() {
    for g in generated() {
        let n = g.node_count();
        let s = summarize(&g).unwrap();
        assert_eq!(s.pair_count + s.skipped_pairs, n * (n - 1) / 2);
        assert!(s.mean > 0.0 && s.mean <= 1.0);
        assert!(s.std_dev >= 0.0);
    }
}

#[test]
fn corner_curve_matches_closed_form_for_all_sizes() {
    for s in 1..=20 {
        let g = generate_rectilinear(GridSpec::new(s).unwrap()).unwrap();
        let worst = center_curve_check(&g).unwrap();
        assert!(worst <= 1e-9, "s={s}: {worst}");
    }
}

#[test]
fn homothety_on_generated_radial_graphs() {
    let spec = RadialSpec::new(9, 4, 5).unwrap();
    let g = generate_radioconcentric(spec).unwrap();
    let row = straightness_core::shortest_paths::dijkstra(&g, 0).unwrap();
    let s = |id: usize| g.position(id).norm() / row.distances[id];
    for step in 1..5 {
        for radius in 0..9 {
            let inner = s(spec.subdivision_node(1, radius, step));
            for ring in 2..=4 {
                assert!((inner - s(spec.subdivision_node(ring, radius, step))).abs() <= 1e-9);
            }
        }
    }
}

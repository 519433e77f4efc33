//! Straightness of perfect rectilinear and radio-concentric networks.
//!
//! Straightness of a route is the crow-flies distance divided by the
//! shortest on-network distance. This crate builds the two idealised network
//! families, evaluates the closed-form center-to-periphery straightness for
//! each, measures graph straightness with Dijkstra over all node pairs, and
//! drives the parameter sweeps and plots exposed by the `straightness` CLI.

pub mod analytic;
pub mod error;
pub mod generators;
pub mod metrics;
pub mod model;
pub mod output;
pub mod shortest_paths;
pub mod svg;
pub mod sweep;
pub mod validate;

pub use analytic::{Angle, NetworkKind, Sector};
pub use error::{Error, Result};
pub use generators::{GridSpec, RadialSpec};
pub use metrics::{RouteMetrics, SkipPolicy, StraightnessSummary};
pub use model::{NetworkGraph, NodeId, Point2D};
pub use shortest_paths::DistanceRow;
pub use sweep::SweepResult;

//! Exact combinatorial geometry on finite patches of planar tessellations.
//!
//! Graphs are rotation systems with per-vertex completeness flags; every
//! quantity that depends on the infinite tessellation is only computed where all
//! the vertices involved are complete.

pub mod curvature;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod isoperimetry;
pub mod scalar;
pub mod surd;

pub use curvature::{gauss_bonnet_check, kappa, walk_turn, GaussBonnetReport, GbVariant, Side, TurnReport};
pub use error::{Error, Result};
pub use generators::{platonic, regular_patch, PatchSpec};
pub use isoperimetry::{phi, subgraph_ratios, IsoRatios, PhiValue, Ratio};
pub use graph::walk::{boundary_walk, inner_boundary_walk, outer_layer_walk};
pub use graph::{BoundaryWalk, PlaneGraph, Subgraph, WalkKind};
pub use scalar::ExactScalar;
pub use surd::QuadSurd;

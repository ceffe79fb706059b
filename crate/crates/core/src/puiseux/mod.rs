//! Puiseux arcs, Newton polygons, sliding and the root tree.

pub mod polygon;
pub mod series;
pub mod tree;

pub use polygon::{newton_polygon, ord_along, ord_generic, sliding_step, Edge, NewtonPolygon, Order, Slope};
pub use series::{GenericArc, TruncatedPuiseux};
pub use tree::{
    joint_root_tree, multiplicity, pair_approximation, real_approximation, root_tree, ApproxArc,
    RootBranch, RootTree,
};

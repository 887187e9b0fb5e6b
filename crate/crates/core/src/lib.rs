//! Power domination on graphs: observation rules, exact solvers, the
//! constructive bound for claw-free diamond-free cubic graphs, and bounds for
//! Cartesian products.

pub mod construct;
pub mod exact;
pub mod graph;
pub mod observe;
pub mod products;

//! Precoloring extension for triangle-free plane graphs.
//!
//! Extendability of a 3-coloring of the outer cycle is decided through
//! nowhere-zero Z3-flows in the dual and a family of small max-flow
//! problems. Small critical graphs are classified and cross-checked against
//! a brute-force oracle on exhaustively generated instances.

pub mod coloring_flow;
pub mod criticality;
pub mod crosscheck;
pub mod extension_solver;
pub mod generator;
pub mod maxflow;
pub mod plane_graph;

pub use coloring_flow::{brute_force_extend, enumerate_outer_colorings, Coloring};
pub use extension_solver::{decide_extension, Verdict};
pub use plane_graph::{parse_plane_graph, PlaneGraph};

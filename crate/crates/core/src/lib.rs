//! The edge-flipping puzzle on a finite simple connected graph.
//!
//! Edges are black or white. A move on a black edge flips the colour of
//! every edge sharing exactly one endpoint with it. This crate computes the
//! orbits of that action in closed form, solves puzzles with shortest move
//! sequences, describes the group generated by the moves, and relates it to
//! vertex flipping on line graphs. Brute-force enumerations are kept
//! alongside as oracles.

pub mod bits;
pub mod corpus;
pub mod edge_space;
pub mod error;
pub mod flip;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod orbit;
pub mod perm;
pub mod selfcheck;
pub mod solver;
pub mod structure;
pub mod vertex_flip;

pub use edge_space::{EdgeSet, SimpleBasis, VertexSet};
pub use error::{Error, Result};
pub use flip::{GroupElement, Move, MoveSequence};
pub use graph::{Graph, SpanningTree};
pub use orbit::{OrbitClass, OrbitDescriptor, Puzzle};
pub use perm::Permutation;
pub use solver::Solution;
pub use structure::{SemidirectElement, StructureDescriptor};
pub use vertex_flip::{VertexGroupDescriptor, YGraphSpec};

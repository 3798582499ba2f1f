//! Exact solvers, kernelization and gadget constructions for vertex-deletion
//! games on graphs: Arc-Kayles, Node-Kayles, their non-disconnecting variants
//! and connected subtraction games `CSG(S)`.
//!
//! Every position is a [`VertexSubset`] of a fixed host [`Graph`]. The crate is
//! `no_std` and only needs an allocator.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod corpus;
pub mod error;
pub mod generate;
pub mod graph;
pub mod iso;
pub mod kernel;
pub mod reductions;
pub mod rules;
pub mod solver;
pub mod structure;
pub mod subset;
pub mod symmetry;
pub mod tractable;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use rules::{apply_move, legal_moves, move_orbits, Move, Ruleset};
pub use solver::{solve_grundy, solve_outcome, Outcome, SolveReport};
pub use subset::{VertexSubset, SUBSET_CAPACITY};

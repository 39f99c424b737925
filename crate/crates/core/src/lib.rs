//! Spanning even trees: trees in which every two leaves are at even distance.
//!
//! The crate verifies candidate trees, finds them by exhaustive search on
//! small graphs, recognizes several graph classes on which the problem is
//! polynomial and constructs trees (or certificates of non-existence) on
//! them, and builds the hardness reduction from CNF satisfiability.

pub mod cli;
pub mod coloring;
pub mod dot;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod recognize;
pub mod reduction;
pub mod selfcheck;
pub mod solve;
pub mod text;

pub use coloring::{admissible_coloring, verify_even_spanning_tree, Color, EvenTree, PartialColoring, VerifyReport};
pub use graph::{edge, Edge, Graph, GraphError};

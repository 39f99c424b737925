//! The hardness reduction from CNF satisfiability: formula to graph, a
//! spanning even tree from a satisfying assignment, and an assignment back
//! from any spanning even tree.

mod build;
mod cnf;
pub mod gadget;
mod mapfile;

pub use build::{build_reduction, build_with, ClausePos, Reduction, ReductionError, ReductionMap, Role};
pub use cnf::{parse_dimacs, Cnf, CnfError};
pub use mapfile::{format_map, parse_map};

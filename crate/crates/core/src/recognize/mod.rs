//! Graph class recognition. Each recognizer returns the structural witness
//! its solver consumes, or `None` when the graph is not in the class.

mod block_cut;
mod cobipartite;
mod cograph;
mod split;
mod unit_interval;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use block_cut::{block_cut_tree, BlockCutTree};
pub use cobipartite::{cobipartite_partition, CliquePair};
pub use cograph::{cograph_join_decompose, is_cograph, JoinSplit};
pub use split::{split_partition, SplitPartition};
pub use unit_interval::{is_umbrella_free, unit_interval_order, UIOrdering};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("needs at least {needed} vertices, graph has {n}")]
    TooSmall { needed: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphClass {
    Cograph,
    Cobipartite,
    UnitInterval,
    Split,
    Block,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] =
        [GraphClass::Cograph, GraphClass::Cobipartite, GraphClass::UnitInterval, GraphClass::Split, GraphClass::Block];

    pub fn label(self) -> &'static str {
        match self {
            GraphClass::Cograph => "cograph",
            GraphClass::Cobipartite => "cobipartite",
            GraphClass::UnitInterval => "unit-interval",
            GraphClass::Split => "split",
            GraphClass::Block => "block",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::ALL.into_iter().find(|c| c.label() == s).ok_or_else(|| format!("unknown graph class {s:?}"))
    }
}

/// Runs every recognizer.
pub fn recognize(g: &Graph) -> BTreeSet<GraphClass> {
    let mut out = BTreeSet::new();
    if is_cograph(g) {
        out.insert(GraphClass::Cograph);
    }
    if matches!(cobipartite_partition(g), Ok(Some(_))) {
        out.insert(GraphClass::Cobipartite);
    }
    if unit_interval_order(g).is_some() {
        out.insert(GraphClass::UnitInterval);
    }
    if split_partition(g).is_some() {
        out.insert(GraphClass::Split);
    }
    if block_cut_tree(g).is_some() {
        out.insert(GraphClass::Block);
    }
    out
}

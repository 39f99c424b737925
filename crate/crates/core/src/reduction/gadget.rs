//! The two gadgets of the reduction, found by exhaustive search against the
//! properties the correctness argument relies on.
//!
//! Variable gadget: six vertices, connected, exactly two degree-1 vertices,
//! and a connection vertex `v` of higher degree. Call a spanning tree of the
//! gadget *admissible* if it has a proper 2-coloring with every leaf other
//! than `v` black. There must be exactly two admissible trees, `v` white in
//! one (true) and black in the other (false), and both must be even trees of
//! the gadget on their own. Inside the full reduction every gadget vertex
//! except `v` keeps all its edges inside the gadget, so the restriction of
//! any spanning even tree to the gadget is admissible, hence one of the two.
//!
//! Connector gadget: endpoints `a = 0` and `b = 1`; for each of the four
//! color pairs on `(a, b)` it must admit both a connecting pattern and a
//! disconnecting one.

use std::sync::OnceLock;

use thiserror::Error;

use crate::coloring::Color;
use crate::graph::{Edge, Graph};
use crate::oracle::{self, find_pattern, PatternKind, PatternRequirement, PatternWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("gadget check failed: {0}")]
pub struct GadgetError(pub String);

fn fail<T>(msg: impl Into<String>) -> Result<T, GadgetError> {
    Err(GadgetError(msg.into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableGadget {
    pub graph: Graph,
    pub connection: usize,
    /// Edges of the tree with the connection vertex white.
    pub true_tree: Vec<Edge>,
    /// Edges of the tree with the connection vertex black.
    pub false_tree: Vec<Edge>,
}

/// One row of the connector contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectorPattern {
    pub kind: PatternKind,
    pub a_color: Color,
    pub b_color: Color,
    pub witness: PatternWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectorGadget {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
    /// All eight rows: `{Connector, Disconnector} × {B, W}²`.
    pub patterns: Vec<ConnectorPattern>,
}

impl ConnectorGadget {
    pub fn pattern(&self, kind: PatternKind, a_color: Color, b_color: Color) -> &ConnectorPattern {
        self.patterns
            .iter()
            .find(|p| p.kind == kind && p.a_color == a_color && p.b_color == b_color)
            .expect("connector table has every row")
    }
}

const COLORS: [Color; 2] = [Color::Black, Color::White];
const KINDS: [PatternKind; 2] = [PatternKind::Connector, PatternKind::Disconnector];

/// Admissible spanning trees of a candidate variable gadget with their
/// connection-vertex colors.
fn admissible_trees(g: &Graph, v: usize) -> Vec<(Vec<Edge>, Color)> {
    let mut out = Vec::new();
    let _ = oracle::for_each_spanning_tree(g, oracle::DEFAULT_CAP, |edges| {
        let t = Graph::from_valid_edges(g.n(), edges.iter().copied());
        let depth = t.distances_from(v);
        let leaf_parity: Vec<usize> =
            (0..g.n()).filter(|&u| u != v && t.degree(u) == 1).map(|u| depth[u] % 2).collect();
        if let Some(&p) = leaf_parity.first() {
            if leaf_parity.iter().all(|&q| q == p) {
                // v sits at even depth, so it shares the leaves' color iff p is even.
                let v_color = if p == 0 { Color::Black } else { Color::White };
                out.push((edges.to_vec(), v_color));
            }
        }
        std::ops::ControlFlow::Continue(())
    });
    out
}

impl VariableGadget {
    pub fn validate(&self) -> Result<(), GadgetError> {
        let g = &self.graph;
        let v = self.connection;
        if g.n() != 6 || v >= 6 {
            return fail("variable gadget must have six vertices and a connection vertex among them");
        }
        if !g.is_connected() {
            return fail("variable gadget is disconnected");
        }
        let pendants = (0..6).filter(|&u| g.degree(u) == 1).count();
        if pendants != 2 || g.degree(v) == 1 {
            return fail("variable gadget needs exactly two degree-1 vertices, neither the connection vertex");
        }
        let trees = admissible_trees(g, v);
        if trees.len() != 2 {
            return fail(format!("variable gadget has {} admissible trees, expected 2", trees.len()));
        }
        let white = trees.iter().find(|(_, c)| *c == Color::White);
        let black = trees.iter().find(|(_, c)| *c == Color::Black);
        let (Some((t_true, _)), Some((t_false, _))) = (white, black) else {
            return fail("the two admissible trees give the connection vertex the same color");
        };
        for (name, t) in [("true", t_true), ("false", t_false)] {
            if !crate::verify_even_spanning_tree(g, t).is_valid() {
                return fail(format!("{name} tree is not an even tree of the gadget"));
            }
        }
        if *t_true != self.true_tree || *t_false != self.false_tree {
            return fail("stored true/false trees differ from the enumerated ones");
        }
        Ok(())
    }
}

impl ConnectorGadget {
    pub fn validate(&self) -> Result<(), GadgetError> {
        let g = &self.graph;
        if self.a >= g.n() || self.b >= g.n() || self.a == self.b {
            return fail("connector endpoints must be two distinct vertices");
        }
        for kind in KINDS {
            for ca in COLORS {
                for cb in COLORS {
                    let req = PatternRequirement::new(kind, vec![(self.a, ca), (self.b, cb)]);
                    let Some(expected) = find_pattern(g, &req) else {
                        return fail(format!("no {kind:?} pattern for colors ({ca}, {cb})"));
                    };
                    let stored = self.patterns.iter().find(|p| p.kind == kind && p.a_color == ca && p.b_color == cb);
                    if stored.map(|p| &p.witness) != Some(&expected) {
                        return fail(format!("stored {kind:?} pattern for ({ca}, {cb}) is stale"));
                    }
                }
            }
        }
        if self.patterns.len() != 8 {
            return fail("connector table must have exactly eight rows");
        }
        Ok(())
    }
}

/// Graphs on `n` vertices by edge count, then lexicographic edge list.
fn graphs_in_order(n: usize, min_edges: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = pairs.len();
    (min_edges..=total).flat_map(move |m| {
        let pairs = pairs.clone();
        Combinations::new(total, m).map(move |idx| Graph::from_valid_edges(n, idx.iter().map(|&i| pairs[i])))
    })
}

/// k-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let bump = (0..k).rev().find(|&i| next[i] < self.n - k + i);
        self.current = bump.map(|i| {
            next[i] += 1;
            for j in i + 1..k {
                next[j] = next[j - 1] + 1;
            }
            next
        });
        Some(out)
    }
}

/// Exhaustive search for the variable gadget: the first graph (fewest
/// edges, then lexicographic) and connection vertex meeting the contract.
pub fn synth_variable_gadget() -> Result<VariableGadget, GadgetError> {
    for g in graphs_in_order(6, 5) {
        if !g.is_connected() || (0..6).filter(|&u| g.degree(u) == 1).count() != 2 {
            continue;
        }
        for v in (0..6).filter(|&v| g.degree(v) != 1) {
            let trees = admissible_trees(&g, v);
            if trees.len() != 2 || trees[0].1 == trees[1].1 {
                continue;
            }
            let (t_true, t_false) = if trees[0].1 == Color::White {
                (trees[0].0.clone(), trees[1].0.clone())
            } else {
                (trees[1].0.clone(), trees[0].0.clone())
            };
            let gadget = VariableGadget { graph: g.clone(), connection: v, true_tree: t_true, false_tree: t_false };
            if gadget.validate().is_ok() {
                return Ok(gadget);
            }
        }
    }
    fail("no six-vertex graph meets the variable gadget contract")
}

pub(crate) fn connector_table(g: &Graph) -> Option<Vec<ConnectorPattern>> {
    let mut patterns = Vec::with_capacity(8);
    for kind in KINDS {
        for a_color in COLORS {
            for b_color in COLORS {
                let req = PatternRequirement::new(kind, vec![(0, a_color), (1, b_color)]);
                let witness = find_pattern(g, &req)?;
                patterns.push(ConnectorPattern { kind, a_color, b_color, witness });
            }
        }
    }
    Some(patterns)
}

/// Exhaustive search for the connector gadget over 4 to 8 vertices with
/// endpoints 0 and 1.
pub fn synth_connector_gadget() -> Result<ConnectorGadget, GadgetError> {
    for n in 4..=8 {
        for g in graphs_in_order(n, n - 1) {
            if !g.is_connected() {
                continue;
            }
            if let Some(patterns) = connector_table(&g) {
                return Ok(ConnectorGadget { graph: g, a: 0, b: 1, patterns });
            }
        }
    }
    fail("no graph on 4 to 8 vertices meets the connector contract")
}

fn shipped_variable() -> VariableGadget {
    let graph = Graph::new(6, VARIABLE_EDGES.iter().copied()).expect("shipped gadget is a simple graph");
    let trees = admissible_trees(&graph, VARIABLE_CONNECTION);
    let pick = |c: Color| trees.iter().find(|t| t.1 == c).map(|t| t.0.clone()).unwrap_or_default();
    VariableGadget {
        connection: VARIABLE_CONNECTION,
        true_tree: pick(Color::White),
        false_tree: pick(Color::Black),
        graph,
    }
}

fn shipped_connector() -> ConnectorGadget {
    let graph = Graph::new(CONNECTOR_ORDER, CONNECTOR_EDGES.iter().copied()).expect("shipped gadget is a simple graph");
    let patterns = connector_table(&graph).unwrap_or_default();
    ConnectorGadget { graph, a: 0, b: 1, patterns }
}

// Results of `synth_variable_gadget` and `synth_connector_gadget`.
// Variable gadget: triangle {0, 1, 2} with 0 joined to 3, which carries the
// two pendants 4 and 5. The true tree walks 0-1-2, the false tree 0-2-1.
const VARIABLE_EDGES: &[Edge] = &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (3, 5)];
const VARIABLE_CONNECTION: usize = 1;
// Connector gadget: triangle {a, 2, 3} with b pendant on 2.
const CONNECTOR_ORDER: usize = 4;
const CONNECTOR_EDGES: &[Edge] = &[(0, 2), (0, 3), (1, 2), (2, 3)];

/// The shipped variable gadget, validated on first use.
pub fn variable_gadget() -> &'static VariableGadget {
    static CELL: OnceLock<VariableGadget> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = shipped_variable();
        g.validate().expect("shipped variable gadget meets its contract");
        g
    })
}

/// The shipped connector gadget, validated on first use.
pub fn connector_gadget() -> &'static ConnectorGadget {
    static CELL: OnceLock<ConnectorGadget> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = shipped_connector();
        g.validate().expect("shipped connector gadget meets its contract");
        g
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn shipped_gadgets_match_a_fresh_search() {
        assert_eq!(&synth_variable_gadget().unwrap(), variable_gadget());
        assert_eq!(&synth_connector_gadget().unwrap(), connector_gadget());
    }

    #[test]
    fn variable_gadget_trees() {
        let g = variable_gadget();
        let t = crate::verify_even_spanning_tree(&g.graph, &g.true_tree);
        assert_eq!(t.coloring().unwrap()[g.connection], Color::White);
        let f = crate::verify_even_spanning_tree(&g.graph, &g.false_tree);
        assert_eq!(f.coloring().unwrap()[g.connection], Color::Black);
        // both pendants are black leaves in both trees
        for tree in [&g.true_tree, &g.false_tree] {
            let c = crate::verify_even_spanning_tree(&g.graph, tree);
            assert_eq!(c.coloring().unwrap()[4], Color::Black);
            assert_eq!(c.coloring().unwrap()[5], Color::Black);
        }
        let evens = oracle::all_even_spanning_trees(&g.graph, oracle::DEFAULT_CAP).unwrap();
        assert_eq!(evens.len(), 2);
    }

    #[test]
    fn connector_rows() {
        let c = connector_gadget();
        let w = &c.pattern(PatternKind::Connector, Color::White, Color::Black).witness;
        assert_eq!(w.coloring[0], Color::White);
        assert_eq!(w.coloring[1], Color::Black);
        let d = &c.pattern(PatternKind::Disconnector, Color::Black, Color::Black).witness;
        let forest = Graph::new(c.graph.n(), d.edges.iter().copied()).unwrap();
        assert_eq!(forest.components().len(), 2);
    }

    #[test]
    fn corrupted_gadgets_fail_validation() {
        let mut v = variable_gadget().clone();
        v.connection = 0;
        assert!(v.validate().is_err());
        let mut v = variable_gadget().clone();
        std::mem::swap(&mut v.true_tree, &mut v.false_tree);
        assert!(v.validate().is_err());
        let mut c = connector_gadget().clone();
        c.graph = Graph::path(4);
        assert!(c.validate().is_err());
    }
}

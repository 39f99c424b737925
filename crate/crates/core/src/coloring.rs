//! Black/white colorings, the admissible coloring of an even tree, and the
//! spanning-even-tree verifier.
//!
//! A tree is even exactly when it has a proper 2-coloring in which every
//! leaf is black. That coloring is unique when it exists, so verification
//! reduces to one breadth-first 2-coloring plus a look at the leaves.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{edge, DisjointSets, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Option<Color> {
        match c {
            'B' | 'b' => Some(Color::Black),
            'W' | 'w' => Some(Color::White),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A coloring where some vertices may still be uncolored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring(Vec<Option<Color>>);

impl PartialColoring {
    pub fn uncolored(n: usize) -> Self {
        PartialColoring(vec![None; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.0[v] = Some(c);
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.0[v].is_some()
    }

    /// Vertices that carry a color.
    pub fn colored(&self) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.0.iter().enumerate().filter_map(|(v, c)| c.map(|c| (v, c)))
    }

    /// The full coloring, if every vertex is colored.
    pub fn complete(&self) -> Option<Vec<Color>> {
        self.0.iter().copied().collect()
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.0
    }
}

impl From<Vec<Option<Color>>> for PartialColoring {
    fn from(v: Vec<Option<Color>>) -> Self {
        PartialColoring(v)
    }
}

/// A spanning even tree together with its admissible coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenTree {
    pub edges: Vec<Edge>,
    pub coloring: Vec<Color>,
}

impl EvenTree {
    /// Builds an even tree from an edge list, computing the coloring.
    /// Returns `None` if the edges do not form an even tree on `n` vertices.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Option<EvenTree> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        let tree = Graph::new(n, edges.iter().copied()).ok()?;
        let coloring = admissible_coloring(&tree).ok()??;
        Some(EvenTree { edges, coloring })
    }

    pub fn n(&self) -> usize {
        self.coloring.len()
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        (0..self.n()).filter(|&v| deg[v] == 1).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("input graph is not a tree")]
    NotATree,
}

/// The unique proper 2-coloring of `tree` in which every leaf is black.
///
/// `Ok(None)` means the tree is not even. The one-vertex tree is even and
/// its vertex is black.
pub fn admissible_coloring(tree: &Graph) -> Result<Option<Vec<Color>>, ColoringError> {
    if !tree.is_tree() {
        return Err(ColoringError::NotATree);
    }
    let coloring = two_color_from(tree, 0);
    let mut leaf_color = None;
    for (v, &c) in coloring.iter().enumerate() {
        if tree.degree(v) == 1 {
            match leaf_color {
                None => leaf_color = Some(c),
                Some(l) if l != c => return Ok(None),
                Some(_) => {}
            }
        }
    }
    Ok(Some(match leaf_color {
        Some(Color::White) => coloring.into_iter().map(Color::opposite).collect(),
        _ => coloring,
    }))
}

/// Proper 2-coloring of a connected bipartite graph anchored at `root`
/// (black).
fn two_color_from(g: &Graph, root: usize) -> Vec<Color> {
    let mut color = vec![None; g.n()];
    color[root] = Some(Color::Black);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let cu: Color = color[u].expect("queued vertices are colored");
        for &w in g.neighbors(u) {
            if color[w].is_none() {
                color[w] = Some(cu.opposite());
                queue.push_back(w);
            }
        }
    }
    color.into_iter().map(|c| c.unwrap_or(Color::Black)).collect()
}

/// Outcome of checking a candidate spanning even tree, in the order the
/// checks run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyReport {
    Valid {
        coloring: Vec<Color>,
    },
    /// The candidate uses an edge that is not in the graph, or a vertex id
    /// outside it.
    NotSubgraph {
        edge: Edge,
    },
    /// The same edge appears twice.
    RepeatedEdge {
        edge: Edge,
    },
    WrongEdgeCount {
        expected: usize,
        found: usize,
    },
    /// Right number of edges but the edge set contains a cycle, so it does
    /// not connect every vertex.
    NotSpanning {
        components: usize,
    },
    /// Two leaves joined by a path of odd length.
    OddLeafPair {
        leaves: (usize, usize),
    },
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyReport::Valid { .. })
    }

    pub fn coloring(&self) -> Option<&[Color]> {
        match self {
            VerifyReport::Valid { coloring } => Some(coloring),
            _ => None,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyReport::Valid { .. } => write!(f, "valid spanning even tree"),
            VerifyReport::NotSubgraph { edge: (u, v) } => {
                write!(f, "invalid: edge {u}-{v} is not an edge of the graph")
            }
            VerifyReport::RepeatedEdge { edge: (u, v) } => {
                write!(f, "invalid: edge {u}-{v} listed more than once")
            }
            VerifyReport::WrongEdgeCount { expected, found } => {
                write!(f, "invalid: not spanning ({found} edges, a spanning tree needs {expected})")
            }
            VerifyReport::NotSpanning { components } => {
                write!(f, "invalid: not spanning, edges leave {components} components")
            }
            VerifyReport::OddLeafPair { leaves: (a, b) } => {
                write!(f, "invalid: leaves {a} and {b} are at odd distance")
            }
        }
    }
}

/// Checks that `tree` is a spanning even tree of `g`.
pub fn verify_even_spanning_tree(g: &Graph, tree: &[Edge]) -> VerifyReport {
    let n = g.n();
    let mut normalized: Vec<Edge> = Vec::with_capacity(tree.len());
    for &(u, v) in tree {
        let e = edge(u, v);
        if !g.has_edge(e.0, e.1) {
            return VerifyReport::NotSubgraph { edge: e };
        }
        normalized.push(e);
    }
    normalized.sort_unstable();
    if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
        return VerifyReport::RepeatedEdge { edge: w[0] };
    }
    let expected = n.saturating_sub(1);
    if normalized.len() != expected || n == 0 {
        return VerifyReport::WrongEdgeCount { expected, found: normalized.len() };
    }
    let mut sets = DisjointSets::new(n);
    let mut merges = 0;
    for &(u, v) in &normalized {
        if sets.union(u, v) {
            merges += 1;
        }
    }
    if merges != expected {
        return VerifyReport::NotSpanning { components: n - merges };
    }
    let t = Graph::from_valid_edges(n, normalized);
    let coloring = two_color_from(&t, 0);
    let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    if let Some(&first) = leaves.first() {
        if let Some(&other) = leaves.iter().find(|&&v| coloring[v] != coloring[first]) {
            return VerifyReport::OddLeafPair { leaves: (first, other) };
        }
    }
    let flip = leaves.first().is_some_and(|&v| coloring[v] == Color::White);
    let coloring = if flip { coloring.into_iter().map(Color::opposite).collect() } else { coloring };
    VerifyReport::Valid { coloring }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{Black as B, White as W};

    #[test]
    fn path_three_is_even() {
        assert_eq!(admissible_coloring(&Graph::path(3)).unwrap(), Some(vec![B, W, B]));
    }

    #[test]
    fn path_four_is_not_even() {
        assert_eq!(admissible_coloring(&Graph::path(4)).unwrap(), None);
    }

    #[test]
    fn star_center_is_white() {
        assert_eq!(admissible_coloring(&Graph::star(4)).unwrap(), Some(vec![W, B, B, B, B]));
    }

    #[test]
    fn single_vertex_is_black_and_k2_is_odd() {
        assert_eq!(admissible_coloring(&Graph::empty(1)).unwrap(), Some(vec![B]));
        assert_eq!(admissible_coloring(&Graph::path(2)).unwrap(), None);
    }

    #[test]
    fn non_tree_is_a_contract_violation() {
        assert_eq!(admissible_coloring(&Graph::cycle(3)), Err(ColoringError::NotATree));
        assert_eq!(admissible_coloring(&Graph::empty(2)), Err(ColoringError::NotATree));
    }

    #[test]
    fn verify_star_in_k4() {
        let report = verify_even_spanning_tree(&Graph::complete(4), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(report, VerifyReport::Valid { coloring: vec![W, B, B, B] });
    }

    #[test]
    fn verify_rejects_every_spanning_tree_of_c4() {
        let c4 = Graph::cycle(4);
        for skip in 0..4 {
            let t: Vec<Edge> =
                c4.edges().iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, e)| e).collect();
            assert!(matches!(verify_even_spanning_tree(&c4, &t), VerifyReport::OddLeafPair { .. }));
        }
    }

    #[test]
    fn verify_reports_failures_in_order() {
        let p3 = Graph::path(3);
        assert_eq!(verify_even_spanning_tree(&p3, &[(0, 1)]), VerifyReport::WrongEdgeCount { expected: 2, found: 1 });
        assert_eq!(verify_even_spanning_tree(&p3, &[(0, 2), (0, 1)]), VerifyReport::NotSubgraph { edge: (0, 2) });
        assert_eq!(verify_even_spanning_tree(&p3, &[(1, 0), (0, 1)]), VerifyReport::RepeatedEdge { edge: (0, 1) });
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(
            verify_even_spanning_tree(&g, &[(0, 1), (1, 2), (0, 2)]),
            VerifyReport::NotSpanning { components: 2 }
        );
    }

    #[test]
    fn even_tree_from_edges_round_trips() {
        let t = EvenTree::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(t.edges, vec![(0, 1), (1, 2)]);
        assert_eq!(t.leaves(), vec![0, 2]);
        assert!(EvenTree::from_edges(4, [(0, 1), (1, 2), (2, 3)]).is_none());
    }
}

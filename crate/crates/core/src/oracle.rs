//! Exhaustive ground truth for small graphs.
//!
//! Spanning trees are enumerated by include/exclude branching over the edges
//! in lexicographic order, trying "include" first. An edge is included only
//! if it joins two components and excluded only if the remaining edges still
//! connect the graph, so every branch ends in exactly one spanning tree and
//! trees come out in lexicographic order of their sorted edge lists.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::coloring::{verify_even_spanning_tree, Color, EvenTree, VerifyReport};
use crate::graph::{DisjointSets, Edge, Graph};

/// Default bound on enumerated trees (or search branches for the even-tree
/// search).
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: u64 },
}

/// Calls `visit` on every spanning tree of `g` in lexicographic order.
/// Returns the number of trees visited.
pub fn for_each_spanning_tree<F>(g: &Graph, cap: u64, mut visit: F) -> Result<u64, OracleError>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let mut search = TreeSearch::new(g, cap, false);
    search.run(&mut |t: &[Edge]| visit(t))?;
    Ok(search.trees)
}

pub fn enumerate_spanning_trees(g: &Graph, cap: u64) -> Result<Vec<Vec<Edge>>, OracleError> {
    let mut out = Vec::new();
    for_each_spanning_tree(g, cap, |t| {
        out.push(t.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_spanning_trees(g: &Graph, cap: u64) -> Result<u64, OracleError> {
    for_each_spanning_tree(g, cap, |_| ControlFlow::Continue(()))
}

/// The lexicographically first spanning even tree of `g`, if any.
///
/// The search prunes branches in which two vertices that are certain to end
/// up as leaves already sit at odd distance in the partial forest; such a
/// branch contains no even tree, so the answer equals the first even tree of
/// the plain enumeration. `cap` bounds the number of branches explored
/// (complete trees plus pruned dead ends).
pub fn oracle_even_spanning_tree(g: &Graph, cap: u64) -> Result<Option<EvenTree>, OracleError> {
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let mut found = None;
    let mut search = TreeSearch::new(g, cap, true);
    search.run(&mut |t: &[Edge]| match verify_even_spanning_tree(g, t) {
        VerifyReport::Valid { coloring } => {
            found = Some(EvenTree { edges: t.to_vec(), coloring });
            ControlFlow::Break(())
        }
        _ => ControlFlow::Continue(()),
    })?;
    Ok(found)
}

/// Every spanning even tree of `g`, in lexicographic order.
pub fn all_even_spanning_trees(g: &Graph, cap: u64) -> Result<Vec<EvenTree>, OracleError> {
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let mut out = Vec::new();
    let mut search = TreeSearch::new(g, cap, true);
    search.run(&mut |t: &[Edge]| {
        if let VerifyReport::Valid { coloring } = verify_even_spanning_tree(g, t) {
            out.push(EvenTree { edges: t.to_vec(), coloring });
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

enum Undo {
    Link { child: usize, root: usize, old_leaf: Option<bool> },
    Leaf { root: usize, old: Option<bool> },
}

/// Include/exclude search with an undoable parity union-find over the
/// included edges.
struct TreeSearch<'g> {
    g: &'g Graph,
    cap: u64,
    prune: bool,
    branches: u64,
    trees: u64,
    chosen: Vec<Edge>,
    /// `false` once an edge has been excluded.
    available: Vec<bool>,
    parent: Vec<usize>,
    /// Parity of each vertex relative to its union-find parent.
    parity: Vec<bool>,
    size: Vec<usize>,
    /// Per root: parity (relative to the root) shared by the known leaves
    /// of its component.
    leaf_parity: Vec<Option<bool>>,
    /// Included plus undecided incident edges.
    potential_degree: Vec<usize>,
    trail: Vec<Undo>,
}

impl<'g> TreeSearch<'g> {
    fn new(g: &'g Graph, cap: u64, prune: bool) -> Self {
        let n = g.n();
        TreeSearch {
            g,
            cap,
            prune,
            branches: 0,
            trees: 0,
            chosen: Vec::with_capacity(n.saturating_sub(1)),
            available: vec![true; g.edge_count()],
            parent: (0..n).collect(),
            parity: vec![false; n],
            size: vec![1; n],
            leaf_parity: vec![None; n],
            potential_degree: (0..n).map(|v| g.degree(v)).collect(),
            trail: Vec::new(),
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Edge]) -> ControlFlow<()>) -> Result<(), OracleError> {
        if self.prune && self.g.n() >= 2 {
            for v in 0..self.g.n() {
                if self.potential_degree[v] == 1 && !self.mark_leaf(v) {
                    return Ok(());
                }
            }
        }
        self.step(0, visit).map(|_| ())
    }

    fn find(&self, mut v: usize) -> (usize, bool) {
        let mut p = false;
        while self.parent[v] != v {
            p ^= self.parity[v];
            v = self.parent[v];
        }
        (v, p)
    }

    fn consume_branch(&mut self) -> Result<(), OracleError> {
        self.branches += 1;
        if self.branches > self.cap {
            Err(OracleError::CapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Records that `v` will be a leaf. Returns false on a parity conflict.
    fn mark_leaf(&mut self, v: usize) -> bool {
        let (root, p) = self.find(v);
        match self.leaf_parity[root] {
            Some(q) => q == p,
            None => {
                self.trail.push(Undo::Leaf { root, old: None });
                self.leaf_parity[root] = Some(p);
                true
            }
        }
    }

    /// Joins the components of `u` and `v` (which must differ) with an odd
    /// link. Returns false on a parity conflict between their known leaves.
    fn link(&mut self, u: usize, v: usize) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        let (root, child) = if self.size[ru] >= self.size[rv] { (ru, rv) } else { (rv, ru) };
        let rel = pu ^ pv ^ true;
        let old_leaf = self.leaf_parity[root];
        self.trail.push(Undo::Link { child, root, old_leaf });
        self.parent[child] = root;
        self.parity[child] = rel;
        self.size[root] += self.size[child];
        if let Some(q) = self.leaf_parity[child] {
            let q = q ^ rel;
            match old_leaf {
                Some(r) if r != q => return false,
                Some(_) => {}
                None => self.leaf_parity[root] = Some(q),
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Link { child, root, old_leaf } => {
                    self.parent[child] = child;
                    self.parity[child] = false;
                    self.size[root] -= self.size[child];
                    self.leaf_parity[root] = old_leaf;
                }
                Undo::Leaf { root, old } => self.leaf_parity[root] = old,
            }
        }
    }

    fn still_connected_without(&self, idx: usize) -> bool {
        let mut sets = DisjointSets::new(self.g.n());
        let mut merges = 0;
        for (i, &(u, v)) in self.g.edges().iter().enumerate() {
            if i != idx && self.available[i] && sets.union(u, v) {
                merges += 1;
            }
        }
        merges + 1 == self.g.n()
    }

    fn step(
        &mut self,
        idx: usize,
        visit: &mut dyn FnMut(&[Edge]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>, OracleError> {
        if self.chosen.len() + 1 == self.g.n() || self.g.n() <= 1 {
            self.consume_branch()?;
            self.trees += 1;
            return Ok(visit(&self.chosen));
        }
        if idx == self.g.edge_count() {
            // Unreachable with the connectivity guard, kept for safety.
            return Ok(ControlFlow::Continue(()));
        }
        let (u, v) = self.g.edges()[idx];

        if self.find(u).0 != self.find(v).0 {
            let mark = self.trail.len();
            let ok = self.link(u, v) || !self.prune;
            if ok {
                self.chosen.push((u, v));
                let flow = self.step(idx + 1, visit);
                self.chosen.pop();
                self.undo_to(mark);
                if matches!(flow?, ControlFlow::Break(())) {
                    return Ok(ControlFlow::Break(()));
                }
            } else {
                self.undo_to(mark);
                self.consume_branch()?;
            }
        }

        if self.still_connected_without(idx) {
            let mark = self.trail.len();
            self.available[idx] = false;
            self.potential_degree[u] -= 1;
            self.potential_degree[v] -= 1;
            let mut ok = true;
            if self.prune {
                for w in [u, v] {
                    if self.potential_degree[w] == 1 && !self.mark_leaf(w) {
                        ok = false;
                        break;
                    }
                }
            }
            let flow =
                if ok { self.step(idx + 1, visit) } else { self.consume_branch().map(|_| ControlFlow::Continue(())) };
            self.undo_to(mark);
            self.available[idx] = true;
            self.potential_degree[u] += 1;
            self.potential_degree[v] += 1;
            return flow;
        }
        Ok(ControlFlow::Continue(()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// One spanning tree containing every boundary vertex.
    Connector,
    /// One component per boundary vertex.
    Disconnector,
}

/// A requirement on a spanning forest of a small gadget graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternRequirement {
    pub kind: PatternKind,
    /// Boundary vertices with their required colors.
    pub boundary: Vec<(usize, Color)>,
}

impl PatternRequirement {
    pub fn new(kind: PatternKind, boundary: Vec<(usize, Color)>) -> Self {
        PatternRequirement { kind, boundary }
    }

    fn is_boundary(&self, v: usize) -> bool {
        self.boundary.iter().any(|&(b, _)| b == v)
    }
}

/// A spanning forest meeting a [`PatternRequirement`], with its coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub edges: Vec<Edge>,
    pub coloring: Vec<Color>,
}

/// Whether `g` has a spanning forest meeting `req`: the right component
/// structure, a proper 2-coloring matching the boundary colors, and no
/// white leaf outside the boundary.
pub fn check_pattern(g: &Graph, req: &PatternRequirement) -> bool {
    find_pattern(g, req).is_some()
}

/// The first witness for `req` in lexicographic order of forest edge lists.
pub fn find_pattern(g: &Graph, req: &PatternRequirement) -> Option<PatternWitness> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &(b, _) in &req.boundary {
        if b >= n || std::mem::replace(&mut seen[b], true) {
            return None;
        }
    }
    let components = match req.kind {
        PatternKind::Connector => 1,
        PatternKind::Disconnector => req.boundary.len(),
    };
    if components == 0 || components > n {
        return None;
    }
    let target = n - components;
    let mut chosen = Vec::with_capacity(target);
    let mut found = None;
    let _ = forest_search(g, 0, target, &mut DisjointSets::new(n), &mut chosen, &mut |forest| match pattern_coloring(
        g.n(),
        forest,
        req,
    ) {
        Some(coloring) => {
            found = Some(PatternWitness { edges: forest.to_vec(), coloring });
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    found
}

/// Acyclic edge subsets of size `target`, in lexicographic order.
fn forest_search(
    g: &Graph,
    idx: usize,
    target: usize,
    sets: &mut DisjointSets,
    chosen: &mut Vec<Edge>,
    visit: &mut dyn FnMut(&[Edge]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if chosen.len() == target {
        return visit(chosen);
    }
    if g.edge_count() - idx < target - chosen.len() {
        return ControlFlow::Continue(());
    }
    let (u, v) = g.edges()[idx];
    let snapshot = sets.clone();
    if sets.union(u, v) {
        chosen.push((u, v));
        let flow = forest_search(g, idx + 1, target, sets, chosen, visit);
        chosen.pop();
        *sets = snapshot;
        flow?;
    }
    forest_search(g, idx + 1, target, sets, chosen, visit)
}

fn pattern_coloring(n: usize, forest: &[Edge], req: &PatternRequirement) -> Option<Vec<Color>> {
    let f = Graph::from_valid_edges(n, forest.iter().copied());
    let comps = f.components();
    // Component structure.
    match req.kind {
        PatternKind::Connector => {
            if comps.len() != 1 {
                return None;
            }
        }
        PatternKind::Disconnector => {
            let ok = comps.iter().all(|c| c.iter().filter(|&&v| req.is_boundary(v)).count() == 1);
            if !ok {
                return None;
            }
        }
    }
    let mut coloring = vec![Color::Black; n];
    for comp in &comps {
        let root = comp[0];
        let dist = f.distances_from(root);
        let anchored = [Color::Black, Color::White].into_iter().find(|&root_color| {
            let color_of = |v: usize| if dist[v].is_multiple_of(2) { root_color } else { root_color.opposite() };
            let boundary_ok =
                req.boundary.iter().filter(|(b, _)| comp.binary_search(b).is_ok()).all(|&(b, c)| color_of(b) == c);
            let leaves_ok = comp.iter().all(|&v| req.is_boundary(v) || f.degree(v) != 1 || color_of(v) == Color::Black);
            boundary_ok && leaves_ok
        })?;
        for &v in comp {
            coloring[v] = if dist[v].is_multiple_of(2) { anchored } else { anchored.opposite() };
        }
    }
    Some(coloring)
}

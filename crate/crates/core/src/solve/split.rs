use std::collections::BTreeSet;

use super::{
    found, require_connected, single_vertex, AuxDerivation, NoTreeCertificate, SmallGraph, SolveError, SolveOutcome,
};
use crate::graph::{Edge, Graph};
use crate::recognize::{split_partition, SplitPartition};

/// Which branch of the split-graph construction applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitCase {
    /// At most one clique vertex.
    SmallClique,
    /// At least two clique vertices, each with a pendant neighbor.
    AllPendant,
    /// Some clique vertex has no pendant neighbor.
    Rooted,
}

impl SplitCase {
    pub fn of(g: &Graph, p: &SplitPartition) -> SplitCase {
        if p.clique.len() <= 1 {
            SplitCase::SmallClique
        } else if pendant_clique(g).len() == p.clique.len() {
            SplitCase::AllPendant
        } else {
            SplitCase::Rooted
        }
    }
}

/// Clique vertices adjacent to a degree-1 vertex. In a split graph with at
/// least two clique vertices every degree-1 vertex sits in the independent
/// side.
fn pendant_clique(g: &Graph) -> BTreeSet<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).map(|v| g.neighbors(v)[0]).collect()
}

/// `g` with every clique-clique edge removed.
pub fn split_hat(g: &Graph, p: &SplitPartition) -> Graph {
    let mut in_clique = vec![false; g.n()];
    for &k in &p.clique {
        in_clique[k] = true;
    }
    g.filter_edges(|(u, v)| !(in_clique[u] && in_clique[v]))
}

pub fn solve_split(g: &Graph) -> Result<SolveOutcome, SolveError> {
    require_connected(g)?;
    let Some(p) = split_partition(g) else {
        return Ok(SolveOutcome::NotInClass);
    };
    match SplitCase::of(g, &p) {
        SplitCase::SmallClique => small_clique(g, &p),
        SplitCase::AllPendant => {
            let hat = split_hat(g, &p);
            if hat.is_connected() {
                found(g, hat.bfs_spanning_forest(), "split")
            } else {
                let derivation = AuxDerivation::SplitHat { clique: p.clique, independent: p.independent };
                Ok(SolveOutcome::NoTree(NoTreeCertificate::DisconnectedAux {
                    components: hat.components(),
                    derivation,
                }))
            }
        }
        SplitCase::Rooted => found(g, rooted(g, &p), "split"),
    }
}

fn small_clique(g: &Graph, p: &SplitPartition) -> Result<SolveOutcome, SolveError> {
    match g.n() {
        1 => Ok(single_vertex()),
        2 => Ok(SolveOutcome::NoTree(NoTreeCertificate::SmallException(SmallGraph::K2))),
        _ => {
            let c = p.clique[0];
            found(g, g.neighbors(c).iter().map(|&w| (c, w)).collect(), "split")
        }
    }
}

/// Tree rooted at a clique vertex `r` without a pendant neighbor. Clique
/// vertices hanging off `r` are white and every independent vertex and every
/// other clique vertex ends up black two levels further down.
fn rooted(g: &Graph, p: &SplitPartition) -> Vec<Edge> {
    let n = g.n();
    let mut in_clique = vec![false; n];
    for &k in &p.clique {
        in_clique[k] = true;
    }
    let k1 = pendant_clique(g);
    let r = *p.clique.iter().find(|k| !k1.contains(k)).expect("rooted case has a non-pendant clique vertex");

    // Independent neighbors of r of degree 2 pull their other neighbor into K'.
    let i2: Vec<usize> = g.neighbors(r).iter().copied().filter(|&v| !in_clique[v] && g.degree(v) == 2).collect();
    let mut k_prime: BTreeSet<usize> = k1.clone();
    for &v in &i2 {
        k_prime.extend(g.neighbors(v).iter().copied().filter(|&w| w != r));
    }
    k_prime.remove(&r);
    let mut in_k_prime = vec![false; n];
    for &k in &k_prime {
        in_k_prime[k] = true;
    }
    let in_i_prime: Vec<bool> =
        (0..n).map(|v| !in_clique[v] && g.neighbors(v).iter().any(|&w| in_k_prime[w])).collect();
    let k_tilde: Vec<usize> = p.clique.iter().copied().filter(|&k| k != r && !in_k_prime[k]).collect();
    let i_tilde: Vec<usize> = p.independent.iter().copied().filter(|&v| !in_i_prime[v]).collect();

    let mut edges = Vec::with_capacity(n - 1);
    let mut placed = vec![false; n];

    // Each K' vertex gets a private leaf: a neighbor whose neighborhood is
    // just {u} or {u, r}.
    for &u in &k_prime {
        let leaf = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&v| !in_clique[v] && g.neighbors(v).iter().all(|&w| w == u || w == r))
            .expect("every K' vertex has a private neighbor");
        edges.push((r, u));
        edges.push((u, leaf));
        placed[leaf] = true;
    }
    for v in (0..n).filter(|&v| in_i_prime[v] && !placed[v]) {
        let u = *g.neighbors(v).iter().find(|&&w| in_k_prime[w]).unwrap();
        edges.push((u, v));
    }

    if k_tilde.is_empty() {
        return edges;
    }
    if i_tilde.is_empty() {
        if let Some(&w) = k_prime.first() {
            edges.extend(k_tilde.iter().map(|&k| (w, k)));
        } else {
            let v = k_tilde[0];
            edges.push((r, v));
            edges.extend(k_tilde[1..].iter().map(|&k| (v, k)));
        }
        return edges;
    }

    // Greedy maximal matching between K~ and I~, edges in lexicographic order.
    let mut in_k_tilde = vec![false; n];
    for &k in &k_tilde {
        in_k_tilde[k] = true;
    }
    let mut in_i_tilde = vec![false; n];
    for &v in &i_tilde {
        in_i_tilde[v] = true;
    }
    let mut mate = vec![None; n];
    for &(a, b) in g.edges() {
        let (k, v) = if in_k_tilde[a] && in_i_tilde[b] {
            (a, b)
        } else if in_k_tilde[b] && in_i_tilde[a] {
            (b, a)
        } else {
            continue;
        };
        if mate[k].is_none() && mate[v].is_none() {
            mate[k] = Some(v);
            mate[v] = Some(k);
        }
    }
    let matched_k: Vec<usize> = k_tilde.iter().copied().filter(|&k| mate[k].is_some()).collect();
    for &k in &matched_k {
        edges.push((r, k));
        edges.push((k, mate[k].unwrap()));
    }
    let hub = matched_k[0];
    edges.extend(k_tilde.iter().filter(|&&k| mate[k].is_none()).map(|&k| (hub, k)));
    for &v in i_tilde.iter().filter(|&&v| mate[v].is_none()) {
        // Maximality: every K~ neighbor of an unmatched I~ vertex is matched.
        let u = *g.neighbors(v).iter().find(|&&w| in_k_tilde[w]).expect("I~ vertex has a K~ neighbor");
        edges.push((u, v));
    }
    edges
}

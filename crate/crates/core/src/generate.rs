//! Graph generators: exhaustive families of small class members and seeded
//! random ones. Exhaustive families may contain isomorphic copies.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All labeled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many vertices to enumerate all graphs");
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_valid_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
    })
}

/// All labeled trees on `n` vertices, from Prüfer sequences.
pub fn all_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let count = if n <= 2 { 1 } else { (n as u64).pow(len as u32) };
    (0..count).map(move |mut code| {
        let mut seq = vec![0; len];
        for s in seq.iter_mut() {
            *s = (code % n as u64) as usize;
            code /= n as u64;
        }
        prufer_tree(n, &seq)
    })
}

/// The tree with Prüfer sequence `seq` (length `n - 2`).
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_valid_edges(n, edges)
}

pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.random_range(0..n)).collect();
    prufer_tree(n, &seq)
}

/// A random spanning tree plus each other pair with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let extra: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_valid_edges(n, tree.edges().iter().copied().chain(extra))
}

pub fn random_relabel(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

fn disjoint_union(parts: &[&Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_valid_edges(offset, edges)
}

fn join(parts: &[&Graph]) -> Graph {
    let union = disjoint_union(parts);
    let mut side = Vec::with_capacity(union.n());
    for (i, g) in parts.iter().enumerate() {
        side.extend(std::iter::repeat_n(i, g.n()));
    }
    let cross =
        (0..union.n()).flat_map(|u| (u + 1..union.n()).map(move |v| (u, v))).filter(|&(u, v)| side[u] != side[v]);
    Graph::from_valid_edges(union.n(), union.edges().iter().copied().chain(cross).collect::<Vec<_>>())
}

/// Multisets of at least two items whose sizes sum to `n`, drawn from
/// `pools[size]`, each multiset listed once.
fn multisets(n: usize, pools: &[Vec<Graph>]) -> Vec<Vec<&Graph>> {
    fn go<'a>(
        left: usize,
        min: (usize, usize),
        pools: &'a [Vec<Graph>],
        cur: &mut Vec<&'a Graph>,
        out: &mut Vec<Vec<&'a Graph>>,
    ) {
        if left == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for size in min.0..=left.min(pools.len() - 1) {
            let start = if size == min.0 { min.1 } else { 0 };
            for idx in start..pools[size].len() {
                cur.push(&pools[size][idx]);
                go(left - size, (size, idx), pools, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, (1, 0), pools, &mut Vec::new(), &mut out);
    out
}

/// Every connected cograph on `n` vertices up to isomorphism, built from
/// cotrees: a connected cograph with at least two vertices is the join of
/// at least two cographs that are single vertices or disconnected.
pub fn connected_cographs(n: usize) -> Vec<Graph> {
    // connected[k], co_connected[k]: cographs on k vertices whose root is a
    // join (or a single vertex), resp. a union (or a single vertex).
    let mut connected: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::empty(1)]];
    let mut co_connected: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::empty(1)]];
    for k in 2..=n {
        let joins = multisets(k, &co_connected).iter().map(|parts| join(parts)).collect();
        let unions = multisets(k, &connected).iter().map(|parts| disjoint_union(parts)).collect();
        connected.push(joins);
        co_connected.push(unions);
    }
    connected.swap_remove(n)
}

/// A random connected cograph: a random cotree with a join at the root.
pub fn random_cograph(n: usize, rng: &mut impl Rng) -> Graph {
    fn build(n: usize, join_here: bool, rng: &mut impl Rng) -> Graph {
        if n == 1 {
            return Graph::empty(1);
        }
        let parts = rng.random_range(2..=n.min(4));
        let mut sizes = vec![1; parts];
        for _ in 0..n - parts {
            sizes[rng.random_range(0..parts)] += 1;
        }
        let children: Vec<Graph> = sizes.iter().map(|&s| build(s, !join_here, rng)).collect();
        let refs: Vec<&Graph> = children.iter().collect();
        if join_here {
            join(&refs)
        } else {
            disjoint_union(&refs)
        }
    }
    let g = build(n, true, rng);
    random_relabel(&g, rng)
}

/// Cliques on `0..a` and `a..a+b` plus the cross edges selected by `mask`
/// (bit `i * b + j` joins `i` and `a + j`).
pub fn two_cliques(a: usize, b: usize, mask: u64) -> Graph {
    let mut edges: Vec<Edge> = Vec::new();
    for side in [0..a, a..a + b] {
        let vs: Vec<usize> = side.collect();
        for (i, &u) in vs.iter().enumerate() {
            edges.extend(vs[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    for i in 0..a {
        for j in 0..b {
            if mask >> (i * b + j) & 1 == 1 {
                edges.push((i, a + j));
            }
        }
    }
    Graph::new(a + b, edges).expect("valid cobipartite construction")
}

/// Every connected cobipartite graph on `n >= 2` vertices as two cliques
/// plus a cross edge set (with repeats up to isomorphism).
pub fn connected_cobipartite(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 0..=n / 2 {
        let b = n - a;
        for mask in 0u64..1 << (a * b) {
            let g = two_cliques(a, b, mask);
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

pub fn random_cobipartite(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let a = rng.random_range(1..=n / 2);
        let b = n - a;
        let p = rng.random_range(0.05..0.9);
        let mask = (0..a * b).filter(|_| rng.random_bool(p)).fold(0u64, |m, i| m | 1 << i);
        let g = two_cliques(a, b, mask);
        if g.is_connected() {
            return random_relabel(&g, rng);
        }
    }
}

/// The unit interval graph where vertex `i` is adjacent to every `j` with
/// `i < j <= reach[i]`; `reach` must be nondecreasing with `reach[i] >= i`.
pub fn from_reach(reach: &[usize]) -> Graph {
    let n = reach.len();
    let edges = (0..n).flat_map(|i| (i + 1..=reach[i]).map(move |j| (i, j)));
    Graph::new(n, edges).expect("valid reach sequence")
}

/// Every connected unit interval graph on `n` vertices, in the canonical
/// order where each vertex reaches a nondecreasing suffix boundary.
pub fn connected_unit_interval(n: usize) -> Vec<Graph> {
    fn go(i: usize, n: usize, reach: &mut Vec<usize>, out: &mut Vec<Graph>) {
        if i == n {
            out.push(from_reach(reach));
            return;
        }
        let lo = reach.last().copied().unwrap_or(0).max((i + 1).min(n - 1));
        for r in lo..n {
            reach.push(r);
            go(i + 1, n, reach, out);
            reach.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn random_unit_interval(n: usize, rng: &mut impl Rng) -> Graph {
    let mut reach = Vec::with_capacity(n);
    for i in 0..n {
        let lo = reach.last().copied().unwrap_or(0).max((i + 1).min(n - 1));
        let hi = (lo + rng.random_range(0..3)).min(n - 1);
        reach.push(rng.random_range(lo..=hi));
    }
    random_relabel(&from_reach(&reach), rng)
}

/// A clique on `0..k` and one independent vertex per mask, adjacent to the
/// clique vertices whose bits are set.
pub fn split_from_masks(k: usize, masks: &[u32]) -> Graph {
    let mut edges: Vec<Edge> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    for (i, &m) in masks.iter().enumerate() {
        edges.extend((0..k).filter(|&c| m >> c & 1 == 1).map(|c| (c, k + i)));
    }
    Graph::new(k + masks.len(), edges).expect("valid split construction")
}

/// Every connected split graph on `n` vertices: a clique of size `k >= 1`
/// and a multiset of nonempty neighborhoods for the independent vertices.
pub fn connected_split(n: usize) -> Vec<Graph> {
    fn go(k: usize, left: usize, min: u32, masks: &mut Vec<u32>, out: &mut Vec<Graph>) {
        if left == 0 {
            out.push(split_from_masks(k, masks));
            return;
        }
        for m in min..1u32 << k {
            masks.push(m);
            go(k, left - 1, m, masks, out);
            masks.pop();
        }
    }
    let mut out = Vec::new();
    for k in 1..=n {
        go(k, n - k, 1, &mut Vec::new(), &mut out);
    }
    out
}

pub fn random_split(n: usize, rng: &mut impl Rng) -> Graph {
    let k = rng.random_range(1..=n);
    let masks: Vec<u32> = (0..n - k)
        .map(|_| {
            // Mostly sparse neighborhoods so pendant-heavy cases show up.
            if rng.random_bool(0.5) {
                1 << rng.random_range(0..k)
            } else {
                rng.random_range(1..1u32 << k)
            }
        })
        .collect();
    random_relabel(&split_from_masks(k, &masks), rng)
}

/// Attach a clique on `size - 1` new vertices plus `at` to `g`.
fn attach_clique(g: &Graph, at: usize, size: usize) -> Graph {
    let n = g.n();
    let members: Vec<usize> = std::iter::once(at).chain(n..n + size - 1).collect();
    let mut edges = g.edges().to_vec();
    for (i, &u) in members.iter().enumerate() {
        edges.extend(members[i + 1..].iter().map(|&v| (u, v)));
    }
    Graph::new(n + size - 1, edges).expect("valid block construction")
}

/// Every connected block graph on `n` vertices, grown by gluing cliques at
/// single vertices (with repeats up to isomorphism).
pub fn connected_block_graphs(n: usize) -> Vec<Graph> {
    fn go(g: Graph, n: usize, out: &mut Vec<Graph>) {
        if g.n() == n {
            out.push(g);
            return;
        }
        for size in 2..=n - g.n() + 1 {
            for at in 0..g.n() {
                go(attach_clique(&g, at, size), n, out);
            }
        }
    }
    let mut out = Vec::new();
    for first in 1..=n {
        if first == 1 && n > 1 {
            continue;
        }
        go(Graph::complete(first), n, &mut out);
    }
    out
}

pub fn random_block_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::complete(rng.random_range(1..=n.min(4)));
    if g.n() == 1 && n > 1 {
        g = Graph::complete(2);
    }
    while g.n() < n {
        let size = rng.random_range(2..=(n - g.n() + 1).min(4));
        let at = rng.random_range(0..g.n());
        g = attach_clique(&g, at, size);
    }
    random_relabel(&g, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::{
        block_cut_tree, cobipartite_partition, cograph_join_decompose, is_cograph, split_partition, unit_interval_order,
    };

    #[test]
    fn counts() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_trees(5).count(), 125);
        assert!(all_trees(6).all(|t| t.is_tree()));
        // connected cographs on n vertices up to isomorphism: 1, 1, 2, 5, 12, 33
        let counts: Vec<usize> = (1..=6).map(|n| connected_cographs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 12, 33]);
        // connected unit interval graphs on n vertices: Catalan(n - 1)
        let counts: Vec<usize> = (1..=6).map(|n| connected_unit_interval(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn families_are_in_class() {
        for n in 1..=7 {
            for g in connected_cographs(n) {
                assert!(g.is_connected() && is_cograph(&g));
                if n > 1 {
                    assert!(cograph_join_decompose(&g).is_some());
                }
            }
            for g in connected_unit_interval(n) {
                assert!(g.is_connected() && unit_interval_order(&g).is_some());
            }
            for g in connected_split(n) {
                assert!(g.is_connected() && split_partition(&g).is_some());
            }
            for g in connected_block_graphs(n) {
                assert!(block_cut_tree(&g).is_some());
            }
            if n >= 2 {
                for g in connected_cobipartite(n) {
                    assert!(cobipartite_partition(&g).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn random_families_are_in_class_and_reproducible() {
        let mut r = rng(7);
        for n in 2..=14 {
            assert!(is_cograph(&random_cograph(n, &mut r)));
            assert!(cobipartite_partition(&random_cobipartite(n, &mut r)).unwrap().is_some());
            assert!(unit_interval_order(&random_unit_interval(n, &mut r)).is_some());
            assert!(split_partition(&random_split(n, &mut r)).is_some());
            assert!(block_cut_tree(&random_block_graph(n, &mut r)).is_some());
            assert!(random_connected(n, 0.2, &mut r).is_connected());
        }
        let a = random_connected(10, 0.3, &mut rng(1));
        let b = random_connected(10, 0.3, &mut rng(1));
        assert_eq!(a, b);
    }
}

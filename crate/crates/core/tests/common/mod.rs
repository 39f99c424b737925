//! Validators written from the definitions, sharing no code with the
//! library beyond the `Graph` container.

#![allow(dead_code)]

use std::collections::VecDeque;

use even_tree::{Color, Edge, Graph};

pub fn bfs_dist(n: usize, adj: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn adjacency(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// A spanning tree of `g` whose leaves are pairwise at even distance,
/// checked pair by pair.
pub fn is_even_spanning_tree(g: &Graph, edges: &[Edge]) -> bool {
    let n = g.n();
    if edges.len() + 1 != n || edges.iter().any(|&(u, v)| u >= n || v >= n || !g.has_edge(u, v)) {
        return false;
    }
    let adj = adjacency(n, edges);
    if bfs_dist(n, &adj, 0).contains(&usize::MAX) {
        return false;
    }
    leaves_pairwise_even(n, &adj)
}

/// Every two leaves at even distance. A single vertex counts as even.
pub fn leaves_pairwise_even(n: usize, adj: &[Vec<usize>]) -> bool {
    let leaves: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 1).collect();
    leaves.iter().all(|&a| {
        let d = bfs_dist(n, adj, a);
        leaves.iter().all(|&b| d[b].is_multiple_of(2))
    })
}

pub fn tree_is_even(tree: &Graph) -> bool {
    let adj: Vec<Vec<usize>> = (0..tree.n()).map(|v| tree.neighbors(v).to_vec()).collect();
    leaves_pairwise_even(tree.n(), &adj)
}

/// `colors` properly colors the tree and every leaf is black.
pub fn is_admissible(n: usize, edges: &[Edge], colors: &[Color]) -> bool {
    let adj = adjacency(n, edges);
    colors.len() == n
        && edges.iter().all(|&(u, v)| colors[u] != colors[v])
        && (0..n).filter(|&v| adj[v].len() == 1).all(|v| colors[v] == Color::Black)
}

/// Number of spanning trees as a Laplacian cofactor, by fraction-free
/// Gaussian elimination.
pub fn matrix_tree_count(g: &Graph) -> i128 {
    let n = g.n();
    if n <= 1 {
        return 1;
    }
    let size = n - 1;
    let mut m = vec![vec![0i128; size]; size];
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if a < size {
                m[a][a] += 1;
                if b < size {
                    m[a][b] -= 1;
                }
            }
        }
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..size {
        if m[k][k] == 0 {
            match (k + 1..size).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[size - 1][size - 1]
}

fn degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

pub fn is_k2(g: &Graph) -> bool {
    g.n() == 2 && g.edge_count() == 1
}

/// A connected graph with maximum degree at most two and n - 1 edges.
pub fn is_path(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() + 1 == g.n() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

pub fn is_p4(g: &Graph) -> bool {
    g.n() == 4 && is_path(g)
}

pub fn is_c4(g: &Graph) -> bool {
    g.n() == 4 && g.is_connected() && degrees(g) == [2, 2, 2, 2]
}

/// Complete bipartite with both sides of size t >= 1.
pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 || n % 2 == 1 || g.edge_count() != (n / 2) * (n / 2) {
        return false;
    }
    let side: Vec<bool> = (0..n).map(|v| !g.has_edge(0, v)).collect();
    let left = side.iter().filter(|&&s| s).count();
    left == n / 2 && (0..n).all(|u| (0..n).all(|v| u == v || g.has_edge(u, v) == (side[u] != side[v])))
}

/// No induced path on four vertices, checked over all ordered quadruples.
pub fn is_p4_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != b && d != a && !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Vertex set splits into two cliques: the complement is bipartite.
pub fn is_cobipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in (0..n).filter(|&w| w != u && !g.has_edge(u, w)) {
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].unwrap());
                        stack.push(w);
                    }
                    Some(x) if x == side[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Some clique plus independent set covers the vertices, by trying every
/// subset as the clique.
pub fn is_split(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        g.edges().iter().all(|&(u, v)| inside(u) || inside(v))
            && (0..n).all(|u| (0..n).all(|v| u == v || !inside(u) || !inside(v) || g.has_edge(u, v)))
    })
}

/// Connected, chordal and diamond-free. A diamond shows up as an edge
/// whose ends have two non-adjacent common neighbors.
pub fn is_block_graph(g: &Graph) -> bool {
    let n = g.n();
    if !g.is_connected() {
        return false;
    }
    for &(u, v) in g.edges() {
        let common: Vec<usize> = (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).collect();
        if common.iter().any(|&a| common.iter().any(|&b| a < b && !g.has_edge(a, b))) {
            return false;
        }
    }
    is_chordal(g)
}

/// A vertex with three pairwise non-adjacent neighbors.
pub fn has_claw(g: &Graph) -> bool {
    (0..g.n()).any(|c| {
        let nb = g.neighbors(c);
        nb.iter().any(|&a| {
            nb.iter().any(|&b| {
                a < b && !g.has_edge(a, b) && nb.iter().any(|&d| b < d && !g.has_edge(a, d) && !g.has_edge(b, d))
            })
        })
    })
}

/// Repeatedly removes a simplicial vertex.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
                nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// Unit interval, by backtracking search for an umbrella-free ordering.
/// Exponential; meant for small graphs. Non-chordal graphs are rejected
/// up front since every unit interval graph is chordal and claw-free.
pub fn is_unit_interval(g: &Graph) -> bool {
    if !is_chordal(g) || has_claw(g) {
        return false;
    }
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search_umbrella_free(g, &mut order, &mut used)
}

fn search_umbrella_free(g: &Graph, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = g.n();
    if order.len() == n {
        return true;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        order.push(v);
        used[v] = true;
        if prefix_ok(g, order) && search_umbrella_free(g, order, used) {
            return true;
        }
        order.pop();
        used[v] = false;
    }
    false
}

/// For a prefix ending at position k: if some earlier vertex at position i
/// is adjacent to the new vertex, every vertex between them must be adjacent
/// to both ends.
fn prefix_ok(g: &Graph, order: &[usize]) -> bool {
    let k = order.len() - 1;
    let z = order[k];
    for i in 0..k {
        if g.has_edge(order[i], z) {
            for &y in &order[i + 1..k] {
                if !g.has_edge(order[i], y) || !g.has_edge(y, z) {
                    return false;
                }
            }
        }
    }
    true
}

use crate::graph::Graph;

/// A clique `clique` and a maximal independent set `independent` covering
/// the vertices. Maximality means every clique vertex has a neighbor in
/// `independent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Split partition from the degree sequence: with degrees sorted in
/// non-increasing order and `m` the largest index such that `d_m >= m - 1`,
/// the graph is split iff the first `m` degrees sum to
/// `m(m - 1) + sum of the rest`, and then the first `m` vertices form a
/// clique. Ties in degree go to the smaller id.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order.iter().enumerate().filter(|&(i, &v)| g.degree(v) >= i).map(|(i, _)| i + 1).max().unwrap_or(0);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut in_clique = vec![false; n];
    for &v in &order[..m] {
        in_clique[v] = true;
    }
    // Move clique vertices without an independent neighbor over, smallest
    // first. Such a vertex has no neighbor in the independent side, so the
    // side stays independent.
    while let Some(v) = (0..n).find(|&v| in_clique[v] && g.neighbors(v).iter().all(|&w| in_clique[w])) {
        in_clique[v] = false;
    }
    let (clique, independent) = (0..n).partition(|&v| in_clique[v]);
    Some(SplitPartition { clique, independent })
}

use super::{found, require_connected, single_vertex, NoTreeCertificate, SolveError, SolveOutcome};
use crate::graph::{Edge, Graph};
use crate::recognize::cograph_join_decompose;

/// Connected cographs have a spanning even tree unless they are `K_{t,t}`.
///
/// With `G = G[A] ⋈ G[B]`: if `|A| != |B|` the join edges alone contain a
/// complete bipartite spanning subgraph with unequal sides, which has an
/// even tree with every leaf on the larger side. If `|A| = |B|` and some side
/// has an internal edge `{v, u}`, build that tree on the join between
/// `side − u` and the other side (unequal again, `v` internal) and hang `u`
/// off `v`.
pub fn solve_cograph(g: &Graph) -> Result<SolveOutcome, SolveError> {
    require_connected(g)?;
    if g.n() == 1 {
        return Ok(single_vertex());
    }
    let Some(split) = cograph_join_decompose(g) else {
        return Ok(SolveOutcome::NotInClass);
    };
    let (a, b) = (split.first, split.second);
    let inside = |side: &[usize]| -> Option<Edge> {
        g.edges().iter().copied().find(|&(u, v)| side.binary_search(&u).is_ok() && side.binary_search(&v).is_ok())
    };

    if a.len() != b.len() {
        let (small, large) = if a.len() < b.len() { (&a, &b) } else { (&b, &a) };
        return found(g, complete_bipartite_tree(small, large), "cograph");
    }

    let internal = [(inside(&a), &a, &b), (inside(&b), &b, &a)]
        .into_iter()
        .filter_map(|(e, side, other)| e.map(|e| (e, side, other)))
        .min_by_key(|&(e, _, _)| e);
    let Some(((v, u), side, other)) = internal else {
        let t = a.len();
        return Ok(SolveOutcome::NoTree(NoTreeCertificate::BalancedBipartite { t, sides: (a, b) }));
    };
    let rest: Vec<usize> = side.iter().copied().filter(|&w| w != u).collect();
    let mut edges = complete_bipartite_tree(&rest, other);
    edges.push((v, u));
    found(g, edges, "cograph")
}

/// Spanning even tree of the complete bipartite graph between `small` and
/// `large` (`|small| < |large|`), all leaves in `large`. Uses only join
/// edges. Every vertex of `small` is internal unless the tree is a star.
fn complete_bipartite_tree(small: &[usize], large: &[usize]) -> Vec<Edge> {
    debug_assert!(!small.is_empty() && small.len() < large.len());
    if small.len() == 1 {
        return large.iter().map(|&w| (small[0], w)).collect();
    }
    let r = large[0];
    let mut edges: Vec<Edge> = small.iter().map(|&s| (s, r)).collect();
    // Matching between `small` and `large - r`.
    edges.extend(small.iter().zip(&large[1..]).map(|(&s, &w)| (s, w)));
    edges.extend(large[small.len() + 1..].iter().map(|&w| (small[0], w)));
    edges
}

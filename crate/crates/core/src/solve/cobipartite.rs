use super::{found, require_connected, NoTreeCertificate, SmallGraph, SolveError, SolveOutcome};
use crate::graph::Graph;
use crate::recognize::{cobipartite_partition, RecognizeError};

/// Connected cobipartite graphs have a spanning even tree unless they are
/// `K2`, `P4` or `C4`.
pub fn solve_cobipartite(g: &Graph) -> Result<SolveOutcome, SolveError> {
    let pair = match cobipartite_partition(g) {
        Ok(p) => p,
        Err(RecognizeError::TooSmall { needed, n }) => return Err(SolveError::TooSmall { needed, n }),
    };
    require_connected(g)?;
    let Some(pair) = pair else {
        return Ok(SolveOutcome::NotInClass);
    };
    let (small, large) =
        if pair.first.len() <= pair.second.len() { (pair.first, pair.second) } else { (pair.second, pair.first) };
    if g.n() == 2 {
        return Ok(SolveOutcome::NoTree(NoTreeCertificate::SmallException(SmallGraph::K2)));
    }

    if small.len() == 1 {
        // A neighbor of the lone vertex sees everything.
        let x = small[0];
        let center = g.neighbors(x)[0];
        let edges = (0..g.n()).filter(|&w| w != center).map(|w| (center, w)).collect();
        return found(g, edges, "cobipartite");
    }

    if large.len() >= 3 {
        // Depth-2 tree rooted at r: u collects the rest of `small`, v the
        // rest of `large`.
        let (r, u) = large
            .iter()
            .find_map(|&r| g.neighbors(r).iter().find(|w| small.contains(w)).map(|&u| (r, u)))
            .expect("connected graph has an edge between the cliques");
        let v = *large.iter().find(|&&w| w != r).unwrap();
        let mut edges = vec![(r, u), (r, v)];
        edges.extend(small.iter().filter(|&&w| w != u).map(|&w| (u, w)));
        edges.extend(large.iter().filter(|&&w| w != r && w != v).map(|&w| (v, w)));
        return found(g, edges, "cobipartite");
    }

    // Two cliques of size two.
    if let Some(c) = (0..4).find(|&v| g.degree(v) == 3) {
        let edges = (0..4).filter(|&w| w != c).map(|w| (c, w)).collect();
        return found(g, edges, "cobipartite");
    }
    let exception = if g.edge_count() == 3 { SmallGraph::P4 } else { SmallGraph::C4 };
    debug_assert!(exception.matches(g));
    Ok(SolveOutcome::NoTree(NoTreeCertificate::SmallException(exception)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::check_certificate;

    #[test]
    fn exceptions() {
        for (g, s) in
            [(Graph::path(2), SmallGraph::K2), (Graph::path(4), SmallGraph::P4), (Graph::cycle(4), SmallGraph::C4)]
        {
            let out = solve_cobipartite(&g).unwrap();
            assert_eq!(out, SolveOutcome::NoTree(NoTreeCertificate::SmallException(s)));
            check_certificate(&g, out.certificate().unwrap()).unwrap();
        }
    }

    #[test]
    fn two_triangles_joined_by_an_edge() {
        let g = Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]).unwrap();
        let t = solve_cobipartite(&g).unwrap().tree().cloned().unwrap();
        // depth-2 tree: root has two children, every leaf at depth 2
        let tg = Graph::new(6, t.edges.iter().copied()).unwrap();
        let root = (0..6).find(|&v| tg.degree(v) == 2 && t.coloring[v] == crate::Color::Black).unwrap();
        let depth = tg.distances_from(root);
        assert!(t.leaves().iter().all(|&l| depth[l] == 2), "{t:?}");
    }

    #[test]
    fn lone_vertex_side_gives_a_star() {
        // K3 plus a pendant
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let t = solve_cobipartite(&g).unwrap().tree().cloned().unwrap();
        assert_eq!(t.edges, vec![(0, 2), (1, 2), (2, 3)]);
    }

    #[test]
    fn diamond_uses_a_degree_three_star() {
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(solve_cobipartite(&g).unwrap().tree().is_some());
    }

    #[test]
    fn errors() {
        assert_eq!(solve_cobipartite(&Graph::empty(1)), Err(SolveError::TooSmall { needed: 2, n: 1 }));
        assert_eq!(solve_cobipartite(&Graph::cycle(5)), Ok(SolveOutcome::NotInClass));
    }
}

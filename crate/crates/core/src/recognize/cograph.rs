use crate::graph::Graph;

/// `G = G[first] ⋈ G[second]`: every `first`-`second` pair is adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinSplit {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// A graph is a cograph iff every induced subgraph on two or more vertices
/// is disconnected or has a disconnected complement.
pub fn is_cograph(g: &Graph) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    cograph_on(g, &all)
}

fn cograph_on(g: &Graph, vertices: &[usize]) -> bool {
    if vertices.len() <= 1 {
        return true;
    }
    let (h, map) = g.induced(vertices);
    let mut parts = h.components();
    if parts.len() == 1 {
        parts = h.complement().components();
        if parts.len() == 1 {
            return false;
        }
    }
    parts.iter().all(|part| {
        let original: Vec<usize> = part.iter().map(|&v| map[v]).collect();
        cograph_on(g, &original)
    })
}

/// Join decomposition of a connected cograph: `first` is the complement
/// component holding the smallest id, `second` the rest.
pub fn cograph_join_decompose(g: &Graph) -> Option<JoinSplit> {
    if g.n() < 2 || !g.is_connected() || !is_cograph(g) {
        return None;
    }
    let mut co_components = g.complement().components();
    let first = co_components.remove(0);
    let mut second: Vec<usize> = co_components.into_iter().flatten().collect();
    second.sort_unstable();
    Some(JoinSplit { first, second })
}

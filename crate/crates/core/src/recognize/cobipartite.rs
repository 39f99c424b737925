use super::RecognizeError;
use crate::graph::Graph;

/// Two disjoint cliques covering the vertex set. `first` is never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePair {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Splits the vertices into two cliques by 2-coloring the complement.
///
/// In each complement component the smallest vertex goes to `first`. A
/// complete graph yields `({smallest id}, rest)`.
pub fn cobipartite_partition(g: &Graph) -> Result<Option<CliquePair>, RecognizeError> {
    let n = g.n();
    if n < 2 {
        return Err(RecognizeError::TooSmall { needed: 2, n });
    }
    let co = g.complement();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(true);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for &w in co.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let (first, second): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side[v] == Some(true));
    if second.is_empty() {
        return Ok(Some(CliquePair { first: vec![0], second: (1..n).collect() }));
    }
    Ok(Some(CliquePair { first, second }))
}

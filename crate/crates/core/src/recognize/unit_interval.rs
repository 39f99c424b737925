use crate::graph::Graph;

/// A left-to-right vertex order with no umbrella: whenever `order[i]` and
/// `order[k]` are adjacent with `i < j < k`, `order[j]` is adjacent to both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UIOrdering {
    pub order: Vec<usize>,
}

impl UIOrdering {
    /// Position of each vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn is_umbrella_free(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    if n != g.n() {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    for i in 0..n {
        for k in i + 2..n {
            if g.has_edge(order[i], order[k]) {
                let ok = (i + 1..k).all(|j| g.has_edge(order[i], order[j]) && g.has_edge(order[j], order[k]));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographic breadth-first search. Among vertices with the largest
/// label, `prefer` picks the winner: the one appearing latest in the
/// previous sweep for a "+" sweep, or the smallest id for the first sweep.
fn lex_bfs(g: &Graph, rank: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(rank[a].cmp(&rank[b])))
            .expect("an unvisited vertex remains");
        visited[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Umbrella-free order by three LexBFS sweeps, the second and third
/// breaking ties toward the vertex latest in the previous sweep. The result
/// is validated before it is returned.
pub fn unit_interval_order(g: &Graph) -> Option<UIOrdering> {
    let n = g.n();
    // First sweep: smallest id wins ties.
    let first_rank: Vec<usize> = (0..n).map(|v| n - v).collect();
    let mut order = lex_bfs(g, &first_rank);
    for _ in 0..2 {
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        order = lex_bfs(g, &rank);
    }
    is_umbrella_free(g, &order).then_some(UIOrdering { order })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_order_follows_the_path() {
        let o = unit_interval_order(&Graph::path(4)).unwrap();
        assert!(o.order == vec![0, 1, 2, 3] || o.order == vec![3, 2, 1, 0], "{:?}", o.order);
    }

    #[test]
    fn claw_is_rejected() {
        assert_eq!(unit_interval_order(&Graph::star(3)), None);
    }

    #[test]
    fn paw_has_an_umbrella_free_order() {
        // triangle a=0, b=1, c=2 with pendant p=3 on a
        let paw = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert!(is_umbrella_free(&paw, &[3, 0, 1, 2]));
        let o = unit_interval_order(&paw).unwrap();
        assert!(is_umbrella_free(&paw, &o.order));
        assert!(!is_umbrella_free(&paw, &[0, 3, 1, 2]));
    }

    #[test]
    fn umbrella_check_rejects_non_permutations() {
        let g = Graph::path(3);
        assert!(!is_umbrella_free(&g, &[0, 1]));
        assert!(!is_umbrella_free(&g, &[0, 1, 1]));
    }

    #[test]
    fn cycles_are_not_unit_interval() {
        assert_eq!(unit_interval_order(&Graph::cycle(4)), None);
        assert_eq!(unit_interval_order(&Graph::cycle(5)), None);
        assert!(unit_interval_order(&Graph::cycle(3)).is_some());
    }
}

use super::{found, require_connected, single_vertex, NoTreeCertificate, SolveError, SolveOutcome};
use crate::coloring::Color;
use crate::graph::{Edge, Graph};
use crate::recognize::unit_interval_order;

/// Connected unit interval graphs have a spanning even tree unless they are
/// paths on an even number of vertices.
///
/// Consecutive vertices of an umbrella-free order are adjacent, so the order
/// is a Hamiltonian path. With `n` odd that path is the tree. With `n` even
/// pick three consecutive pairwise adjacent vertices `u1, u2, u3`, walk the
/// order skipping `u2` (odd length again) and hang `u2` as a leaf off
/// whichever of `u1`, `u3` is white on that path.
pub fn solve_unit_interval(g: &Graph) -> Result<SolveOutcome, SolveError> {
    require_connected(g)?;
    let Some(ui) = unit_interval_order(g) else {
        return Ok(SolveOutcome::NotInClass);
    };
    let n = g.n();
    if n == 1 {
        return Ok(single_vertex());
    }
    let order = ui.order;
    if n % 2 == 1 {
        return found(g, path_edges(&order), "unit-interval");
    }
    let Some(i) = (0..n - 2).find(|&i| g.has_edge(order[i], order[i + 2])) else {
        return Ok(SolveOutcome::NoTree(NoTreeCertificate::OddPath { order }));
    };
    let (u1, u2, u3) = (order[i], order[i + 1], order[i + 2]);
    let rest: Vec<usize> = order.iter().copied().filter(|&v| v != u2).collect();
    let mut edges = path_edges(&rest);
    // On a path with both ends black, colors alternate from the start.
    let color_at = |pos: usize| if pos.is_multiple_of(2) { Color::Black } else { Color::White };
    let anchor = if color_at(i) == Color::White { u1 } else { u3 };
    edges.push((anchor, u2));
    found(g, edges, "unit-interval")
}

fn path_edges(order: &[usize]) -> Vec<Edge> {
    order.windows(2).map(|w| (w[0], w[1])).collect()
}

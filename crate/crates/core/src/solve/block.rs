use super::{
    found, require_connected, single_vertex, AuxDerivation, ForceReason, ForcedColor, NoTreeCertificate, SmallGraph,
    SolveError, SolveOutcome,
};
use crate::coloring::{Color, PartialColoring};
use crate::graph::Graph;
use crate::recognize::{block_cut_tree, BlockCutTree};

/// The forced part of the block-graph algorithm: colors every spanning even
/// tree must agree with, and the subgraph left after dropping edges between
/// equally forced vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTrace {
    /// Forced colors in derivation order.
    pub steps: Vec<ForcedColor>,
    /// The same colors as a partial coloring.
    pub forced: PartialColoring,
    /// `g` without edges whose two ends were forced to the same color.
    pub reduced: Graph,
    pub components: Vec<Vec<usize>>,
}

/// Pendants are black; then a block all of whose vertices but one carry
/// the same color forces the last one to the other color, repeated until
/// nothing changes.
pub fn block_trace(g: &Graph, tree: &BlockCutTree) -> BlockTrace {
    let mut forced = PartialColoring::uncolored(g.n());
    let mut steps = Vec::new();
    if g.n() > 2 {
        for v in (0..g.n()).filter(|&v| g.degree(v) == 1) {
            forced.set(v, Color::Black);
            steps.push(ForcedColor { vertex: v, color: Color::Black, reason: ForceReason::Pendant });
        }
    }
    loop {
        let mut changed = false;
        for block in &tree.blocks {
            if block.len() < 2 {
                continue;
            }
            let mut open = block.iter().filter(|&&v| !forced.is_colored(v));
            let (Some(&v), None) = (open.next(), open.next()) else {
                continue;
            };
            let mut others = block.iter().filter(|&&w| w != v).map(|&w| forced.get(w));
            let first = others.next().flatten();
            if let Some(c) = first.filter(|&c| others.all(|o| o == Some(c))) {
                forced.set(v, c.opposite());
                steps.push(ForcedColor { vertex: v, color: c.opposite(), reason: ForceReason::Block(block.clone()) });
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let colors = forced.as_slice();
    let reduced = g.filter_edges(|(u, v)| colors[u].is_none() || colors[u] != colors[v]);
    let components = reduced.components();
    BlockTrace { steps, forced, reduced, components }
}

pub fn solve_block(g: &Graph) -> Result<SolveOutcome, SolveError> {
    require_connected(g)?;
    let Some(tree) = block_cut_tree(g) else {
        return Ok(SolveOutcome::NotInClass);
    };
    match g.n() {
        1 => return Ok(single_vertex()),
        2 => return Ok(SolveOutcome::NoTree(NoTreeCertificate::SmallException(SmallGraph::K2))),
        _ => {}
    }
    let trace = block_trace(g, &tree);
    if trace.components.len() > 1 {
        return Ok(SolveOutcome::NoTree(NoTreeCertificate::DisconnectedAux {
            components: trace.components,
            derivation: AuxDerivation::BlockForcing { steps: trace.steps },
        }));
    }

    // Complete the coloring block by block from the root: a block still
    // lacking a white vertex gets its smallest open vertex white.
    let mut colors = trace.forced.clone();
    for (b, _) in tree.preorder() {
        let block = &tree.blocks[b];
        let has_white = block.iter().any(|&v| colors.get(v) == Some(Color::White));
        let open: Vec<usize> = block.iter().copied().filter(|&v| !colors.is_colored(v)).collect();
        let mut open = open.into_iter();
        if !has_white {
            if let Some(v) = open.next() {
                colors.set(v, Color::White);
            }
        }
        for v in open {
            colors.set(v, Color::Black);
        }
    }
    let colors = colors.complete().expect("every vertex lies in some block");
    let bichromatic = g.filter_edges(|(u, v)| colors[u] != colors[v]);
    if !bichromatic.is_connected() {
        return Err(SolveError::Integrity("block solver: bichromatic subgraph is disconnected".into()));
    }
    let out = found(g, bichromatic.bfs_spanning_forest(), "block")?;
    if out.tree().map(|t| t.coloring.as_slice()) != Some(colors.as_slice()) {
        return Err(SolveError::Integrity("block solver: tree coloring differs from the constructed one".into()));
    }
    Ok(out)
}

use std::collections::VecDeque;

use crate::graph::{edge, Edge, Graph};

/// Block-cut tree of a block graph.
///
/// Blocks are sorted vertex lists ordered lexicographically; `cuts` is
/// sorted. A block and a cut vertex are adjacent in the tree iff the cut
/// vertex lies in the block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<Vec<usize>>,
    pub cuts: Vec<usize>,
    /// Index of the root block: the first block containing vertex 0.
    pub root: usize,
}

impl BlockCutTree {
    /// Cut vertices lying in `block`.
    pub fn block_cuts(&self, block: usize) -> Vec<usize> {
        self.blocks[block].iter().copied().filter(|v| self.cuts.binary_search(v).is_ok()).collect()
    }

    /// Blocks containing vertex `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.blocks[b].binary_search(&v).is_ok()).collect()
    }

    /// Tree edges as (block index, cut vertex) pairs.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        (0..self.blocks.len()).flat_map(|b| self.block_cuts(b).into_iter().map(move |c| (b, c))).collect()
    }

    /// Blocks top-down from the root: breadth-first over the block-cut tree,
    /// so every block comes after the blocks on its path to the root. Also
    /// returns each block's parent cut vertex.
    pub fn preorder(&self) -> Vec<(usize, Option<usize>)> {
        let mut seen_block = vec![false; self.blocks.len()];
        let mut seen_cut = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(self.blocks.len());
        if self.blocks.is_empty() {
            return out;
        }
        seen_block[self.root] = true;
        let mut queue = VecDeque::from([(self.root, None)]);
        while let Some((b, parent)) = queue.pop_front() {
            out.push((b, parent));
            for c in self.block_cuts(b) {
                if !seen_cut.insert(c) {
                    continue;
                }
                for nb in self.blocks_of(c) {
                    if !seen_block[nb] {
                        seen_block[nb] = true;
                        queue.push_back((nb, Some(c)));
                    }
                }
            }
        }
        out
    }
}

/// Biconnected components as edge lists, by Tarjan's low-point traversal.
pub(crate) fn biconnected_components(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut stack: Vec<Edge> = Vec::new();
    let mut out = Vec::new();
    for s in 0..n {
        if disc[s] != usize::MAX {
            continue;
        }
        disc[s] = timer;
        low[s] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut frames = vec![(s, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut next)) = frames.last_mut() {
            if let Some(&w) = g.neighbors(u).get(*next) {
                *next += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push(edge(u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    stack.push(edge(u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut comp = Vec::new();
                        while let Some(e) = stack.pop() {
                            comp.push(e);
                            if e == edge(parent, u) {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

/// Block-cut tree of a connected graph whose biconnected components are all
/// cliques; `None` otherwise.
pub fn block_cut_tree(g: &Graph) -> Option<BlockCutTree> {
    let n = g.n();
    if !g.is_connected() {
        return None;
    }
    if n == 1 {
        return Some(BlockCutTree { blocks: vec![vec![0]], cuts: Vec::new(), root: 0 });
    }
    let mut blocks = Vec::new();
    for comp in biconnected_components(g) {
        let mut vs: Vec<usize> = comp.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        if comp.len() != vs.len() * (vs.len() - 1) / 2 {
            return None;
        }
        blocks.push(vs);
    }
    blocks.sort();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cuts = (0..n).filter(|&v| count[v] > 1).collect();
    let root = blocks.iter().position(|b| b.contains(&0)).expect("vertex 0 lies in a block");
    Some(BlockCutTree { blocks, cuts, root })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        // a=0, b=1, c=2 (center), d=3, e=4
        Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn triangle_is_one_block() {
        let t = block_cut_tree(&Graph::complete(3)).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1, 2]]);
        assert!(t.cuts.is_empty());
    }

    #[test]
    fn bowtie_blocks() {
        let t = block_cut_tree(&bowtie()).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(t.cuts, vec![2]);
        assert_eq!(t.root, 0);
        assert_eq!(t.preorder(), vec![(0, None), (1, Some(2))]);
        assert_eq!(t.tree_edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn c4_is_not_a_block_graph() {
        assert_eq!(block_cut_tree(&Graph::cycle(4)), None);
        assert_eq!(block_cut_tree(&Graph::empty(2)), None);
    }

    #[test]
    fn path_blocks_are_edges() {
        let t = block_cut_tree(&Graph::path(4)).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(t.cuts, vec![1, 2]);
        let order: Vec<usize> = t.preorder().into_iter().map(|(b, _)| b).collect();
        assert_eq!(order, vec![0, 1, 2]);
    }

    #[test]
    fn root_is_the_block_of_vertex_zero_when_zero_is_a_cut() {
        // 0 is the center of a star of two triangles and an edge
        let g = Graph::new(6, [(0, 3), (0, 4), (3, 4), (0, 1), (0, 2), (1, 2), (0, 5)]).unwrap();
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks[t.root], vec![0, 1, 2]);
        assert_eq!(t.preorder().len(), 3);
    }
}

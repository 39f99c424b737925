//! Graphviz output for inspection. Tree edges are drawn bold, other edges
//! dashed gray; vertices are filled with their tree color.

use std::fmt::Write as _;

use crate::coloring::{Color, EvenTree};
use crate::graph::Graph;

pub fn to_dot(g: &Graph, tree: Option<&EvenTree>, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..g.n() {
        let label = labels.and_then(|l| l.get(v)).map(|l| format!("{v}\\n{l}")).unwrap_or_else(|| v.to_string());
        let fill = match tree.map(|t| t.coloring[v]) {
            Some(Color::Black) => ", fillcolor=black, fontcolor=white",
            _ => "",
        };
        writeln!(out, "  {v} [label=\"{label}\"{fill}];").unwrap();
    }
    for &(u, v) in g.edges() {
        let in_tree = tree.is_some_and(|t| t.edges.binary_search(&(u, v)).is_ok());
        let style = match (tree.is_some(), in_tree) {
            (true, true) => " [penwidth=3]",
            (true, false) => " [style=dashed, color=gray]",
            _ => "",
        };
        writeln!(out, "  {u} -- {v}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_tree_edges_and_colors() {
        let g = Graph::complete(3);
        let t = EvenTree::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let dot = to_dot(&g, Some(&t), None);
        assert!(dot.contains("0 -- 1 [penwidth=3];"));
        assert!(dot.contains("0 -- 2 [style=dashed, color=gray];"));
        assert!(dot.contains("0 [label=\"0\", fillcolor=black, fontcolor=white];"));
        assert!(dot.contains("1 [label=\"1\"];"));
        assert!(to_dot(&g, None, Some(&["a".into(), "b".into(), "c".into()])).contains("label=\"2\\nc\""));
    }
}

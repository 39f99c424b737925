//! Plain-text graph and tree formats.
//!
//! Graph: a header line `n m`, then `m` lines `u v`. Tree: `n - 1` lines
//! `u v`, then a line `colors:` followed by `n` tokens from `{B, W}`.
//! In both, lines starting with `#` and blank lines are ignored, and tokens
//! are whitespace separated.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, EvenTree};
use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| ParseError::new(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| ParseError::new(line_no, format!("expected a non-negative integer for {what}, found {tok:?}")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(ParseError::new(line_no, format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing header line \"n m\""))?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        let (u, v) = parse_pair(line_no, line)?;
        if edges.len() == m {
            return Err(ParseError::new(line_no, format!("header declares {m} edges but more follow")));
        }
        let err = match Graph::new(n, [(u, v)]) {
            Err(GraphError::SelfLoop(_)) => Some(format!("self-loop at vertex {u}")),
            Err(GraphError::OutOfRange { vertex, .. }) => Some(format!("vertex {vertex} out of range for n = {n}")),
            _ => None,
        };
        if let Some(msg) = err {
            return Err(ParseError::new(line_no, msg));
        }
        if !seen.insert(crate::graph::edge(u, v)) {
            return Err(ParseError::new(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::new(last_line, format!("header declares {m} edges but {} were given", edges.len())));
    }
    Graph::new(n, edges).map_err(|e| ParseError::new(header_line, e.to_string()))
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn format_colors(colors: &[Color]) -> String {
    colors.iter().map(|c| c.symbol().to_string()).collect::<Vec<_>>().join(" ")
}

pub fn format_tree(tree: &EvenTree) -> String {
    let mut out = String::new();
    for &(u, v) in &tree.edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    writeln!(out, "colors:").unwrap();
    writeln!(out, "{}", format_colors(&tree.coloring)).unwrap();
    out
}

/// A tree file as read from disk. The color section is optional so that
/// hand-written candidate trees can be checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeFile {
    pub edges: Vec<Edge>,
    pub colors: Option<Vec<Color>>,
}

pub fn parse_tree(text: &str) -> Result<TreeFile, ParseError> {
    let mut edges = Vec::new();
    let mut colors: Option<Vec<Color>> = None;
    for (line_no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("colors:") {
            if colors.is_some() {
                return Err(ParseError::new(line_no, "second colors: section"));
            }
            colors = Some(Vec::new());
            push_colors(line_no, rest, colors.as_mut().unwrap())?;
        } else if let Some(cs) = colors.as_mut() {
            push_colors(line_no, line, cs)?;
        } else {
            edges.push(parse_pair(line_no, line)?);
        }
    }
    Ok(TreeFile { edges, colors })
}

fn push_colors(line_no: usize, text: &str, out: &mut Vec<Color>) -> Result<(), ParseError> {
    for tok in text.split_whitespace() {
        let mut chars = tok.chars();
        let c = match (chars.next(), chars.next()) {
            (Some(c), None) => Color::from_symbol(c),
            _ => None,
        };
        out.push(c.ok_or_else(|| ParseError::new(line_no, format!("expected B or W, found {tok:?}")))?);
    }
    Ok(())
}

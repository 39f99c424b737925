//! Text form of a reduction map. Metadata lines first (formula and both
//! gadgets), then one `id role params` line per vertex:
//!
//! ```text
//! cnf 2 1
//! clause 1 -2
//! variable-gadget 1 0-1 0-2 0-3 1-2 3-4 3-5
//! variable-true 0-1 0-3 1-2 3-4 3-5
//! variable-false 0-2 0-3 1-2 3-4 3-5
//! connector-gadget 4 0 1 0-2 0-3 1-2 2-3
//! vertices 19
//! 0 variable-gadget 1 0
//! 1 connection 1
//! ```
//!
//! The file is self-contained: parsing rebuilds the reduction graph and
//! checks it against the listed roles.

use std::fmt::Write as _;

use super::build::{build_with, ClausePos, Reduction, Role};
use super::cnf::Cnf;
use super::gadget::{connector_table, ConnectorGadget, VariableGadget};
use crate::graph::{Edge, Graph};
use crate::text::{content_lines, ParseError};

fn edge_tokens(edges: &[Edge]) -> String {
    edges.iter().map(|(u, v)| format!(" {u}-{v}")).collect()
}

pub fn format_map(r: &Reduction) -> String {
    let m = &r.map;
    let mut out = String::from("# even-tree reduction map\n");
    writeln!(out, "cnf {} {}", m.cnf.num_vars(), m.cnf.clauses().len()).unwrap();
    for c in m.cnf.clauses() {
        let lits: String = c.iter().map(|l| format!(" {l}")).collect();
        writeln!(out, "clause{lits}").unwrap();
    }
    let v = &m.variable;
    writeln!(out, "variable-gadget {}{}", v.connection, edge_tokens(v.graph.edges())).unwrap();
    writeln!(out, "variable-true{}", edge_tokens(&v.true_tree)).unwrap();
    writeln!(out, "variable-false{}", edge_tokens(&v.false_tree)).unwrap();
    let c = &m.connector;
    writeln!(out, "connector-gadget {} {} {}{}", c.graph.n(), c.a, c.b, edge_tokens(c.graph.edges())).unwrap();
    writeln!(out, "vertices {}", m.roles.len()).unwrap();
    for (id, role) in m.roles.iter().enumerate() {
        writeln!(out, "{id} {role}").unwrap();
    }
    out
}

fn num<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| ParseError::new(line, format!("bad {what}: {tok:?}")))
}

fn edges<'a>(line: usize, toks: impl Iterator<Item = &'a str>) -> Result<Vec<Edge>, ParseError> {
    toks.map(|t| {
        let (a, b) = t.split_once('-').ok_or_else(|| ParseError::new(line, format!("bad edge {t:?}")))?;
        Ok((num(line, Some(a), "edge end")?, num(line, Some(b), "edge end")?))
    })
    .collect()
}

fn parse_role(line: usize, toks: &[&str]) -> Result<Role, ParseError> {
    let n = |i: usize, what: &str| num::<usize>(line, toks.get(i).copied(), what);
    let role = match toks.first().copied() {
        Some("variable-gadget") => Role::VariableGadget { var: n(1, "variable")?, local: n(2, "local id")? },
        Some("connection") => Role::Connection { var: n(1, "variable")? },
        Some("connector") => Role::Connector { index: n(1, "connector index")?, local: n(2, "local id")? },
        Some("clause-path") => {
            let pos = match toks.get(2).copied() {
                Some("w") => ClausePos::W,
                Some("mid") => ClausePos::Mid,
                Some("end") => ClausePos::End,
                other => return Err(ParseError::new(line, format!("bad clause position {other:?}"))),
            };
            Role::ClausePath { clause: n(1, "clause")?, pos }
        }
        Some("literal-path") => Role::LiteralPath { var: n(1, "variable")?, clause: n(2, "clause")? },
        Some("garbage") => Role::Garbage { var: n(1, "variable")?, clause: n(2, "clause")?, local: n(3, "local id")? },
        other => return Err(ParseError::new(line, format!("unknown role {other:?}"))),
    };
    Ok(role)
}

/// Parses a map file and rebuilds the reduction it describes.
pub fn parse_map(text: &str) -> Result<Reduction, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut var_gadget: Option<(usize, usize, Vec<Edge>)> = None;
    let mut trees: [Option<Vec<Edge>>; 2] = [None, None];
    let mut conn: Option<(usize, usize, usize, usize, Vec<Edge>)> = None;
    let mut declared: Option<(usize, usize)> = None;
    let mut roles: Vec<(usize, Role)> = Vec::new();
    for (line, text) in content_lines(text) {
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[0] {
            "cnf" => {
                header = Some((
                    num(line, toks.get(1).copied(), "variable count")?,
                    num(line, toks.get(2).copied(), "clause count")?,
                    line,
                ))
            }
            "clause" => {
                let lits = toks[1..].iter().map(|t| num::<i32>(line, Some(t), "literal")).collect::<Result<_, _>>()?;
                clauses.push(lits);
            }
            "variable-gadget" => {
                let connection = num(line, toks.get(1).copied(), "connection vertex")?;
                var_gadget = Some((line, connection, edges(line, toks[2..].iter().copied())?));
            }
            "variable-true" => trees[0] = Some(edges(line, toks[1..].iter().copied())?),
            "variable-false" => trees[1] = Some(edges(line, toks[1..].iter().copied())?),
            "connector-gadget" => {
                let n = num(line, toks.get(1).copied(), "vertex count")?;
                let a = num(line, toks.get(2).copied(), "endpoint a")?;
                let b = num(line, toks.get(3).copied(), "endpoint b")?;
                conn = Some((line, n, a, b, edges(line, toks[4..].iter().copied())?));
            }
            "vertices" => declared = Some((num(line, toks.get(1).copied(), "vertex count")?, line)),
            _ => {
                let id: usize = num(line, Some(toks[0]), "vertex id or keyword")?;
                if id != roles.len() {
                    return Err(ParseError::new(line, format!("expected vertex {}, found {id}", roles.len())));
                }
                roles.push((line, parse_role(line, &toks[1..])?));
            }
        }
    }
    let (num_vars, num_clauses, cnf_line) = header.ok_or_else(|| ParseError::new(1, "missing cnf line"))?;
    if clauses.len() != num_clauses {
        return Err(ParseError::new(cnf_line, format!("declares {num_clauses} clauses, found {}", clauses.len())));
    }
    let cnf = Cnf::new(num_vars, clauses).map_err(|e| ParseError::new(cnf_line, e.to_string()))?;

    let (vline, connection, vedges) = var_gadget.ok_or_else(|| ParseError::new(1, "missing variable-gadget line"))?;
    let [Some(true_tree), Some(false_tree)] = trees else {
        return Err(ParseError::new(vline, "missing variable-true or variable-false line"));
    };
    let graph = Graph::new(6, vedges).map_err(|e| ParseError::new(vline, e.to_string()))?;
    let variable = VariableGadget { graph, connection, true_tree, false_tree };
    variable.validate().map_err(|e| ParseError::new(vline, e.to_string()))?;

    let (cline, cn, a, b, cedges) = conn.ok_or_else(|| ParseError::new(1, "missing connector-gadget line"))?;
    let graph = Graph::new(cn, cedges).map_err(|e| ParseError::new(cline, e.to_string()))?;
    let patterns = connector_table(&graph).unwrap_or_default();
    let connector = ConnectorGadget { graph, a, b, patterns };
    if (a, b) != (0, 1) {
        return Err(ParseError::new(cline, "connector endpoints must be 0 and 1"));
    }
    connector.validate().map_err(|e| ParseError::new(cline, e.to_string()))?;

    let reduction = build_with(&cnf, &variable, &connector);
    let (count, count_line) = declared.ok_or_else(|| ParseError::new(1, "missing vertices line"))?;
    if count != reduction.graph.n() || roles.len() != count {
        return Err(ParseError::new(
            count_line,
            format!("expected {} vertex lines, declared {count}, found {}", reduction.graph.n(), roles.len()),
        ));
    }
    for (id, (line, role)) in roles.iter().enumerate() {
        if *role != reduction.map.roles[id] {
            return Err(ParseError::new(*line, format!("vertex {id} should be {}", reduction.map.roles[id])));
        }
    }
    Ok(reduction)
}

use std::fmt;

use thiserror::Error;

use super::cnf::Cnf;
use super::gadget::{connector_gadget, variable_gadget, ConnectorGadget, VariableGadget};
use crate::coloring::{verify_even_spanning_tree, Color, EvenTree, VerifyReport};
use crate::graph::{edge, DisjointSets, Edge, Graph};
use crate::oracle::PatternKind;

/// Position on a clause path `w - mid - end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClausePos {
    W,
    Mid,
    End,
}

impl ClausePos {
    pub fn label(self) -> &'static str {
        match self {
            ClausePos::W => "w",
            ClausePos::Mid => "mid",
            ClausePos::End => "end",
        }
    }
}

/// What a vertex of the reduction graph stands for. Variables, clauses and
/// connectors are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// A non-connection vertex of a variable gadget, by gadget-local id.
    VariableGadget {
        var: usize,
        local: usize,
    },
    /// The connection vertex of a variable gadget; also the endpoints of the
    /// neighboring connectors.
    Connection {
        var: usize,
    },
    /// An internal connector vertex joining `v_index` and `v_{index+1}`.
    Connector {
        index: usize,
        local: usize,
    },
    ClausePath {
        clause: usize,
        pos: ClausePos,
    },
    /// Middle vertex of the two-edge path for a negative occurrence.
    LiteralPath {
        var: usize,
        clause: usize,
    },
    /// One of the two extra triangle vertices on a literal path, local 1 or 2.
    Garbage {
        var: usize,
        clause: usize,
        local: usize,
    },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::VariableGadget { var, local } => write!(f, "variable-gadget {var} {local}"),
            Role::Connection { var } => write!(f, "connection {var}"),
            Role::Connector { index, local } => write!(f, "connector {index} {local}"),
            Role::ClausePath { clause, pos } => write!(f, "clause-path {clause} {}", pos.label()),
            Role::LiteralPath { var, clause } => write!(f, "literal-path {var} {clause} mid"),
            Role::Garbage { var, clause, local } => write!(f, "garbage {var} {clause} {local}"),
        }
    }
}

/// Provenance of every vertex of the reduction graph, plus the gadgets it
/// was built from.
///
/// Vertex ids are assigned in this order: the six vertices of each variable
/// gadget (variable 1 first, gadget-local order); the internal vertices of
/// each connector; `w`, `mid`, `end` of each clause; then `p`, `g1`, `g2`
/// for each negative occurrence, sorted by variable then clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMap {
    pub cnf: Cnf,
    pub roles: Vec<Role>,
    pub variable: VariableGadget,
    pub connector: ConnectorGadget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub map: ReductionMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("tree is not a spanning even tree of the reduction graph: {0}")]
    InvalidTree(VerifyReport),
    #[error("assignment has {found} values for {expected} variables")]
    AssignmentLength { expected: usize, found: usize },
    #[error("internal integrity failure: {0}")]
    Integrity(String),
}

/// Vertex ids of the named parts, all indexed from 0.
struct Layout {
    gadget_base: Vec<usize>,
    connection: Vec<usize>,
    connector_internal: Vec<Vec<usize>>,
    clause: Vec<[usize; 3]>,
    /// (var, clause) of each negative occurrence with its p, g1, g2.
    negative: Vec<((usize, usize), [usize; 3])>,
    total: usize,
}

impl Layout {
    fn new(cnf: &Cnf, var: &VariableGadget, conn: &ConnectorGadget) -> Layout {
        let nv = cnf.num_vars();
        let internal = conn.graph.n() - 2;
        let mut next = 0;
        let mut take = |k: usize| {
            let start = next;
            next += k;
            start
        };
        let gadget_base: Vec<usize> = (0..nv).map(|_| take(6)).collect();
        let connection = gadget_base.iter().map(|b| b + var.connection).collect();
        let connector_internal = (1..nv)
            .map(|_| {
                let s = take(internal);
                (s..s + internal).collect()
            })
            .collect();
        let mut triple = || {
            let s = take(3);
            [s, s + 1, s + 2]
        };
        let clause = cnf.clauses().iter().map(|_| triple()).collect();
        let negative = cnf.occurrences().into_iter().filter(|o| !o.2).map(|(i, j, _)| ((i, j), triple())).collect();
        Layout { gadget_base, connection, connector_internal, clause, negative, total: next }
    }

    /// Graph vertex for connector-local vertex `local` of connector `i`
    /// (0-based), merging the endpoints into the connection vertices.
    fn connector_vertex(&self, conn: &ConnectorGadget, i: usize, local: usize) -> usize {
        if local == conn.a {
            self.connection[i]
        } else if local == conn.b {
            self.connection[i + 1]
        } else {
            let rank = (0..conn.graph.n()).filter(|&u| u != conn.a && u != conn.b).position(|u| u == local);
            self.connector_internal[i][rank.expect("internal connector vertex")]
        }
    }

    fn negative_of(&self, var: usize, clause: usize) -> [usize; 3] {
        self.negative
            .iter()
            .find(|(key, _)| *key == (var, clause))
            .map(|(_, ids)| *ids)
            .expect("negative occurrence has a literal path")
    }
}

fn assemble(cnf: &Cnf, var: &VariableGadget, conn: &ConnectorGadget) -> (Graph, Vec<Role>, Layout) {
    let layout = Layout::new(cnf, var, conn);
    let n = layout.total;
    let mut roles = vec![Role::Connection { var: 0 }; n];
    let mut edges: Vec<Edge> = Vec::new();
    for (i, &base) in layout.gadget_base.iter().enumerate() {
        for local in 0..6 {
            roles[base + local] = if local == var.connection {
                Role::Connection { var: i + 1 }
            } else {
                Role::VariableGadget { var: i + 1, local }
            };
        }
        edges.extend(var.graph.edges().iter().map(|&(u, v)| (base + u, base + v)));
    }
    let internal: Vec<usize> = (0..conn.graph.n()).filter(|&u| u != conn.a && u != conn.b).collect();
    for i in 0..layout.connector_internal.len() {
        for &local in &internal {
            roles[layout.connector_vertex(conn, i, local)] = Role::Connector { index: i + 1, local };
        }
        edges.extend(
            conn.graph
                .edges()
                .iter()
                .map(|&(u, v)| (layout.connector_vertex(conn, i, u), layout.connector_vertex(conn, i, v))),
        );
    }
    for (j, ids) in layout.clause.iter().enumerate() {
        for (pos, &id) in [ClausePos::W, ClausePos::Mid, ClausePos::End].into_iter().zip(ids) {
            roles[id] = Role::ClausePath { clause: j + 1, pos };
        }
        edges.push((ids[0], ids[1]));
        edges.push((ids[1], ids[2]));
    }
    for (i, j, positive) in cnf.occurrences() {
        let v = layout.connection[i - 1];
        let w = layout.clause[j - 1][0];
        if positive {
            edges.push((v, w));
        } else {
            let [p, g1, g2] = layout.negative_of(i, j);
            roles[p] = Role::LiteralPath { var: i, clause: j };
            roles[g1] = Role::Garbage { var: i, clause: j, local: 1 };
            roles[g2] = Role::Garbage { var: i, clause: j, local: 2 };
            edges.extend([(v, p), (p, w), (p, g1), (p, g2), (g1, g2)]);
        }
    }
    let graph = Graph::new(n, edges).expect("reduction graph is simple");
    (graph, roles, layout)
}

/// Builds the reduction graph from the shipped gadgets.
pub fn build_reduction(cnf: &Cnf) -> Reduction {
    build_with(cnf, variable_gadget(), connector_gadget())
}

/// Builds the reduction graph from the given gadgets.
pub fn build_with(cnf: &Cnf, var: &VariableGadget, conn: &ConnectorGadget) -> Reduction {
    let (graph, roles, _) = assemble(cnf, var, conn);
    let map = ReductionMap { cnf: cnf.clone(), roles, variable: var.clone(), connector: conn.clone() };
    Reduction { graph, map }
}

impl Reduction {
    /// Connection vertex of each variable, in variable order.
    pub fn connection_vertices(&self) -> Vec<usize> {
        Layout::new(&self.map.cnf, &self.map.variable, &self.map.connector).connection
    }

    /// Spanning even tree for a satisfying assignment, `None` if the
    /// assignment does not satisfy the formula. `assignment[i]` is the value
    /// of variable `i + 1`.
    pub fn tree_from_assignment(&self, assignment: &[bool]) -> Result<Option<EvenTree>, ReductionError> {
        let cnf = &self.map.cnf;
        if assignment.len() != cnf.num_vars() {
            return Err(ReductionError::AssignmentLength { expected: cnf.num_vars(), found: assignment.len() });
        }
        if !cnf.is_satisfied_by(assignment) {
            return Ok(None);
        }
        let (var, conn) = (&self.map.variable, &self.map.connector);
        let layout = Layout::new(cnf, var, conn);
        let n = self.graph.n();
        let mut sets = DisjointSets::new(n);
        let mut edges: Vec<Edge> = Vec::with_capacity(n.saturating_sub(1));
        let add = |sets: &mut DisjointSets, edges: &mut Vec<Edge>, u: usize, v: usize| -> bool {
            let joined = sets.union(u, v);
            if joined {
                edges.push(edge(u, v));
            }
            joined
        };

        for (i, &base) in layout.gadget_base.iter().enumerate() {
            let tree = if assignment[i] { &var.true_tree } else { &var.false_tree };
            for &(u, v) in tree {
                add(&mut sets, &mut edges, base + u, base + v);
            }
        }
        for ids in &layout.clause {
            add(&mut sets, &mut edges, ids[0], ids[1]);
            add(&mut sets, &mut edges, ids[1], ids[2]);
        }
        for (i, j, positive) in cnf.occurrences() {
            let value = assignment[i - 1];
            let v = layout.connection[i - 1];
            let w = layout.clause[j - 1][0];
            if positive {
                if value {
                    add(&mut sets, &mut edges, v, w);
                }
                continue;
            }
            let [p, g1, g2] = layout.negative_of(i, j);
            add(&mut sets, &mut edges, v, p);
            // p takes the color opposite to v. When white it may also carry
            // the clause, unless an earlier literal already reached w.
            if !value {
                add(&mut sets, &mut edges, p, w);
                add(&mut sets, &mut edges, p, g1);
                add(&mut sets, &mut edges, p, g2);
            } else {
                add(&mut sets, &mut edges, p, g1);
                add(&mut sets, &mut edges, g1, g2);
            }
        }
        let connection_color = |i: usize| if assignment[i] { Color::White } else { Color::Black };
        for i in 0..layout.connector_internal.len() {
            let (a, b) = (layout.connection[i], layout.connection[i + 1]);
            let kind = if sets.find(a) != sets.find(b) { PatternKind::Connector } else { PatternKind::Disconnector };
            let pattern = conn.pattern(kind, connection_color(i), connection_color(i + 1));
            for &(u, v) in &pattern.witness.edges {
                let (x, y) = (layout.connector_vertex(conn, i, u), layout.connector_vertex(conn, i, v));
                if !add(&mut sets, &mut edges, x, y) {
                    return Err(ReductionError::Integrity(format!("connector {} pattern closes a cycle", i + 1)));
                }
            }
        }
        edges.sort_unstable();
        match verify_even_spanning_tree(&self.graph, &edges) {
            VerifyReport::Valid { coloring } => Ok(Some(EvenTree { edges, coloring })),
            report => {
                Err(ReductionError::Integrity(format!("tree built from a satisfying assignment is rejected: {report}")))
            }
        }
    }

    /// Reads the assignment off a spanning even tree: variable `i` is true
    /// iff the tree restricted to gadget `i` is the gadget's true tree.
    pub fn extract_assignment(&self, tree: &[Edge]) -> Result<Vec<bool>, ReductionError> {
        let report = verify_even_spanning_tree(&self.graph, tree);
        if !report.is_valid() {
            return Err(ReductionError::InvalidTree(report));
        }
        let var = &self.map.variable;
        let layout = Layout::new(&self.map.cnf, var, &self.map.connector);
        let normalize = |es: &[Edge]| {
            let mut es: Vec<Edge> = es.iter().map(|&(u, v)| edge(u, v)).collect();
            es.sort_unstable();
            es
        };
        let (true_tree, false_tree) = (normalize(&var.true_tree), normalize(&var.false_tree));
        let mut assignment = Vec::with_capacity(layout.gadget_base.len());
        for (i, &base) in layout.gadget_base.iter().enumerate() {
            let inside = |x: usize| x >= base && x < base + 6;
            let local = normalize(
                &tree
                    .iter()
                    .filter(|&&(u, v)| inside(u) && inside(v))
                    .map(|&(u, v)| (u - base, v - base))
                    .collect::<Vec<_>>(),
            );
            if local == true_tree {
                assignment.push(true);
            } else if local == false_tree {
                assignment.push(false);
            } else {
                return Err(ReductionError::Integrity(format!(
                    "gadget of variable {} carries neither reference tree",
                    i + 1
                )));
            }
        }
        if !self.map.cnf.is_satisfied_by(&assignment) {
            return Err(ReductionError::Integrity("extracted assignment does not satisfy the formula".into()));
        }
        Ok(assignment)
    }
}

//! Constructive solvers, one per graph class, plus certificate checkers.
//!
//! Every solver either returns a spanning even tree, a certificate that none
//! exists, or reports that the graph is outside its class. Found trees are
//! run through the verifier before they leave the solver, and every
//! certificate can be rechecked against the graph with
//! [`check_certificate`].

mod block;
mod cobipartite;
mod cograph;
mod split;
mod unit_interval;

use std::fmt;

use thiserror::Error;

pub use block::{block_trace, solve_block, BlockTrace};
pub use cobipartite::solve_cobipartite;
pub use cograph::solve_cograph;
pub use split::{solve_split, split_hat, SplitCase};
pub use unit_interval::solve_unit_interval;

use crate::coloring::{verify_even_spanning_tree, Color, EvenTree, VerifyReport};
use crate::graph::{Edge, Graph};
use crate::oracle::{self, OracleError};
use crate::recognize::GraphClass;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(EvenTree),
    NoTree(NoTreeCertificate),
    NotInClass,
}

impl SolveOutcome {
    pub fn tree(&self) -> Option<&EvenTree> {
        match self {
            SolveOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&NoTreeCertificate> {
        match self {
            SolveOutcome::NoTree(c) => Some(c),
            _ => None,
        }
    }

    /// `Some(true)` for Found, `Some(false)` for NoTree.
    pub fn exists(&self) -> Option<bool> {
        match self {
            SolveOutcome::Found(_) => Some(true),
            SolveOutcome::NoTree(_) => Some(false),
            SolveOutcome::NotInClass => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmallGraph {
    K2,
    P4,
    C4,
}

impl SmallGraph {
    pub fn name(self) -> &'static str {
        match self {
            SmallGraph::K2 => "K2",
            SmallGraph::P4 => "P4",
            SmallGraph::C4 => "C4",
        }
    }

    /// Degree-sequence test plus connectivity; enough to pin down these
    /// three graphs.
    pub fn matches(self, g: &Graph) -> bool {
        let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        let expected: &[usize] = match self {
            SmallGraph::K2 => &[1, 1],
            SmallGraph::P4 => &[1, 1, 2, 2],
            SmallGraph::C4 => &[2, 2, 2, 2],
        };
        degrees == expected && g.is_connected()
    }
}

/// How a forcing step justified its color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForceReason {
    /// Degree-1 vertex: always a leaf, hence black.
    Pendant,
    /// Every other vertex of this block already had the opposite color.
    Block(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedColor {
    pub vertex: usize,
    pub color: Color,
    pub reason: ForceReason,
}

/// Why the auxiliary graph's components are what they are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuxDerivation {
    /// Split graph in which every clique vertex has a pendant neighbor; the
    /// auxiliary graph drops all clique-clique edges.
    SplitHat { clique: Vec<usize>, independent: Vec<usize> },
    /// Block graph: forced colors in derivation order; the auxiliary graph
    /// drops edges whose ends received the same color.
    BlockForcing { steps: Vec<ForcedColor> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoTreeCertificate {
    /// The graph is `K_{t,t}`.
    BalancedBipartite {
        t: usize,
        sides: (Vec<usize>, Vec<usize>),
    },
    SmallException(SmallGraph),
    /// A path on an even number of vertices, listed end to end.
    OddPath {
        order: Vec<usize>,
    },
    /// A subgraph that must contain every spanning even tree is
    /// disconnected.
    DisconnectedAux {
        components: Vec<Vec<usize>>,
        derivation: AuxDerivation,
    },
    /// Exhaustive search found no spanning even tree.
    Exhaustive,
}

impl NoTreeCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            NoTreeCertificate::BalancedBipartite { .. } => "balanced-bipartite",
            NoTreeCertificate::SmallException(_) => "small-exception",
            NoTreeCertificate::OddPath { .. } => "odd-path",
            NoTreeCertificate::DisconnectedAux { .. } => "disconnected-aux",
            NoTreeCertificate::Exhaustive => "exhaustive",
        }
    }
}

fn join_ids(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Labeled text block: `certificate <kind>`, indented detail lines, `end`.
impl fmt::Display for NoTreeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {}", self.kind())?;
        match self {
            NoTreeCertificate::BalancedBipartite { t, sides: (a, b) } => {
                writeln!(f, "  t {t}")?;
                writeln!(f, "  side {}", join_ids(a))?;
                writeln!(f, "  side {}", join_ids(b))?;
            }
            NoTreeCertificate::SmallException(s) => writeln!(f, "  graph {}", s.name())?,
            NoTreeCertificate::OddPath { order } => writeln!(f, "  path {}", join_ids(order))?,
            NoTreeCertificate::DisconnectedAux { components, derivation } => {
                match derivation {
                    AuxDerivation::SplitHat { clique, independent } => {
                        writeln!(f, "  clique {}", join_ids(clique))?;
                        writeln!(f, "  independent {}", join_ids(independent))?;
                    }
                    AuxDerivation::BlockForcing { steps } => {
                        for s in steps {
                            match &s.reason {
                                ForceReason::Pendant => writeln!(f, "  force {} {} pendant", s.vertex, s.color)?,
                                ForceReason::Block(b) => {
                                    writeln!(f, "  force {} {} block {}", s.vertex, s.color, join_ids(b))?
                                }
                            }
                        }
                    }
                }
                for c in components {
                    writeln!(f, "  component {}", join_ids(c))?;
                }
            }
            NoTreeCertificate::Exhaustive => writeln!(f, "  exhaustive search over all spanning trees")?,
        }
        write!(f, "end")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("needs at least {needed} vertices, graph has {n}")]
    TooSmall { needed: usize, n: usize },
    #[error("internal integrity failure: {0}")]
    Integrity(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("certificate rejected: {0}")]
pub struct CertificateError(pub String);

fn reject<T>(msg: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError(msg.into()))
}

pub(crate) fn require_connected(g: &Graph) -> Result<(), SolveError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(SolveError::Disconnected)
    }
}

/// Wraps a constructed tree after running it through the verifier.
pub(crate) fn found(g: &Graph, edges: Vec<Edge>, solver: &str) -> Result<SolveOutcome, SolveError> {
    match verify_even_spanning_tree(g, &edges) {
        VerifyReport::Valid { coloring } => {
            let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| crate::graph::edge(u, v)).collect();
            edges.sort_unstable();
            Ok(SolveOutcome::Found(EvenTree { edges, coloring }))
        }
        report => Err(SolveError::Integrity(format!("{solver} solver built a tree the verifier rejects: {report}"))),
    }
}

pub(crate) fn single_vertex() -> SolveOutcome {
    SolveOutcome::Found(EvenTree { edges: Vec::new(), coloring: vec![Color::Black] })
}

fn is_partition(g: &Graph, parts: &[&[usize]]) -> bool {
    let mut seen = vec![false; g.n()];
    for part in parts {
        for &v in *part {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Rechecks a no-tree certificate against `g` from scratch.
pub fn check_certificate(g: &Graph, cert: &NoTreeCertificate) -> Result<(), CertificateError> {
    match cert {
        NoTreeCertificate::BalancedBipartite { t, sides: (a, b) } => {
            if *t == 0 || a.len() != *t || b.len() != *t || !is_partition(g, &[a, b]) {
                return reject("sides are not two equal halves of the vertex set");
            }
            let complete = a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v)));
            if !complete || g.edge_count() != t * t {
                return reject("graph is not the complete bipartite graph on these sides");
            }
            Ok(())
        }
        NoTreeCertificate::SmallException(s) => {
            if s.matches(g) {
                Ok(())
            } else {
                reject(format!("graph is not {}", s.name()))
            }
        }
        NoTreeCertificate::OddPath { order } => {
            if !is_partition(g, &[order]) || !g.n().is_multiple_of(2) || g.edge_count() + 1 != g.n() {
                return reject("not an even-order path listing");
            }
            if order.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return reject("consecutive vertices of the listing are not adjacent");
            }
            Ok(())
        }
        NoTreeCertificate::DisconnectedAux { components, derivation } => {
            let parts: Vec<&[usize]> = components.iter().map(Vec::as_slice).collect();
            if components.len() < 2 || !is_partition(g, &parts) {
                return reject("components must partition the vertices into at least two parts");
            }
            let mut part_of = vec![0; g.n()];
            for (i, c) in components.iter().enumerate() {
                for &v in c {
                    part_of[v] = i;
                }
            }
            let removable: Box<dyn Fn(Edge) -> bool> = match derivation {
                AuxDerivation::SplitHat { clique, independent } => {
                    check_split_hat(g, clique, independent)?;
                    let mut in_clique = vec![false; g.n()];
                    for &k in clique {
                        in_clique[k] = true;
                    }
                    Box::new(move |(u, v)| in_clique[u] && in_clique[v])
                }
                AuxDerivation::BlockForcing { steps } => {
                    let colors = replay_forcing(g, steps)?;
                    Box::new(move |(u, v)| colors[u].is_some() && colors[u] == colors[v])
                }
            };
            for &(u, v) in g.edges() {
                if part_of[u] != part_of[v] && !removable((u, v)) {
                    return reject(format!("edge {u}-{v} survives and joins two components"));
                }
            }
            Ok(())
        }
        NoTreeCertificate::Exhaustive => match oracle::oracle_even_spanning_tree(g, oracle::DEFAULT_CAP) {
            Ok(None) => Ok(()),
            Ok(Some(_)) => reject("exhaustive search finds a spanning even tree"),
            Err(e) => reject(format!("exhaustive search could not confirm: {e}")),
        },
    }
}

fn check_split_hat(g: &Graph, clique: &[usize], independent: &[usize]) -> Result<(), CertificateError> {
    if !is_partition(g, &[clique, independent]) || clique.len() < 2 {
        return reject("not a split partition with at least two clique vertices");
    }
    for (i, &u) in clique.iter().enumerate() {
        if clique[i + 1..].iter().any(|&v| !g.has_edge(u, v)) {
            return reject("clique side is not a clique");
        }
    }
    for (i, &u) in independent.iter().enumerate() {
        if independent[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
            return reject("independent side has an edge");
        }
    }
    for &k in clique {
        if !g.neighbors(k).iter().any(|&w| g.degree(w) == 1) {
            return reject(format!("clique vertex {k} has no pendant neighbor"));
        }
    }
    Ok(())
}

fn replay_forcing(g: &Graph, steps: &[ForcedColor]) -> Result<Vec<Option<Color>>, CertificateError> {
    let mut colors: Vec<Option<Color>> = vec![None; g.n()];
    let blocks: Vec<Vec<usize>> = crate::recognize::block_cut_tree(g).map(|t| t.blocks).unwrap_or_default();
    for step in steps {
        let v = step.vertex;
        if v >= g.n() || colors[v].is_some() {
            return reject(format!("vertex {v} colored twice or out of range"));
        }
        match &step.reason {
            ForceReason::Pendant => {
                if g.degree(v) != 1 || step.color != Color::Black {
                    return reject(format!("vertex {v} is not a black pendant"));
                }
            }
            ForceReason::Block(b) => {
                if !blocks.contains(b) || !b.contains(&v) {
                    return reject(format!("{b:?} is not a block containing {v}"));
                }
                let others_ok = b.iter().filter(|&&w| w != v).all(|&w| colors[w] == Some(step.color.opposite()));
                if !others_ok {
                    return reject(format!("block {b:?} does not force vertex {v}"));
                }
            }
        }
        colors[v] = Some(step.color);
    }
    Ok(colors)
}

/// Which route [`solve_auto`] took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Class(GraphClass),
    Oracle,
    Unsupported,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Class(c) => write!(f, "{c}"),
            Strategy::Oracle => f.write_str("oracle"),
            Strategy::Unsupported => f.write_str("unsupported"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutoConfig {
    /// Largest vertex count handed to the exhaustive fallback.
    pub oracle_max_vertices: usize,
    pub oracle_cap: u64,
}

impl Default for AutoConfig {
    fn default() -> Self {
        AutoConfig { oracle_max_vertices: 20, oracle_cap: oracle::DEFAULT_CAP }
    }
}

/// Runs the solver for one class.
pub fn solve_class(g: &Graph, class: GraphClass) -> Result<SolveOutcome, SolveError> {
    match class {
        GraphClass::Cograph => solve_cograph(g),
        GraphClass::Cobipartite => solve_cobipartite(g),
        GraphClass::UnitInterval => solve_unit_interval(g),
        GraphClass::Split => solve_split(g),
        GraphClass::Block => solve_block(g),
    }
}

/// Dispatch order for [`solve_auto`].
pub const AUTO_ORDER: [GraphClass; 5] =
    [GraphClass::Block, GraphClass::Split, GraphClass::UnitInterval, GraphClass::Cograph, GraphClass::Cobipartite];

/// First applicable class solver, else exhaustive search on small graphs.
pub fn solve_auto(g: &Graph, config: &AutoConfig) -> Result<(SolveOutcome, Strategy), SolveError> {
    require_connected(g)?;
    for class in AUTO_ORDER {
        if class == GraphClass::Cobipartite && g.n() < 2 {
            continue;
        }
        let outcome = solve_class(g, class)?;
        if outcome != SolveOutcome::NotInClass {
            return Ok((outcome, Strategy::Class(class)));
        }
    }
    if g.n() > config.oracle_max_vertices {
        return Ok((SolveOutcome::NotInClass, Strategy::Unsupported));
    }
    let outcome = match oracle::oracle_even_spanning_tree(g, config.oracle_cap)? {
        Some(t) => SolveOutcome::Found(t),
        None => SolveOutcome::NoTree(NoTreeCertificate::Exhaustive),
    };
    Ok((outcome, Strategy::Oracle))
}

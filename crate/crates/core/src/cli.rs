//! The `even-tree` command line.
//!
//! Exit codes: 0 success or tree found, 1 candidate tree rejected, 2 no
//! spanning even tree, 3 graph outside the requested class (or no solver
//! applies), 4 exhaustive search hit its cap, 64 usage error or unreadable
//! file, 65 malformed input, 70 internal integrity failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::coloring::verify_even_spanning_tree;
use crate::dot::to_dot;
use crate::graph::Graph;
use crate::oracle::{oracle_even_spanning_tree, OracleError, DEFAULT_CAP};
use crate::recognize::{
    block_cut_tree, cobipartite_partition, cograph_join_decompose, recognize, split_partition, unit_interval_order,
    GraphClass,
};
use crate::reduction::{build_reduction, format_map, parse_dimacs, parse_map, ReductionError};
use crate::solve::{solve_auto, solve_class, AutoConfig, SolveError, SolveOutcome, Strategy};
use crate::text::{format_colors, format_graph, format_tree, parse_graph, parse_tree};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_NO_TREE: i32 = 2;
pub const EXIT_NOT_IN_CLASS: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_INTEGRITY: i32 = 70;

#[derive(Debug, Parser)]
#[command(name = "even-tree", version, about = "Spanning trees whose leaves are pairwise at even distance")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Auto,
    Cograph,
    Cobipartite,
    UnitInterval,
    Split,
    Block,
}

impl ClassArg {
    fn class(self) -> Option<GraphClass> {
        match self {
            ClassArg::Auto => None,
            ClassArg::Cograph => Some(GraphClass::Cograph),
            ClassArg::Cobipartite => Some(GraphClass::Cobipartite),
            ClassArg::UnitInterval => Some(GraphClass::UnitInterval),
            ClassArg::Split => Some(GraphClass::Split),
            ClassArg::Block => Some(GraphClass::Block),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the supported graph classes the graph belongs to.
    Recognize { graph: PathBuf },
    /// Find a spanning even tree or a certificate that none exists.
    Solve {
        #[arg(long, value_enum, default_value = "auto")]
        class: ClassArg,
        /// Largest graph handed to exhaustive search when no class applies.
        #[arg(long, default_value_t = 20)]
        oracle_max_vertices: usize,
        /// Also write a Graphviz drawing.
        #[arg(long)]
        dot: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Check a candidate spanning even tree.
    Verify { graph: PathBuf, tree: PathBuf },
    /// Exhaustive search for a spanning even tree.
    Oracle {
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
        graph: PathBuf,
    },
    /// Build the reduction graph of a DIMACS CNF formula.
    Reduce {
        cnf: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(short, long)]
        map: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Read a satisfying assignment off a spanning even tree of a reduction graph.
    Extract { map: PathBuf, tree: PathBuf },
    /// Re-derive the gadgets and cross-check solvers against exhaustive search.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest vertex count in the exhaustive solver sweep.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

/// A failure with its exit code; the message goes to the error stream.
struct Failure {
    code: i32,
    message: String,
}

fn failure(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| failure(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| failure(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_tree(path: &Path) -> Result<crate::text::TreeFile, Failure> {
    parse_tree(&read(path)?).map_err(|e| failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn solve_error(e: SolveError, out: &mut dyn Write) -> Outcome {
    match e {
        SolveError::Disconnected => {
            writeln!(out, "no-tree").ok();
            writeln!(out, "# graph is disconnected, so it has no spanning tree").ok();
            Ok(EXIT_NO_TREE)
        }
        SolveError::TooSmall { .. } => Err(failure(EXIT_NOT_IN_CLASS, e.to_string())),
        SolveError::Integrity(_) => Err(failure(EXIT_INTEGRITY, e.to_string())),
        SolveError::Oracle(OracleError::CapExceeded { .. }) => Err(failure(EXIT_CAP, e.to_string())),
        SolveError::Oracle(OracleError::Disconnected) => solve_error(SolveError::Disconnected, out),
    }
}

fn cmd_solve(
    class: ClassArg,
    oracle_max_vertices: usize,
    dot: Option<&Path>,
    path: &Path,
    out: &mut dyn Write,
) -> Outcome {
    let g = load_graph(path)?;
    let result = match class.class() {
        Some(c) => solve_class(&g, c).map(|o| (o, Strategy::Class(c))),
        None => solve_auto(&g, &AutoConfig { oracle_max_vertices, ..AutoConfig::default() }),
    };
    let (outcome, strategy) = match result {
        Ok(r) => r,
        Err(e) => return solve_error(e, out),
    };
    writeln!(out, "# strategy: {strategy}").ok();
    if let Some(dot_path) = dot {
        write_file(dot_path, &to_dot(&g, outcome.tree(), None))?;
    }
    match outcome {
        SolveOutcome::Found(t) => {
            write!(out, "{}", format_tree(&t)).ok();
            Ok(EXIT_OK)
        }
        SolveOutcome::NoTree(cert) => {
            writeln!(out, "no-tree").ok();
            writeln!(out, "{cert}").ok();
            Ok(EXIT_NO_TREE)
        }
        SolveOutcome::NotInClass => {
            match strategy {
                Strategy::Class(c) => writeln!(out, "not-in-class {c}").ok(),
                _ => {
                    writeln!(out, "unsupported: no class applies and the graph is too large for exhaustive search").ok()
                }
            };
            Ok(EXIT_NOT_IN_CLASS)
        }
    }
}

fn cmd_verify(graph: &Path, tree: &Path, out: &mut dyn Write) -> Outcome {
    let g = load_graph(graph)?;
    let t = load_tree(tree)?;
    let report = verify_even_spanning_tree(&g, &t.edges);
    match report.coloring() {
        Some(coloring) => {
            if let Some(claimed) = &t.colors {
                if claimed.as_slice() != coloring {
                    writeln!(out, "invalid: listed colors differ from the admissible coloring").ok();
                    writeln!(out, "# admissible: {}", format_colors(coloring)).ok();
                    return Ok(EXIT_REJECTED);
                }
            }
            writeln!(out, "valid").ok();
            writeln!(out, "colors: {}", format_colors(coloring)).ok();
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "{report}").ok();
            Ok(EXIT_REJECTED)
        }
    }
}

fn cmd_oracle(cap: u64, path: &Path, out: &mut dyn Write) -> Outcome {
    let g = load_graph(path)?;
    match oracle_even_spanning_tree(&g, cap) {
        Ok(Some(t)) => {
            write!(out, "{}", format_tree(&t)).ok();
            Ok(EXIT_OK)
        }
        Ok(None) => {
            writeln!(out, "no-tree").ok();
            Ok(EXIT_NO_TREE)
        }
        Err(OracleError::Disconnected) => solve_error(SolveError::Disconnected, out),
        Err(e @ OracleError::CapExceeded { .. }) => Err(failure(EXIT_CAP, e.to_string())),
    }
}

fn cmd_reduce(cnf: &Path, output: &Path, map: &Path, dot: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let formula = parse_dimacs(&read(cnf)?).map_err(|e| failure(EXIT_PARSE, format!("{}: {e}", cnf.display())))?;
    let r = build_reduction(&formula);
    write_file(output, &format_graph(&r.graph))?;
    write_file(map, &format_map(&r))?;
    if let Some(dot_path) = dot {
        let labels: Vec<String> = r.map.roles.iter().map(|role| role.to_string()).collect();
        write_file(dot_path, &to_dot(&r.graph, None, Some(&labels)))?;
    }
    writeln!(out, "# vertices {} edges {}", r.graph.n(), r.graph.edge_count()).ok();
    Ok(EXIT_OK)
}

fn cmd_extract(map: &Path, tree: &Path, out: &mut dyn Write) -> Outcome {
    let r = parse_map(&read(map)?).map_err(|e| failure(EXIT_PARSE, format!("{}: {e}", map.display())))?;
    let t = load_tree(tree)?;
    match r.extract_assignment(&t.edges) {
        Ok(a) => {
            for (i, v) in a.iter().enumerate() {
                writeln!(out, "v{} = {v}", i + 1).ok();
            }
            Ok(EXIT_OK)
        }
        Err(ReductionError::InvalidTree(report)) => {
            writeln!(out, "{report}").ok();
            Ok(EXIT_REJECTED)
        }
        Err(e) => Err(failure(EXIT_INTEGRITY, e.to_string())),
    }
}

fn ids(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// The structure behind a class label, one indented line per part.
fn witness_lines(g: &Graph, class: GraphClass) -> Vec<String> {
    match class {
        GraphClass::Cograph => cograph_join_decompose(g)
            .map(|j| vec![format!("join {}", ids(&j.first)), format!("join {}", ids(&j.second))])
            .unwrap_or_default(),
        GraphClass::Cobipartite => cobipartite_partition(g)
            .ok()
            .flatten()
            .map(|p| vec![format!("clique {}", ids(&p.first)), format!("clique {}", ids(&p.second))])
            .unwrap_or_default(),
        GraphClass::UnitInterval => {
            unit_interval_order(g).map(|o| vec![format!("order {}", ids(&o.order))]).unwrap_or_default()
        }
        GraphClass::Split => split_partition(g)
            .map(|p| vec![format!("clique {}", ids(&p.clique)), format!("independent {}", ids(&p.independent))])
            .unwrap_or_default(),
        GraphClass::Block => block_cut_tree(g)
            .map(|t| {
                let mut lines: Vec<String> = t.blocks.iter().map(|b| format!("block {}", ids(b))).collect();
                lines.push(format!("cuts {}", ids(&t.cuts)));
                lines
            })
            .unwrap_or_default(),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Recognize { graph } => {
            let g = load_graph(&graph)?;
            for c in recognize(&g) {
                writeln!(out, "{c}").ok();
                for line in witness_lines(&g, c) {
                    writeln!(out, "  {}", line.trim_end()).ok();
                }
            }
            Ok(EXIT_OK)
        }
        Command::Solve { class, oracle_max_vertices, dot, graph } => {
            cmd_solve(class, oracle_max_vertices, dot.as_deref(), &graph, out)
        }
        Command::Verify { graph, tree } => cmd_verify(&graph, &tree, out),
        Command::Oracle { cap, graph } => cmd_oracle(cap, &graph, out),
        Command::Reduce { cnf, output, map, dot } => cmd_reduce(&cnf, &output, &map, dot.as_deref(), out),
        Command::Extract { map, tree } => cmd_extract(&map, &tree, out),
        Command::Selfcheck { seed, max_n } => {
            let report = crate::selfcheck::run(max_n, seed);
            write!(out, "{report}").ok();
            Ok(if report.passed() { EXIT_OK } else { EXIT_INTEGRITY })
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                write!(err, "{e}").ok();
            } else {
                write!(out, "{e}").ok();
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            writeln!(err, "error: {}", f.message).ok();
            f.code
        }
    }
}

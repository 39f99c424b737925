//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use common::*;
use even_tree::generate::{self, random_relabel};
use even_tree::oracle::{
    all_even_spanning_trees, check_pattern, count_spanning_trees, oracle_even_spanning_tree, PatternKind,
    PatternRequirement, DEFAULT_CAP,
};
use even_tree::recognize::{block_cut_tree, split_partition};
use even_tree::reduction::gadget::{connector_gadget, variable_gadget};
use even_tree::reduction::{build_reduction, Cnf};
use even_tree::solve::{
    block_trace, solve_auto, solve_block, solve_cobipartite, solve_cograph, solve_split, solve_unit_interval,
    split_hat, AutoConfig, SolveOutcome,
};
use even_tree::{edge, verify_even_spanning_tree, Color, Edge, EvenTree, Graph};

type Check = Result<String, String>;

/// Name, check and optional wall-clock limit.
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

const SEED: u64 = 0x5eed;
const RANDOM_PER_CLASS: usize = 500;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_exists(g: &Graph) -> Result<bool, String> {
    oracle_even_spanning_tree(g, DEFAULT_CAP).map(|t| t.is_some()).map_err(|e| format!("{g:?}: {e}"))
}

/// A Found tree must pass both the library verifier and the independent
/// pairwise check, and carry an admissible coloring.
fn check_found(g: &Graph, t: &EvenTree, who: &str) -> Result<(), String> {
    ensure(verify_even_spanning_tree(g, &t.edges).is_valid(), || format!("{who}: verifier rejects tree on {g:?}"))?;
    ensure(is_even_spanning_tree(g, &t.edges), || format!("{who}: tree fails pairwise check on {g:?}"))?;
    ensure(is_admissible(g.n(), &t.edges, &t.coloring), || format!("{who}: bad coloring on {g:?}"))
}

/// Runs a class solver and compares its verdict with `expect_no_tree`.
fn class_case(
    g: &Graph,
    solve: fn(&Graph) -> Result<SolveOutcome, even_tree::solve::SolveError>,
    expect_no_tree: bool,
    who: &str,
) -> Result<(), String> {
    let out = solve(g).map_err(|e| format!("{who} on {g:?}: {e}"))?;
    match &out {
        SolveOutcome::Found(t) => {
            ensure(!expect_no_tree, || format!("{who}: found a tree on {g:?}, expected none"))?;
            check_found(g, t, who)
        }
        SolveOutcome::NoTree(_) => ensure(expect_no_tree, || format!("{who}: no tree on {g:?}, expected one")),
        SolveOutcome::NotInClass => Err(format!("{who}: rejected class member {g:?}")),
    }
}

fn c1_verifier() -> Check {
    let mut count = 0u64;
    let mut even = 0u64;
    for n in 1..=9 {
        for tree in generate::all_trees(n) {
            let report = verify_even_spanning_tree(&tree, tree.edges());
            let truth = tree_is_even(&tree);
            ensure(report.is_valid() == truth, || format!("verdict {} on {tree:?}", report.is_valid()))?;
            if let Some(colors) = report.coloring() {
                ensure(is_admissible(n, tree.edges(), colors), || format!("coloring on {tree:?}"))?;
            }
            count += 1;
            even += truth as u64;
        }
    }
    Ok(format!("{count} labeled trees on 1..=9 vertices, {even} even, all verdicts agree"))
}

fn c2_counts() -> Check {
    let mut rng = generate::rng(SEED);
    let mut total = 0i128;
    for _ in 0..200 {
        let n = rng.random_range(1..=8);
        let p = rng.random_range(0.2..=1.0);
        let g = generate::random_connected(n, p, &mut rng);
        let expected = matrix_tree_count(&g);
        let got = count_spanning_trees(&g, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(got as i128 == expected, || format!("{got} trees vs determinant {expected} on {g:?}"))?;
        total += expected;
    }
    Ok(format!("200 random connected graphs, {total} spanning trees in total, all counts match"))
}

fn random_sizes(rng: &mut impl Rng, lo: usize) -> Vec<usize> {
    (0..RANDOM_PER_CLASS).map(|_| rng.random_range(lo..=14)).collect()
}

fn c3_cograph() -> Check {
    let mut rng = generate::rng(SEED + 3);
    let (mut exhaustive, mut no_tree) = (0, 0);
    for n in 1..=8 {
        for g in generate::connected_cographs(n) {
            ensure(is_p4_free(&g) && g.is_connected(), || format!("generator gave {g:?}"))?;
            let kt = is_balanced_complete_bipartite(&g);
            class_case(&g, solve_cograph, kt, "cograph")?;
            exhaustive += 1;
            no_tree += kt as usize;
        }
    }
    for n in random_sizes(&mut rng, 1) {
        let g = random_relabel(&generate::random_cograph(n, &mut rng), &mut rng);
        ensure(is_p4_free(&g) && g.is_connected(), || format!("generator gave {g:?}"))?;
        class_case(&g, solve_cograph, is_balanced_complete_bipartite(&g), "cograph")?;
    }
    Ok(format!(
        "{exhaustive} connected cographs on 1..=8 vertices up to isomorphism ({no_tree} balanced complete bipartite) plus {RANDOM_PER_CLASS} random"
    ))
}

fn c4_cobipartite() -> Check {
    let mut rng = generate::rng(SEED + 4);
    let (mut exhaustive, mut no_tree) = (0, 0);
    let exception = |g: &Graph| is_k2(g) || is_p4(g) || is_c4(g);
    for n in 2..=8 {
        for g in generate::connected_cobipartite(n) {
            ensure(is_cobipartite(&g) && g.is_connected(), || format!("generator gave {g:?}"))?;
            class_case(&g, solve_cobipartite, exception(&g), "cobipartite")?;
            exhaustive += 1;
            no_tree += exception(&g) as usize;
        }
    }
    for n in random_sizes(&mut rng, 2) {
        let g = random_relabel(&generate::random_cobipartite(n, &mut rng), &mut rng);
        ensure(is_cobipartite(&g) && g.is_connected(), || format!("generator gave {g:?}"))?;
        class_case(&g, solve_cobipartite, exception(&g), "cobipartite")?;
    }
    Ok(format!("{exhaustive} two-clique constructions covering every cobipartite graph on 2..=8 vertices ({no_tree} exceptions) plus {RANDOM_PER_CLASS} random"))
}

fn c5_unit_interval() -> Check {
    let mut rng = generate::rng(SEED + 5);
    let (mut exhaustive, mut no_tree) = (0, 0);
    let even_path = |g: &Graph| is_path(g) && g.n().is_multiple_of(2);
    for n in 1..=8 {
        for g in generate::connected_unit_interval(n) {
            ensure(is_unit_interval(&g) && g.is_connected(), || format!("generator gave {g:?}"))?;
            class_case(&g, solve_unit_interval, even_path(&g), "unit interval")?;
            exhaustive += 1;
            no_tree += even_path(&g) as usize;
        }
    }
    for n in random_sizes(&mut rng, 1) {
        let g = random_relabel(&generate::random_unit_interval(n, &mut rng), &mut rng);
        ensure(g.is_connected(), || format!("generator gave {g:?}"))?;
        class_case(&g, solve_unit_interval, even_path(&g), "unit interval")?;
    }
    Ok(format!("{exhaustive} canonical orderings covering every unit interval graph on 1..=8 vertices ({no_tree} even paths) plus {RANDOM_PER_CLASS} random"))
}

fn c6_split() -> Check {
    let (mut all_pendant, mut other, mut disconnected_hat) = (0, 0, 0);
    for n in 1..=8 {
        for g in generate::connected_split(n) {
            ensure(is_split(&g) && g.is_connected(), || format!("generator gave {g:?}"))?;
            let p = split_partition(&g).ok_or_else(|| format!("recognizer rejects {g:?}"))?;
            let clique: BTreeSet<usize> = p.clique.iter().copied().collect();
            let pendant_clique: BTreeSet<usize> = (0..g.n())
                .filter(|&v| g.degree(v) == 1)
                .map(|v| g.neighbors(v)[0])
                .filter(|k| clique.contains(k))
                .collect();
            let out = solve_split(&g).map_err(|e| format!("split on {g:?}: {e}"))?;
            let found = match &out {
                SolveOutcome::Found(t) => {
                    check_found(&g, t, "split")?;
                    true
                }
                SolveOutcome::NoTree(_) => false,
                SolveOutcome::NotInClass => return Err(format!("split solver rejects {g:?}")),
            };
            let truth = oracle_exists(&g)?;
            ensure(found == truth, || format!("solver {found}, oracle {truth} on {g:?}"))?;
            if pendant_clique == clique && !is_k2(&g) {
                let hat = split_hat(&g, &p).is_connected();
                ensure(found == hat, || format!("solver {found}, hat connected {hat} on {g:?}"))?;
                all_pendant += 1;
                disconnected_hat += !hat as usize;
            } else if pendant_clique != clique {
                ensure(found, || format!("no tree although a clique vertex lacks a pendant, {g:?}"))?;
                other += 1;
            }
        }
    }
    Ok(format!(
        "{all_pendant} graphs with every clique vertex pendant-adjacent ({disconnected_hat} with disconnected hat), {other} others all found; K2 handled as the two-vertex exception"
    ))
}

fn block_case(g: &Graph, all_trees: bool) -> Result<bool, String> {
    let out = solve_block(g).map_err(|e| format!("block on {g:?}: {e}"))?;
    let found = match &out {
        SolveOutcome::Found(t) => {
            check_found(g, t, "block")?;
            true
        }
        SolveOutcome::NoTree(_) => false,
        SolveOutcome::NotInClass => return Err(format!("block solver rejects {g:?}")),
    };
    let witnesses: Vec<EvenTree> = if all_trees {
        all_even_spanning_trees(g, DEFAULT_CAP).map_err(|e| e.to_string())?
    } else {
        oracle_even_spanning_tree(g, DEFAULT_CAP).map_err(|e| e.to_string())?.into_iter().collect()
    };
    ensure(found == !witnesses.is_empty(), || format!("solver {found}, oracle {} on {g:?}", !found))?;
    let bct = block_cut_tree(g).ok_or_else(|| format!("no block-cut tree for {g:?}"))?;
    let trace = block_trace(g, &bct);
    for t in &witnesses {
        for (v, c) in trace.forced.colored() {
            ensure(t.coloring[v] == c, || format!("forced {v} {c} but a tree colors it {} on {g:?}", t.coloring[v]))?;
        }
        ensure(t.edges.iter().all(|&(u, v)| trace.reduced.has_edge(u, v)), || {
            format!("a tree uses an edge dropped from the reduced graph on {g:?}")
        })?;
    }
    Ok(found)
}

fn c7_block() -> Check {
    let mut rng = generate::rng(SEED + 7);
    let (mut exhaustive, mut found) = (0, 0);
    for n in 1..=8 {
        for g in generate::connected_block_graphs(n) {
            ensure(is_block_graph(&g), || format!("generator gave {g:?}"))?;
            found += block_case(&g, true)? as usize;
            exhaustive += 1;
        }
    }
    for n in random_sizes(&mut rng, 1) {
        let g = random_relabel(&generate::random_block_graph(n, &mut rng), &mut rng);
        ensure(is_block_graph(&g), || format!("generator gave {g:?}"))?;
        block_case(&g, false)?;
    }
    Ok(format!(
        "{exhaustive} gluing constructions covering every block graph on 1..=8 vertices ({found} with a tree, forced colors checked against every tree) plus {RANDOM_PER_CLASS} random"
    ))
}

fn brute_sat(cnf: &Cnf) -> bool {
    (0u32..1 << cnf.num_vars()).any(|bits| {
        cnf.clauses().iter().all(|c| c.iter().any(|&lit| (bits >> (lit.unsigned_abs() - 1) & 1 == 1) == (lit > 0)))
    })
}

fn all_clauses(num_vars: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << num_vars {
        let vars: Vec<i32> = (1..=num_vars as i32).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        for signs in 0u32..1 << vars.len() {
            out.push(vars.iter().enumerate().map(|(i, &v)| if signs >> i & 1 == 1 { -v } else { v }).collect());
        }
    }
    out
}

fn reduction_case(cnf: &Cnf) -> Result<bool, String> {
    let r = build_reduction(cnf);
    let sat = brute_sat(cnf);
    let tree =
        oracle_even_spanning_tree(&r.graph, DEFAULT_CAP).map_err(|e| format!("{}: {e}", cnf.to_string().trim()))?;
    ensure(sat == tree.is_some(), || format!("sat {sat} but oracle {} on {}", tree.is_some(), cnf.to_string().trim()))?;
    if let Some(t) = &tree {
        let a = r.extract_assignment(&t.edges).map_err(|e| e.to_string())?;
        ensure(cnf.is_satisfied_by(&a), || format!("oracle tree gives a falsifying assignment on {cnf}"))?;
    }
    for bits in 0u32..1 << cnf.num_vars() {
        let a: Vec<bool> = (0..cnf.num_vars()).map(|i| bits >> i & 1 == 1).collect();
        if !cnf.is_satisfied_by(&a) {
            continue;
        }
        let t = r
            .tree_from_assignment(&a)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no tree from a satisfying assignment of {}", cnf.to_string().trim()))?;
        ensure(is_even_spanning_tree(&r.graph, &t.edges), || format!("forward tree is not even on {cnf}"))?;
        let back = r.extract_assignment(&t.edges).map_err(|e| e.to_string())?;
        ensure(cnf.is_satisfied_by(&back), || format!("round trip fails on {}", cnf.to_string().trim()))?;
    }
    Ok(sat)
}

fn c8_reduction() -> Check {
    let mut formulas = Vec::new();
    for num_vars in 1..=2 {
        let clauses = all_clauses(num_vars);
        for (i, a) in clauses.iter().enumerate() {
            formulas.push((num_vars, vec![a.clone()]));
            for b in &clauses[i + 1..] {
                formulas.push((num_vars, vec![a.clone(), b.clone()]));
            }
        }
    }
    let family = formulas.len();
    let mut rng = generate::rng(SEED + 8);
    let pool = all_clauses(3);
    for _ in 0..20 {
        let k = rng.random_range(1..=3);
        formulas.push((3, (0..k).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect()));
    }
    let (mut sat, mut largest) = (0, 0);
    for (num_vars, clauses) in formulas {
        let cnf = Cnf::new(num_vars, clauses).map_err(|e| e.to_string())?;
        largest = largest.max(build_reduction(&cnf).graph.n());
        sat += reduction_case(&cnf)? as usize;
    }
    Ok(format!(
        "{family} formulas on 1..=2 variables with 1..=2 clauses plus 20 random 3-variable ones, {sat} satisfiable, largest graph {largest} vertices, cap never hit"
    ))
}

fn c9_gadgets() -> Check {
    let var = variable_gadget();
    let trees = all_even_spanning_trees(&var.graph, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure(trees.len() == 2, || format!("variable gadget has {} spanning even trees", trees.len()))?;
    let (a, b) = (trees[0].coloring[var.connection], trees[1].coloring[var.connection]);
    ensure(a != b, || "both variable gadget trees color the connection vertex alike".into())?;

    let conn = connector_gadget();
    let mut patterns = 0;
    for kind in [PatternKind::Connector, PatternKind::Disconnector] {
        for ca in [Color::Black, Color::White] {
            for cb in [Color::Black, Color::White] {
                let req = PatternRequirement::new(kind, vec![(conn.a, ca), (conn.b, cb)]);
                ensure(check_pattern(&conn.graph, &req), || format!("{kind:?} {ca} {cb} fails"))?;
                patterns += 1;
            }
        }
    }
    let report = even_tree::selfcheck::run(5, SEED);
    ensure(report.lines[..2].iter().all(|l| l.passed), || format!("selfcheck:\n{report}"))?;
    Ok(format!("variable gadget has exactly 2 trees with opposite connection colors, {patterns} connector patterns hold, both re-derived by selfcheck"))
}

fn c10_mutations() -> Check {
    let mut rng = generate::rng(SEED + 10);
    let (mut trees, mut mutants, mut valid_mutants) = (0, 0, 0);
    while trees < 100 {
        let n = rng.random_range(3..=8);
        let g = generate::random_connected(n, rng.random_range(0.3..=0.9), &mut rng);
        let (out, _) = solve_auto(&g, &AutoConfig::default()).map_err(|e| e.to_string())?;
        let SolveOutcome::Found(t) = out else { continue };
        trees += 1;
        let even: BTreeSet<Vec<Edge>> = all_even_spanning_trees(&g, DEFAULT_CAP)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|t| sorted(t.edges))
            .collect();
        let tree_edges: BTreeSet<Edge> = t.edges.iter().map(|&(u, v)| edge(u, v)).collect();
        let non_tree: Vec<Edge> = g.edges().iter().copied().filter(|e| !tree_edges.contains(&edge(e.0, e.1))).collect();
        for (i, _) in t.edges.iter().enumerate() {
            let mut deleted = t.edges.clone();
            deleted.remove(i);
            ensure(!verify_even_spanning_tree(&g, &deleted).is_valid(), || format!("deleted edge accepted on {g:?}"))?;
            mutants += 1;
            for &f in &non_tree {
                let mut swapped = deleted.clone();
                swapped.push(f);
                let truth = even.contains(&sorted(swapped.clone()));
                let verdict = verify_even_spanning_tree(&g, &swapped).is_valid();
                ensure(verdict == truth, || format!("verifier {verdict}, oracle {truth} on swap in {g:?}"))?;
                mutants += 1;
                valid_mutants += truth as usize;
            }
        }
    }
    Ok(format!(
        "{mutants} mutants of {trees} found trees, {valid_mutants} of them spanning even trees, verifier exact on all"
    ))
}

fn sorted(edges: Vec<Edge>) -> Vec<Edge> {
    let mut e: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
    e.sort_unstable();
    e
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 verifier matches pairwise leaf parity", c1_verifier, Some(Duration::from_secs(60))),
        ("2 spanning tree counts match Matrix-Tree", c2_counts, Some(Duration::from_secs(60))),
        ("3 cographs: no tree iff balanced complete bipartite", c3_cograph, None),
        ("4 cobipartite: no tree iff K2, P4 or C4", c4_cobipartite, None),
        ("5 unit interval: no tree iff even path", c5_unit_interval, None),
        ("6 split graphs match hat connectivity and the oracle", c6_split, None),
        ("7 block graphs match the oracle and forced colors", c7_block, None),
        ("8 reduction equivalence and round trip", c8_reduction, None),
        ("9 gadget certificates", c9_gadgets, None),
        ("10 mutation robustness", c10_mutations, None),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(d), Some(l)) if elapsed > l => Err(format!("{d}, but took {elapsed:.1?} (limit {l:?})")),
            (r, _) => r,
        };
        match result {
            Ok(d) => println!("PASS {name}: {d} [{elapsed:.2?}]"),
            Err(d) => {
                failed += 1;
                println!("FAIL {name}: {d} [{elapsed:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

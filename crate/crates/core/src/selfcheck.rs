//! Re-derives everything the crate ships or relies on: gadget searches,
//! gadget contracts, solver-versus-search agreement on every small graph,
//! and reduction round trips on random formulas.

use rand::Rng;

use crate::generate;
use crate::oracle::{oracle_even_spanning_tree, DEFAULT_CAP};
use crate::recognize::recognize;
use crate::reduction::gadget::{
    connector_gadget, synth_connector_gadget, synth_variable_gadget, variable_gadget, ConnectorGadget, VariableGadget,
};
use crate::reduction::{build_with, Cnf};
use crate::solve::{check_certificate, solve_class};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SelfcheckReport {
    pub lines: Vec<CheckLine>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    fn record(&mut self, name: &str, result: Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.lines.push(CheckLine { name: name.to_string(), passed, detail });
    }
}

impl std::fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.lines {
            writeln!(f, "{} {}: {}", if l.passed { "PASS" } else { "FAIL" }, l.name, l.detail)?;
        }
        Ok(())
    }
}

/// Runs every check against the shipped gadgets.
pub fn run(max_sweep_n: usize, seed: u64) -> SelfcheckReport {
    run_with(variable_gadget(), connector_gadget(), max_sweep_n, seed)
}

/// Runs every check against the given gadgets.
pub fn run_with(var: &VariableGadget, conn: &ConnectorGadget, max_sweep_n: usize, seed: u64) -> SelfcheckReport {
    let mut report = SelfcheckReport::default();
    report.record(
        "variable gadget",
        var.validate().map_err(|e| e.to_string()).and_then(|_| match synth_variable_gadget() {
            Ok(fresh) if fresh == *var => Ok("contract holds and matches a fresh search".into()),
            Ok(_) => Err("differs from a fresh search".into()),
            Err(e) => Err(e.to_string()),
        }),
    );
    report.record(
        "connector gadget",
        conn.validate().map_err(|e| e.to_string()).and_then(|_| match synth_connector_gadget() {
            Ok(fresh) if fresh == *conn => Ok("all eight patterns hold and match a fresh search".into()),
            Ok(_) => Err("differs from a fresh search".into()),
            Err(e) => Err(e.to_string()),
        }),
    );
    report.record("solver sweep", sweep(max_sweep_n));
    report.record("reduction round trips", round_trips(var, conn, seed));
    report
}

/// Every connected graph with up to `max_n` vertices, every class solver
/// that applies, against exhaustive search.
fn sweep(max_n: usize) -> Result<String, String> {
    let mut checked = 0usize;
    for n in 1..=max_n {
        for g in generate::all_graphs(n).filter(|g| g.is_connected()) {
            let truth = oracle_even_spanning_tree(&g, DEFAULT_CAP).map_err(|e| e.to_string())?.is_some();
            for class in recognize(&g) {
                let out = solve_class(&g, class).map_err(|e| format!("{class} on {g:?}: {e}"))?;
                if out.exists() != Some(truth) {
                    return Err(format!("{class} solver disagrees with exhaustive search on {g:?}"));
                }
                if let Some(cert) = out.certificate() {
                    check_certificate(&g, cert).map_err(|e| format!("{class} on {g:?}: {e}"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} solver runs on graphs up to {max_n} vertices agree"))
}

fn random_cnf(rng: &mut impl Rng) -> Cnf {
    let num_vars = rng.random_range(1..=3);
    let clauses = (0..rng.random_range(1..=3))
        .map(|_| {
            let mut vars: Vec<i32> = (1..=num_vars as i32).filter(|_| rng.random_bool(0.6)).collect();
            if vars.is_empty() {
                vars.push(rng.random_range(1..=num_vars as i32));
            }
            vars.into_iter().map(|v| if rng.random_bool(0.5) { v } else { -v }).collect()
        })
        .collect();
    Cnf::new(num_vars, clauses).expect("generated formula is valid")
}

fn round_trips(var: &VariableGadget, conn: &ConnectorGadget, seed: u64) -> Result<String, String> {
    let mut rng = generate::rng(seed);
    for _ in 0..10 {
        let cnf = random_cnf(&mut rng);
        let r = build_with(&cnf, var, conn);
        for bits in 0u32..1 << cnf.num_vars() {
            let a: Vec<bool> = (0..cnf.num_vars()).map(|i| bits >> i & 1 == 1).collect();
            let tree = r.tree_from_assignment(&a).map_err(|e| format!("{}: {e}", cnf.to_string().trim()))?;
            match tree {
                Some(t) => {
                    let back = r.extract_assignment(&t.edges).map_err(|e| e.to_string())?;
                    if !cnf.is_satisfied_by(&back) {
                        return Err(format!("extracted assignment fails {}", cnf.to_string().trim()));
                    }
                }
                None if cnf.is_satisfied_by(&a) => return Err("satisfying assignment produced no tree".into()),
                None => {}
            }
        }
    }
    Ok("10 random formulas, every assignment".into())
}

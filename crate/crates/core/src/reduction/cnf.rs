use std::fmt;

use thiserror::Error;

use crate::text::ParseError;

/// A CNF formula over variables `1..=num_vars`. Literals are signed variable
/// indices as in DIMACS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("a formula needs at least one variable")]
    NoVariables,
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} mentions variable {var}, outside 1..={num_vars}")]
    OutOfRange { clause: usize, var: u32, num_vars: usize },
    #[error("clause {clause} contains both {var} and -{var}")]
    Tautology { clause: usize, var: u32 },
}

impl Cnf {
    /// Validates and normalizes: literals in each clause are deduplicated
    /// and sorted by variable.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Cnf, CnfError> {
        if num_vars == 0 {
            return Err(CnfError::NoVariables);
        }
        let mut out = Vec::with_capacity(clauses.len());
        for (j, mut clause) in clauses.into_iter().enumerate() {
            let clause_no = j + 1;
            if clause.is_empty() {
                return Err(CnfError::EmptyClause { clause: clause_no });
            }
            clause.sort_by_key(|&l| (l.unsigned_abs(), l));
            clause.dedup();
            for w in clause.windows(2) {
                if w[0] == -w[1] {
                    return Err(CnfError::Tautology { clause: clause_no, var: w[0].unsigned_abs() });
                }
            }
            if let Some(&l) = clause.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars) {
                return Err(CnfError::OutOfRange { clause: clause_no, var: l.unsigned_abs(), num_vars });
            }
            out.push(clause);
        }
        Ok(Cnf { num_vars, clauses: out })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// Brute force over all assignments, first in binary counting order
    /// with variable 1 as the lowest bit.
    pub fn brute_force(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "brute force is for small formulas");
        (0u32..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_satisfied_by(a))
    }

    /// Occurrences `(var, clause, positive)` with 1-based indices, sorted by
    /// variable then clause.
    pub fn occurrences(&self) -> Vec<(usize, usize, bool)> {
        let mut occ: Vec<_> = self
            .clauses
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |&l| (l.unsigned_abs() as usize, j + 1, l > 0)))
            .collect();
        occ.sort_unstable();
        occ
    }
}

/// DIMACS text.
impl fmt::Display for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.num_vars, self.clauses.len())?;
        for c in &self.clauses {
            for l in c {
                write!(f, "{l} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

/// Parses DIMACS CNF. Comment lines start with `c`; a line starting with
/// `%` ends the input. Clauses may span lines and end with `0`.
pub fn parse_dimacs(text: &str) -> Result<Cnf, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut clause_lines: Vec<usize> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::new(line_no, "second problem line"));
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parsed = match toks.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            let (v, c) = parsed.ok_or_else(|| ParseError::new(line_no, "expected \"p cnf <vars> <clauses>\""))?;
            header = Some((v, c, line_no));
            continue;
        }
        let Some((num_vars, _, _)) = header else {
            return Err(ParseError::new(line_no, "clause before the problem line"));
        };
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("expected an integer literal, found {tok:?}")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(ParseError::new(line_no, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
                clause_lines.push(line_no);
            } else {
                if lit.unsigned_abs() as usize > num_vars {
                    return Err(ParseError::new(
                        line_no,
                        format!("literal {lit} exceeds the declared {num_vars} variables"),
                    ));
                }
                current.push(lit);
            }
        }
    }
    let Some((num_vars, num_clauses, header_line)) = header else {
        return Err(ParseError::new(last_line.max(1), "missing problem line"));
    };
    if !current.is_empty() {
        return Err(ParseError::new(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != num_clauses {
        return Err(ParseError::new(
            header_line,
            format!("problem line declares {num_clauses} clauses, found {}", clauses.len()),
        ));
    }
    Cnf::new(num_vars, clauses).map_err(|e| {
        let line = match &e {
            CnfError::NoVariables => header_line,
            CnfError::EmptyClause { clause }
            | CnfError::OutOfRange { clause, .. }
            | CnfError::Tautology { clause, .. } => clause_lines[clause - 1],
        };
        ParseError::new(line, e.to_string())
    })
}

//! CNF formulas, DIMACS CNF input and a brute-force satisfiability oracle.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A truth assignment; slot `i - 1` holds the value of variable `x_i`.
pub type Assignment = Vec<bool>;

/// Largest variable count accepted by [`sat_brute_force`].
pub const BRUTE_FORCE_MAX_VARIABLES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    /// Literals are signed variable indices; negative means negated.
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if variable_count == 0 {
            return Err(Error::InvalidParameter("a formula needs at least one variable".into()));
        }
        if clauses.is_empty() {
            return Err(Error::InvalidParameter("a formula needs at least one clause".into()));
        }
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidParameter(format!("clause {} is empty", i + 1)));
            }
            if let Some(&lit) = clause
                .iter()
                .find(|&&lit| lit == 0 || lit.unsigned_abs() as usize > variable_count)
            {
                return Err(Error::InvalidParameter(format!(
                    "clause {} has literal {lit} outside ±1..={variable_count}",
                    i + 1
                )));
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// The first (0-based) clause falsified by `assignment`, if any.
    pub fn first_falsified(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|clause| !clause.iter().any(|&lit| literal_value(lit, assignment)))
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variable_count && self.first_falsified(assignment).is_none()
    }

    pub fn to_dimacs(&self) -> String {
        let mut text = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                write!(text, "{lit} ").unwrap();
            }
            text.push_str("0\n");
        }
        text
    }
}

pub fn literal_value(lit: i32, assignment: &[bool]) -> bool {
    let value = assignment[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        value
    } else {
        !value
    }
}

/// Parses DIMACS CNF, rejecting clauses with more than three literals.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    parse_dimacs_cnf_with(text, Some(3))
}

/// Parses DIMACS CNF. Clauses may span lines and end at `0`; `c` lines are
/// comments and a `%` line ends the input. `max_clause_len = None` accepts
/// clauses of any size.
pub fn parse_dimacs_cnf_with(text: &str, max_clause_len: Option<usize>) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line, "duplicate problem line"));
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::parse(line, "expected \"p cnf <variables> <clauses>\""));
            }
            let n = fields[2]
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid variable count {:?}", fields[2])))?;
            let m = fields[3]
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid clause count {:?}", fields[3])))?;
            if n == 0 {
                return Err(Error::parse(line, "a formula needs at least one variable"));
            }
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::parse(line, "clause before problem line"));
        };
        for field in trimmed.split_whitespace() {
            let lit: i32 = field
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid literal {field:?}")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(Error::parse(line, "empty clause"));
                }
                if let Some(max) = max_clause_len {
                    if current.len() > max {
                        return Err(Error::ClauseTooLarge {
                            line,
                            len: current.len(),
                        });
                    }
                }
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > n {
                return Err(Error::parse(
                    line,
                    format!("variable {} out of range 1..={n}", lit.unsigned_abs()),
                ));
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing problem line"))?;
    if !current.is_empty() {
        return Err(Error::parse(last_line, "unterminated clause"));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            last_line.max(1),
            format!("problem line declares {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses).map_err(|e| Error::parse(last_line.max(1), e.to_string()))
}

/// The satisfying assignment that comes first in binary order (false before
/// true, `x_1` most significant), or `None` if unsatisfiable.
pub fn sat_brute_force(phi: &CnfFormula) -> Result<Option<Assignment>> {
    let n = phi.variable_count;
    if n > BRUTE_FORCE_MAX_VARIABLES {
        return Err(Error::TooManyVariables(n));
    }
    let mut assignment = vec![false; n];
    for mask in 0u32..(1u32 << n) {
        for (i, value) in assignment.iter_mut().enumerate() {
            *value = (mask >> (n - 1 - i)) & 1 == 1;
        }
        if phi.first_falsified(&assignment).is_none() {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

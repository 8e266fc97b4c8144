//! CNF formulas, a small complete DPLL solver, projected model enumeration
//! and DIMACS import/export.

mod dimacs;
mod solver;

use std::fmt;

use thiserror::Error;

pub use dimacs::{from_dimacs, to_dimacs};
pub use solver::{solve, solve_all};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("a clause needs at least one literal")]
    EmptyClause,
    #[error("variable {var} is outside 1..={num_vars}")]
    VarOutOfRange { var: u32, num_vars: u32 },
    #[error("DIMACS line {line}: {reason}")]
    Dimacs { line: usize, reason: String },
}

/// A variable or its negation; variables are numbered from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    pub fn new(var: u32, positive: bool) -> Self {
        assert!(
            var >= 1 && var <= i32::MAX as u32,
            "variable ids start at 1"
        );
        Literal(if positive { var as i32 } else { -(var as i32) })
    }

    pub fn pos(var: u32) -> Self {
        Literal::new(var, true)
    }

    pub fn neg(var: u32) -> Self {
        Literal::new(var, false)
    }

    /// From the signed-integer DIMACS notation; `None` for 0.
    pub fn from_dimacs(x: i32) -> Option<Self> {
        (x != 0 && x != i32::MIN).then_some(Literal(x))
    }

    pub fn to_dimacs(self) -> i32 {
        self.0
    }

    pub fn var(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn eval(self, value: bool) -> bool {
        value == self.is_positive()
    }
}

impl std::ops::Not for Literal {
    type Output = Literal;

    fn not(self) -> Literal {
        Literal(-self.0)
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A disjunction of distinct literals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause(Vec<Literal>);

impl Clause {
    /// Removes repeated literals (keeping the first occurrence). Returns
    /// `Ok(None)` for a tautology.
    pub fn new<I: IntoIterator<Item = Literal>>(lits: I) -> Result<Option<Clause>, SatError> {
        let mut out: Vec<Literal> = Vec::new();
        for l in lits {
            if out.contains(&!l) {
                return Ok(None);
            }
            if !out.contains(&l) {
                out.push(l);
            }
        }
        if out.is_empty() {
            return Err(SatError::EmptyClause);
        }
        Ok(Some(Clause(out)))
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_satisfied_by(&self, model: &Model) -> bool {
        self.0.iter().any(|l| l.eval(model.value(l.var())))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: u32) -> Self {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Allocates a fresh variable.
    pub fn new_var(&mut self) -> u32 {
        self.num_vars += 1;
        self.num_vars
    }

    /// Adds a clause; tautologies are silently dropped.
    pub fn add_clause<I: IntoIterator<Item = Literal>>(&mut self, lits: I) -> Result<(), SatError> {
        let Some(clause) = Clause::new(lits)? else {
            return Ok(());
        };
        if let Some(l) = clause.0.iter().find(|l| l.var() > self.num_vars) {
            return Err(SatError::VarOutOfRange {
                var: l.var(),
                num_vars: self.num_vars,
            });
        }
        self.clauses.push(clause);
        Ok(())
    }

    pub fn is_satisfied_by(&self, model: &Model) -> bool {
        self.clauses.iter().all(|c| c.is_satisfied_by(model))
    }
}

/// A total assignment to variables `1..=num_vars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Model(Vec<bool>);

impl Model {
    pub fn from_values(values: Vec<bool>) -> Self {
        Model(values)
    }

    pub fn num_vars(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn value(&self, var: u32) -> bool {
        self.0[var as usize - 1]
    }

    /// Values of the given variables, in order.
    pub fn project(&self, vars: &[u32]) -> Vec<bool> {
        vars.iter().map(|&v| self.value(v)).collect()
    }
}

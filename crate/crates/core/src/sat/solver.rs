//! DPLL with two-watched-literal unit propagation and chronological
//! backtracking. Branching takes the lowest unassigned variable and tries
//! `false` before `true`, so runs are fully deterministic.
//!
//! Pure literals are fixed once at the root. During projected enumeration
//! only variables outside the projection are eligible, since fixing a pure
//! projection variable would discard models that differ on it.

use super::{CnfFormula, Literal, Model};

const UNDEF: u8 = 2;

#[inline]
fn code(l: Literal) -> usize {
    // 2v for the positive literal, 2v+1 for the negative one.
    (l.var() as usize) << 1 | (!l.is_positive()) as usize
}

struct Level {
    trail_start: usize,
    decision: Literal,
    flipped: bool,
}

struct Solver {
    num_vars: usize,
    values: Vec<u8>,
    clauses: Vec<Vec<Literal>>,
    watches: Vec<Vec<usize>>,
    trail: Vec<Literal>,
    qhead: usize,
    levels: Vec<Level>,
}

impl Solver {
    /// `None` when the clauses conflict at the root.
    fn new(f: &CnfFormula) -> Option<Solver> {
        let num_vars = f.num_vars() as usize;
        let mut s = Solver {
            num_vars,
            values: vec![UNDEF; num_vars + 1],
            clauses: Vec::with_capacity(f.clauses().len()),
            watches: vec![Vec::new(); 2 * num_vars + 2],
            trail: Vec::new(),
            qhead: 0,
            levels: Vec::new(),
        };
        for c in f.clauses() {
            if !s.attach(c.literals().to_vec()) {
                return None;
            }
        }
        s.propagate().is_none().then_some(s)
    }

    #[inline]
    fn value(&self, l: Literal) -> u8 {
        match self.values[l.var() as usize] {
            UNDEF => UNDEF,
            v => (v == 1) as u8 ^ (!l.is_positive()) as u8,
        }
    }

    fn assign(&mut self, l: Literal) {
        debug_assert_eq!(self.value(l), UNDEF);
        self.values[l.var() as usize] = l.is_positive() as u8;
        self.trail.push(l);
    }

    /// Adds a clause against the current assignment. Watches go to non-false
    /// literals where possible; a clause left with one non-false literal
    /// asserts it. Returns `false` if every literal is already false.
    fn attach(&mut self, mut lits: Vec<Literal>) -> bool {
        let pos = |s: &Solver, l: Literal| s.trail.iter().rposition(|&t| t == !l);
        lits.sort_by_key(|&l| match self.value(l) {
            1 => (0, 0),
            UNDEF => (1, 0),
            _ => (2, usize::MAX - pos(self, l).unwrap_or(0)),
        });
        let first = lits[0];
        match self.value(first) {
            0 => return false,
            UNDEF if lits.len() == 1 || self.value(lits[1]) == 0 => self.assign(first),
            _ => {}
        }
        let idx = self.clauses.len();
        self.watches[code(first)].push(idx);
        if lits.len() > 1 {
            self.watches[code(lits[1])].push(idx);
        }
        self.clauses.push(lits);
        true
    }

    /// Returns the index of a conflicting clause, if any.
    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let falsified = !self.trail[self.qhead];
            self.qhead += 1;
            let fc = code(falsified);
            let watching = std::mem::take(&mut self.watches[fc]);
            let mut keep = Vec::with_capacity(watching.len());
            let mut conflict = None;
            let mut iter = watching.into_iter();
            for ci in iter.by_ref() {
                let clause = &mut self.clauses[ci];
                if clause.len() == 1 {
                    keep.push(ci);
                    conflict = Some(ci);
                    break;
                }
                if clause[0] == falsified {
                    clause.swap(0, 1);
                }
                let other = clause[0];
                let other_val = match self.values[other.var() as usize] {
                    UNDEF => UNDEF,
                    v => (v == 1) as u8 ^ (!other.is_positive()) as u8,
                };
                if other_val == 1 {
                    keep.push(ci);
                    continue;
                }
                let replacement = (2..clause.len()).find(|&k| {
                    let l = clause[k];
                    let v = self.values[l.var() as usize];
                    v == UNDEF || (v == 1) == l.is_positive()
                });
                if let Some(k) = replacement {
                    clause.swap(1, k);
                    let w = code(clause[1]);
                    self.watches[w].push(ci);
                    continue;
                }
                keep.push(ci);
                if other_val == 0 {
                    conflict = Some(ci);
                    break;
                }
                self.assign(other);
            }
            keep.extend(iter);
            let slot = &mut self.watches[fc];
            keep.append(slot);
            *slot = keep;
            if conflict.is_some() {
                return conflict;
            }
        }
        None
    }

    fn undo_to(&mut self, trail_len: usize) {
        for l in self.trail.drain(trail_len..) {
            self.values[l.var() as usize] = UNDEF;
        }
        self.qhead = self.qhead.min(trail_len);
    }

    /// Flips the most recent untried decision. `false` once the tree is exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(level) = self.levels.pop() {
            self.undo_to(level.trail_start);
            if !level.flipped {
                self.flip(level);
                return true;
            }
        }
        false
    }

    fn flip(&mut self, level: Level) {
        let alt = !level.decision;
        self.levels.push(Level {
            trail_start: level.trail_start,
            decision: alt,
            flipped: true,
        });
        self.assign(alt);
    }

    fn next_unassigned(&self) -> Option<u32> {
        (1..=self.num_vars)
            .find(|&v| self.values[v] == UNDEF)
            .map(|v| v as u32)
    }

    /// Runs until a total satisfying assignment or exhaustion.
    fn search(&mut self) -> bool {
        loop {
            if self.propagate().is_some() {
                if !self.backtrack() {
                    return false;
                }
                continue;
            }
            let Some(var) = self.next_unassigned() else {
                return true;
            };
            self.levels.push(Level {
                trail_start: self.trail.len(),
                decision: Literal::neg(var),
                flipped: false,
            });
            self.assign(Literal::neg(var));
        }
    }

    /// Fixes pure literals among `eligible` variables at the root, together
    /// with whatever unit propagation follows. `false` on a root conflict.
    fn eliminate_pure(&mut self, eligible: &[bool]) -> bool {
        loop {
            let mut pos = vec![false; self.num_vars + 1];
            let mut neg = vec![false; self.num_vars + 1];
            for c in &self.clauses {
                if c.iter().any(|&l| self.value(l) == 1) {
                    continue;
                }
                for &l in c {
                    if self.value(l) == UNDEF {
                        if l.is_positive() {
                            pos[l.var() as usize] = true;
                        } else {
                            neg[l.var() as usize] = true;
                        }
                    }
                }
            }
            let mut changed = false;
            for v in 1..=self.num_vars {
                if !eligible[v] || self.values[v] != UNDEF || (pos[v] && neg[v]) {
                    continue;
                }
                // Unconstrained variables default to false.
                self.assign(Literal::new(v as u32, pos[v]));
                changed = true;
            }
            if !changed {
                return true;
            }
            if self.propagate().is_some() {
                return false;
            }
        }
    }

    fn model(&self) -> Model {
        Model::from_values((1..=self.num_vars).map(|v| self.values[v] == 1).collect())
    }

    /// Blocks the current projection and backtracks to the deepest level
    /// whose alternative can change it. `false` once nothing is left.
    fn block(&mut self, projection: &[u32]) -> bool {
        let clause: Vec<Literal> = projection
            .iter()
            .map(|&v| Literal::new(v, self.values[v as usize] != 1))
            .collect();
        loop {
            let Some(level) = self.levels.pop() else {
                return false;
            };
            self.undo_to(level.trail_start);
            if level.flipped || clause.iter().all(|&l| self.value(l) == 0) {
                continue;
            }
            self.flip(level);
            return self.attach(clause);
        }
    }
}

/// Finds a satisfying assignment, or `None` if the formula is unsatisfiable.
pub fn solve(f: &CnfFormula) -> Option<Model> {
    let mut s = Solver::new(f)?;
    let eligible = vec![true; s.num_vars + 1];
    if !s.eliminate_pure(&eligible) {
        return None;
    }
    s.search().then(|| s.model())
}

/// Enumerates one model for every satisfiable assignment of the projection
/// variables. After each model, the clause excluding its projection is
/// added and the search resumes.
pub fn solve_all(f: &CnfFormula, projection: &[u32]) -> Vec<Model> {
    let mut projection = projection.to_vec();
    projection.sort_unstable();
    projection.dedup();
    assert!(
        projection.iter().all(|&v| v >= 1 && v <= f.num_vars()),
        "projection variables must lie in 1..=num_vars"
    );
    let Some(mut s) = Solver::new(f) else {
        return Vec::new();
    };
    let mut eligible = vec![true; s.num_vars + 1];
    for &v in &projection {
        eligible[v as usize] = false;
    }
    if !s.eliminate_pure(&eligible) {
        return Vec::new();
    }
    let mut models = Vec::new();
    while s.search() {
        models.push(s.model());
        if projection.is_empty() || !s.block(&projection) {
            break;
        }
    }
    models
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn lits(xs: &[i32]) -> Vec<Literal> {
        xs.iter()
            .map(|&x| Literal::from_dimacs(x).unwrap())
            .collect()
    }

    fn formula(num_vars: u32, clauses: &[&[i32]]) -> CnfFormula {
        let mut f = CnfFormula::new(num_vars);
        for c in clauses {
            f.add_clause(lits(c)).unwrap();
        }
        f
    }

    #[test]
    fn unit_chain() {
        let f = formula(2, &[&[1], &[-1, 2]]);
        let m = solve(&f).unwrap();
        assert!(m.value(1) && m.value(2));
    }

    #[test]
    fn contradiction() {
        let f = formula(1, &[&[1], &[-1]]);
        assert_eq!(solve(&f), None);
        assert!(solve_all(&f, &[1]).is_empty());
    }

    #[test]
    fn empty_formula_enumerates_everything() {
        let f = CnfFormula::new(4);
        assert_eq!(solve_all(&f, &[1, 2, 3]).len(), 8);
        assert_eq!(solve_all(&f, &[]).len(), 1);
        assert_eq!(solve_all(&CnfFormula::new(0), &[]).len(), 1);
    }

    #[test]
    fn projection_hides_auxiliaries() {
        // x3 is free whenever x1 or x2 holds; counting over {1,2} must ignore it.
        let f = formula(3, &[&[1, 2, 3], &[1, 2, -3]]);
        let models = solve_all(&f, &[1, 2]);
        assert_eq!(models.len(), 3);
        let proj: HashSet<_> = models.iter().map(|m| m.project(&[1, 2])).collect();
        assert_eq!(proj.len(), 3);
        assert!(models.iter().all(|m| f.is_satisfied_by(m)));
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // p_{i,h}: pigeon i in hole h -> var 2*i + h + 1
        let v = |i: i32, h: i32| 2 * i + h + 1;
        let mut cl: Vec<Vec<i32>> = (0..3).map(|i| vec![v(i, 0), v(i, 1)]).collect();
        for h in 0..2 {
            for i in 0..3 {
                for j in i + 1..3 {
                    cl.push(vec![-v(i, h), -v(j, h)]);
                }
            }
        }
        let refs: Vec<&[i32]> = cl.iter().map(|c| c.as_slice()).collect();
        assert_eq!(solve(&formula(6, &refs)), None);
    }

    #[test]
    fn deterministic_order() {
        let f = formula(3, &[&[1, 2], &[2, 3]]);
        let a = solve_all(&f, &[1, 2, 3]);
        let b = solve_all(&f, &[1, 2, 3]);
        assert_eq!(a, b);
        // false-first branching on the lowest variable
        assert_eq!(a[0].project(&[1, 2, 3]), vec![false, true, false]);
        assert_eq!(a.len(), 5);
    }
}

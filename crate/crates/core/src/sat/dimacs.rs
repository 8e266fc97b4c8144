use std::fmt::Write;

use super::{Clause, CnfFormula, Literal, SatError};

/// Standard DIMACS CNF text: a `p cnf` header and one zero-terminated
/// clause per line.
pub fn to_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for c in f.clauses() {
        for l in c.literals() {
            write!(out, "{} ", l.to_dimacs()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF. Comment lines (`c ...`) are skipped, clauses may span
/// lines, and a `%` line ends the input. Tautological clauses are dropped.
pub fn from_dimacs(text: &str) -> Result<CnfFormula, SatError> {
    let err = |line: usize, reason: String| SatError::Dimacs { line, reason };
    let mut header: Option<(u32, usize)> = None;
    let mut formula = CnfFormula::default();
    let mut pending: Vec<Literal> = Vec::new();
    let mut pending_line = 0;
    let mut seen = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err(line_no, "duplicate problem line".into()));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", v, c] => v.parse::<u32>().ok().zip(c.parse::<usize>().ok()),
                _ => None,
            };
            let (v, c) = parsed.ok_or_else(|| {
                err(
                    line_no,
                    format!("malformed header `{line}`, expected `p cnf <vars> <clauses>`"),
                )
            })?;
            header = Some((v, c));
            formula = CnfFormula::new(v);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(err(line_no, "clause before the `p cnf` header".into()));
        };
        for tok in line.split_whitespace() {
            let x: i32 = tok
                .parse()
                .map_err(|_| err(line_no, format!("`{tok}` is not an integer literal")))?;
            if pending.is_empty() {
                pending_line = line_no;
            }
            match Literal::from_dimacs(x) {
                None if x == 0 => {
                    seen += 1;
                    match Clause::new(pending.drain(..)) {
                        Ok(Some(c)) => formula.clauses.push(c),
                        Ok(None) => {}
                        Err(e) => return Err(err(line_no, e.to_string())),
                    }
                }
                Some(l) if l.var() <= num_vars => pending.push(l),
                _ => {
                    return Err(err(
                        line_no,
                        format!("literal {x} outside the declared {num_vars} variables"),
                    ))
                }
            }
        }
    }

    let Some((_, declared)) = header else {
        return Err(err(0, "missing `p cnf` header".into()));
    };
    if !pending.is_empty() {
        return Err(err(
            pending_line,
            "clause is missing its terminating 0".into(),
        ));
    }
    if seen != declared {
        return Err(err(
            0,
            format!("header declares {declared} clauses, found {seen}"),
        ));
    }
    Ok(formula)
}

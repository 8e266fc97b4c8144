//! Ramsey graph search by generate–test–reduce and by constrain–generate–reduce.
//!
//! Colour convention: an edge is colour 1 and a non-edge colour 0. A graph is
//! an `(s, t; n)` Ramsey colouring when no `s` vertices are pairwise
//! non-adjacent (no independent `s`-set) and no `t` vertices are pairwise
//! adjacent (no `t`-clique).

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::canon::{canonical_form, CanonError};
use crate::enumerate::{generate, EnumError, ExtendOptions, StepStats};
use crate::graph::{k_subsets, Graph, GraphError};
use crate::sat::{solve_all, CnfFormula, Literal, Model};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamseyError {
    #[error("invalid Ramsey instance: s and t must be at least 1 (got s = {s}, t = {t})")]
    InvalidInstance { s: usize, t: usize },
    #[error("instance is for {expected} vertices but the graph has {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RamseyInstance {
    /// Forbidden independent-set size.
    pub s: usize,
    /// Forbidden clique size.
    pub t: usize,
    pub n: usize,
}

impl RamseyInstance {
    pub fn new(s: usize, t: usize, n: usize) -> Result<Self, RamseyError> {
        if s == 0 || t == 0 {
            return Err(RamseyError::InvalidInstance { s, t });
        }
        Ok(RamseyInstance { s, t, n })
    }
}

/// Whether some `k` vertices are pairwise adjacent in the graph given by
/// `rows`, searching subsets of `cand` in lexicographic order and cutting
/// off every prefix that is already not a clique.
fn has_clique(rows: &[u64], k: usize, cand: u64) -> bool {
    if k == 0 {
        return true;
    }
    let mut cand = cand;
    while cand.count_ones() as usize >= k {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if has_clique(rows, k - 1, cand & rows[v]) {
            return true;
        }
    }
    false
}

fn is_ramsey_graph(s: usize, t: usize, g: &Graph) -> bool {
    let n = g.n();
    let all = crate::graph::low_mask(n);
    let comp: Vec<u64> = (0..n).map(|v| !g.row(v) & all & !(1u64 << v)).collect();
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)).collect();
    !has_clique(&comp, s, all) && !has_clique(&rows, t, all)
}

/// True iff `g` has neither an independent set of size `s` nor a clique of
/// size `t`.
pub fn is_ramsey(inst: &RamseyInstance, g: &Graph) -> Result<bool, RamseyError> {
    if g.n() != inst.n {
        return Err(RamseyError::SizeMismatch {
            expected: inst.n,
            found: g.n(),
        });
    }
    Ok(is_ramsey_graph(inst.s, inst.t, g))
}

/// The same test as [`is_ramsey`], by checking every `s`- and `t`-subset
/// one at a time.
pub fn is_ramsey_by_subsets(inst: &RamseyInstance, g: &Graph) -> Result<bool, RamseyError> {
    if g.n() != inst.n {
        return Err(RamseyError::SizeMismatch {
            expected: inst.n,
            found: g.n(),
        });
    }
    let mono = |vs: &[usize], color: bool| {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b) == color))
    };
    Ok(!k_subsets(g.n(), inst.s).any(|vs| mono(&vs, false))
        && !k_subsets(g.n(), inst.t).any(|vs| mono(&vs, true)))
}

/// Toggles for the generate–test–reduce loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GtOptions {
    /// Keep only Ramsey colourings at every intermediate size.
    pub filter: bool,
    /// Reduce each step to canonical representatives.
    pub canonize: bool,
    pub parallel: bool,
}

impl Default for GtOptions {
    fn default() -> Self {
        GtOptions {
            filter: true,
            canonize: true,
            parallel: false,
        }
    }
}

/// All non-isomorphic `(s, t; n)` colourings, grown one vertex at a time
/// from the empty graph. Filtering at intermediate sizes is sound because
/// every induced subgraph of a Ramsey colouring is one too.
pub fn gen_ramsey_gt(inst: &RamseyInstance) -> Result<Vec<Graph>, RamseyError> {
    gen_ramsey_gt_with(inst, GtOptions::default(), |_| {})
}

pub fn gen_ramsey_gt_with<S>(
    inst: &RamseyInstance,
    opts: GtOptions,
    on_step: S,
) -> Result<Vec<Graph>, RamseyError>
where
    S: FnMut(&StepStats),
{
    let (s, t) = (inst.s, inst.t);
    let ext = ExtendOptions {
        canonize: opts.canonize,
        strict: false,
        parallel: opts.parallel,
    };
    let keep = move |g: &Graph| !opts.filter || is_ramsey_graph(s, t, g);
    Ok(generate(inst.n, keep, ext, on_step)?)
}

/// CNF variable for each unordered vertex pair, numbered row by row:
/// `(0,1) -> 1, (0,2) -> 2, ..., (1,2) -> n`, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeVarMap {
    n: usize,
    ids: Vec<u32>,
}

impl EdgeVarMap {
    pub fn new(n: usize) -> Self {
        let mut ids = vec![0; n * n];
        let mut next = 1;
        for u in 0..n {
            for v in u + 1..n {
                ids[u * n + v] = next;
                ids[v * n + u] = next;
                next += 1;
            }
        }
        EdgeVarMap { n, ids }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Variable of the pair `{u, v}`; `None` on the diagonal.
    pub fn var(&self, u: usize, v: usize) -> Option<u32> {
        (u != v).then(|| self.ids[u * self.n + v])
    }

    pub fn num_edge_vars(&self) -> u32 {
        (self.n * self.n.saturating_sub(1) / 2) as u32
    }

    /// All edge variables, in increasing order.
    pub fn projection(&self) -> Vec<u32> {
        (1..=self.num_edge_vars()).collect()
    }

    /// The graph whose edges are the pairs set to true in `model`.
    pub fn decode(&self, model: &Model) -> Graph {
        let mut g = Graph::empty(self.n).expect("map size already validated");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if model.value(self.ids[u * self.n + v]) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }
}

/// Constrains `xs <=lex ys` (false < true) with one auxiliary variable per
/// position that holds exactly when the prefixes before the next position
/// are equal.
fn lex_leq(f: &mut CnfFormula, xs: &[u32], ys: &[u32]) {
    let mut eq: Option<u32> = None;
    for (k, (&x, &y)) in xs.iter().zip(ys).enumerate() {
        let guard = eq.map(Literal::neg);
        f.add_clause(guard.into_iter().chain([Literal::neg(x), Literal::pos(y)]))
            .expect("variables are allocated");
        if k + 1 == xs.len() {
            break;
        }
        let e = f.new_var();
        let clauses: [Vec<Literal>; 4] = [
            eq.map(|q| vec![Literal::neg(e), Literal::pos(q)])
                .unwrap_or_default(),
            vec![Literal::neg(e), Literal::pos(x), Literal::neg(y)],
            guard
                .into_iter()
                .chain([Literal::neg(x), Literal::neg(y), Literal::pos(e)])
                .collect(),
            guard
                .into_iter()
                .chain([Literal::pos(x), Literal::pos(y), Literal::pos(e)])
                .collect(),
        ];
        for c in clauses.into_iter().filter(|c| !c.is_empty()) {
            f.add_clause(c).expect("variables are allocated");
        }
        eq = Some(e);
    }
}

/// CNF whose models are exactly the labeled `(s, t; n)` colourings with
/// rows in pairwise lexicographic order.
///
/// Clause order: for every pair of rows `i < j`, `row_i <=lex row_j` with
/// columns `i` and `j` removed; then one clause per `s`-subset demanding an
/// edge; then one per `t`-subset demanding a non-edge.
pub fn encode_ramsey(inst: &RamseyInstance) -> Result<(EdgeVarMap, CnfFormula), RamseyError> {
    let n = inst.n;
    Graph::empty(n)?;
    let map = EdgeVarMap::new(n);
    let mut f = CnfFormula::new(map.num_edge_vars());

    for i in 0..n {
        for j in i + 1..n {
            let others = (0..n).filter(|&k| k != i && k != j);
            let xs: Vec<u32> = others.clone().map(|k| map.var(i, k).unwrap()).collect();
            let ys: Vec<u32> = others.map(|k| map.var(j, k).unwrap()).collect();
            lex_leq(&mut f, &xs, &ys);
        }
    }

    let mut contradiction = false;
    for (size, positive) in [(inst.s, true), (inst.t, false)] {
        for vs in k_subsets(n, size) {
            let lits: Vec<Literal> = pairs(&vs)
                .map(|(a, b)| Literal::new(map.var(a, b).unwrap(), positive))
                .collect();
            if lits.is_empty() {
                // A subset of size <= 1 is trivially monochromatic.
                contradiction = true;
            } else {
                f.add_clause(lits).expect("edge variables are allocated");
            }
        }
    }
    if contradiction {
        let z = f.new_var();
        f.add_clause([Literal::pos(z)]).unwrap();
        f.add_clause([Literal::neg(z)]).unwrap();
    }
    Ok((map, f))
}

fn pairs(vs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
}

/// Counts and timings of one constrain–generate–reduce run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CgStats {
    /// Models found by the solver (one per distinct edge assignment).
    pub models: usize,
    pub classes: usize,
    pub elapsed: Duration,
    pub canon: Duration,
}

/// Encode, enumerate all models projected on the edge variables, decode,
/// canonize and deduplicate.
pub fn gen_ramsey_cg(inst: &RamseyInstance) -> Result<Vec<Graph>, RamseyError> {
    gen_ramsey_cg_stats(inst).map(|(graphs, _)| graphs)
}

pub fn gen_ramsey_cg_stats(inst: &RamseyInstance) -> Result<(Vec<Graph>, CgStats), RamseyError> {
    let start = Instant::now();
    let (map, cnf) = encode_ramsey(inst)?;
    let models = solve_all(&cnf, &map.projection());
    let mut canon = Duration::ZERO;
    let mut graphs = Vec::with_capacity(models.len());
    for m in &models {
        let g = map.decode(m);
        debug_assert!(is_ramsey_graph(inst.s, inst.t, &g));
        let t = Instant::now();
        graphs.push(canonical_form(inst.n, &g)?);
        canon += t.elapsed();
    }
    graphs.sort_unstable();
    graphs.dedup();
    let stats = CgStats {
        models: models.len(),
        classes: graphs.len(),
        elapsed: start.elapsed(),
        canon,
    };
    Ok((graphs, stats))
}

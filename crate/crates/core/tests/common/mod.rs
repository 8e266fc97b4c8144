//! Brute-force reference implementations used by the integration tests.
//! None of them share code with the library beyond the `Graph` container.

#![allow(dead_code)]

use isoforge::graph::Graph;
use isoforge::sat::{CnfFormula, Literal};
use itertools::Itertools;
use rand::Rng;

/// The twelve labelings of the 5-cycle used throughout the tests.
pub const C5_ATOMS: [&str; 12] = [
    "DRo", "Dbg", "DdW", "DLo", "D[S", "DpS", "DYc", "DqK", "DMg", "DkK", "Dhc", "DUW",
];

/// Adjacency matrices of [`C5_ATOMS`], in the same order.
pub const C5_MATRICES: [[[u8; 5]; 5]; 12] = [
    [
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
        [1, 0, 0, 1, 0],
        [0, 1, 1, 0, 0],
        [1, 1, 0, 0, 0],
    ],
    [
        [0, 1, 0, 0, 1],
        [1, 0, 0, 1, 0],
        [0, 0, 0, 1, 1],
        [0, 1, 1, 0, 0],
        [1, 0, 1, 0, 0],
    ],
    [
        [0, 1, 0, 1, 0],
        [1, 0, 0, 0, 1],
        [0, 0, 0, 1, 1],
        [1, 0, 1, 0, 0],
        [0, 1, 1, 0, 0],
    ],
    [
        [0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1],
        [0, 1, 0, 1, 0],
        [1, 0, 1, 0, 0],
        [1, 1, 0, 0, 0],
    ],
    [
        [0, 0, 1, 1, 0],
        [0, 0, 1, 0, 1],
        [1, 1, 0, 0, 0],
        [1, 0, 0, 0, 1],
        [0, 1, 0, 1, 0],
    ],
    [
        [0, 1, 1, 0, 0],
        [1, 0, 0, 0, 1],
        [1, 0, 0, 1, 0],
        [0, 0, 1, 0, 1],
        [0, 1, 0, 1, 0],
    ],
    [
        [0, 0, 1, 0, 1],
        [0, 0, 1, 1, 0],
        [1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1],
        [1, 0, 0, 1, 0],
    ],
    [
        [0, 1, 1, 0, 0],
        [1, 0, 0, 1, 0],
        [1, 0, 0, 0, 1],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 1, 0],
    ],
    [
        [0, 0, 0, 1, 1],
        [0, 0, 1, 1, 0],
        [0, 1, 0, 0, 1],
        [1, 1, 0, 0, 0],
        [1, 0, 1, 0, 0],
    ],
    [
        [0, 1, 0, 1, 0],
        [1, 0, 1, 0, 0],
        [0, 1, 0, 0, 1],
        [1, 0, 0, 0, 1],
        [0, 0, 1, 1, 0],
    ],
    [
        [0, 1, 0, 0, 1],
        [1, 0, 1, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1],
        [1, 0, 0, 1, 0],
    ],
    [
        [0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1],
        [1, 0, 0, 0, 1],
        [1, 1, 0, 0, 0],
        [0, 1, 1, 0, 0],
    ],
];

pub fn matrix_graph<R: AsRef<[u8]>>(rows: &[R]) -> Graph {
    Graph::from_adj_matrix(rows).unwrap()
}

/// Graph on `n` vertices whose upper-triangle pairs, in row-major order,
/// are the bits of `code` from least significant up.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |c| graph_from_code(n, c))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// `r[p[u]][p[v]] = g[u][v]`.
pub fn relabel(g: &Graph, p: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (p[u], p[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

fn maps_onto(g1: &Graph, g2: &Graph, p: &[usize]) -> bool {
    let n = g1.n();
    (0..n).all(|u| (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(p[u], p[v])))
}

/// Searches all n! bijections for one carrying `g1` onto `g2`.
pub fn brute_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    (0..g1.n())
        .permutations(g1.n())
        .find(|p| maps_onto(g1, g2, p))
}

/// As [`brute_isomorphism`], restricted to bijections with
/// `colors[p[v]] == colors[v]`.
pub fn brute_colored_isomorphism(g1: &Graph, g2: &Graph, colors: &[usize]) -> Option<Vec<usize>> {
    (0..g1.n())
        .permutations(g1.n())
        .filter(|p| (0..p.len()).all(|v| colors[p[v]] == colors[v]))
        .find(|p| maps_onto(g1, g2, p))
}

pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .permutations(g.n())
        .filter(|p| maps_onto(g, g, p))
        .collect()
}

/// `orbit[v]` is the least vertex reachable from `v` by an automorphism.
pub fn brute_orbits(g: &Graph) -> Vec<usize> {
    let autos = brute_automorphisms(g);
    (0..g.n())
        .map(|v| autos.iter().map(|a| a[v]).min().unwrap())
        .collect()
}

/// Independent graph6 encoder: pairs in column order (0,1), (0,2), (1,2),
/// (0,3), ... as a bit string, padded to a multiple of six, offset by 63.
pub fn oracle_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits: Vec<bool> = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let x = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push((x + 63) as char);
    }
    out
}

/// Projected model count by enumerating all 2^v assignments.
/// Returns `(satisfiable, number of distinct projections of models)`.
pub fn truth_table(f: &CnfFormula, projection: &[u32]) -> (bool, usize) {
    let v = f.num_vars();
    assert!(v <= 20);
    let mut seen = std::collections::HashSet::new();
    let mut sat = false;
    for bits in 0u32..1 << v {
        let value = |x: u32| bits >> (x - 1) & 1 == 1;
        let ok = f.clauses().iter().all(|c| {
            c.literals()
                .iter()
                .any(|l: &Literal| value(l.var()) == l.is_positive())
        });
        if ok {
            sat = true;
            seen.insert(projection.iter().map(|&x| value(x)).collect::<Vec<_>>());
        }
    }
    (sat, seen.len())
}

pub fn random_formula<R: Rng>(rng: &mut R, max_vars: u32) -> CnfFormula {
    let vars = rng.gen_range(1..=max_vars);
    let clauses = rng.gen_range(0..=4 * vars as usize);
    let mut f = CnfFormula::new(vars);
    for _ in 0..clauses {
        let width = rng.gen_range(1..=3.min(vars as usize));
        let lits: Vec<Literal> = (0..width)
            .map(|_| Literal::new(rng.gen_range(1..=vars), rng.gen_bool(0.5)))
            .collect();
        f.add_clause(lits).unwrap();
    }
    f
}

/// Ramsey test by listing every s- and t-subset.
pub fn brute_is_ramsey(s: usize, t: usize, g: &Graph) -> bool {
    let mono = |vs: &[usize], color: bool| {
        vs.iter()
            .tuple_combinations()
            .all(|(&a, &b)| g.has_edge(a, b) == color)
    };
    !(0..g.n()).combinations(s).any(|vs| mono(&vs, false))
        && !(0..g.n()).combinations(t).any(|vs| mono(&vs, true))
}

//! Dense simple graphs, vertex permutations and ordered partitions.
//!
//! A [`Graph`] stores one `u64` bit-row per vertex, so the hard ceiling is
//! [`MAX_VERTICES`]. A lower run-time cap can be set through the
//! `ISOFORGE_VERTEX_CAP` environment variable; inputs beyond the cap are
//! rejected rather than truncated.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph6::{self, Graph6Error};

/// Width of a bit-row.
pub const MAX_VERTICES: usize = 64;

/// Environment variable that lowers the vertex cap below [`MAX_VERTICES`].
pub const VERTEX_CAP_ENV: &str = "ISOFORGE_VERTEX_CAP";

/// The effective vertex cap for this process.
pub fn vertex_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(VERTEX_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map(|c| c.min(MAX_VERTICES))
            .unwrap_or(MAX_VERTICES)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{n} vertices exceeds the vertex cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}; only simple graphs are supported")]
    SelfLoop(usize),
    #[error("directed input: ({0}, {1}) present without ({1}, {0})")]
    Asymmetric(usize, usize),
    #[error("expected {expected} vertices, found {found}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("malformed {format} value: {reason}")]
    Malformed { format: GraphFormat, reason: String },
    #[error("expected a {expected} value, got {found}")]
    FormatMismatch {
        expected: GraphFormat,
        found: GraphFormat,
    },
    #[error("permutation of length {perm} does not match {n} vertices")]
    LengthMismatch { perm: usize, n: usize },
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

#[inline]
pub(crate) const fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn check_cap(n: usize) -> Result<(), GraphError> {
    let cap = vertex_cap();
    if n > cap {
        return Err(GraphError::TooManyVertices { n, cap });
    }
    Ok(())
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_cap(n)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.rows[v] = low_mask(n) & !(1u64 << v);
        }
        Ok(g)
    }

    /// The cycle 0-1-...-(n-1)-0. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Builds a graph from unordered vertex pairs. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from a square 0/1 matrix.
    pub fn from_adj_matrix<R: AsRef<[u8]>>(matrix: &[R]) -> Result<Self, GraphError> {
        let n = matrix.len();
        let mut g = Graph::empty(n)?;
        for (u, row) in matrix.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(GraphError::Malformed {
                    format: GraphFormat::AdjMatrix,
                    reason: format!("row {u} has {} entries, expected {n}", row.len()),
                });
            }
            for (v, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if u == v => return Err(GraphError::SelfLoop(u)),
                    1 => g.rows[u] |= 1u64 << v,
                    other => {
                        return Err(GraphError::Malformed {
                            format: GraphFormat::AdjMatrix,
                            reason: format!("entry ({u}, {v}) is {other}, expected 0 or 1"),
                        })
                    }
                }
            }
        }
        g.check_symmetric()?;
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbour lists. Lists may be unsorted
    /// and contain repeats, but must describe a symmetric relation.
    pub fn from_adj_list<L: AsRef<[usize]>>(lists: &[L]) -> Result<Self, GraphError> {
        let n = lists.len();
        let mut g = Graph::empty(n)?;
        for (u, nbrs) in lists.iter().enumerate() {
            for &v in nbrs.as_ref() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                g.rows[u] |= 1u64 << v;
            }
        }
        g.check_symmetric()?;
        Ok(g)
    }

    fn check_symmetric(&self) -> Result<(), GraphError> {
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if self.rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if present {
            self.rows[u] |= 1u64 << v;
            self.rows[v] |= 1u64 << u;
        } else {
            self.rows[u] &= !(1u64 << v);
            self.rows[v] &= !(1u64 << u);
        }
    }

    pub fn to_adj_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as u8).collect())
            .collect()
    }

    pub fn to_adj_list(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|u| self.neighbors(u).collect()).collect()
    }

    pub fn to_edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        Graph {
            n: self.n,
            rows: (0..self.n)
                .map(|v| !self.rows[v] & full & !(1u64 << v))
                .collect(),
        }
    }

    /// The subgraph induced on every vertex except `v`; later vertices shift
    /// down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex {v} out of range");
        let keep_low = low_mask(v);
        let rows = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let r = self.rows[u];
                (r & keep_low) | ((r >> 1) & !keep_low)
            })
            .collect();
        Graph {
            n: self.n - 1,
            rows,
        }
    }

    /// Relabels vertex `u` as `p[u]`: the result has an edge `{p[u], p[v]}`
    /// exactly when this graph has the edge `{u, v}`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Graph, GraphError> {
        if p.len() != self.n {
            return Err(GraphError::LengthMismatch {
                perm: p.len(),
                n: self.n,
            });
        }
        Ok(self.permuted(p.as_slice()))
    }

    /// Unchecked relabeling used on hot paths; `map` must be a bijection on `0..n`.
    pub(crate) fn permuted(&self, map: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (u, &pu) in map.iter().enumerate() {
            let mut r = 0u64;
            for v in BitIter(self.rows[u]) {
                r |= 1u64 << map[v];
            }
            rows[pu] = r;
        }
        Graph { n: self.n, rows }
    }

    /// Compares by vertex count, then by the upper-triangle bit string in
    /// graph6 column order `(0,1),(0,2),(1,2),(0,3),...` read as a binary
    /// number. For graphs that graph6 can encode this is the same order as
    /// comparing their encodings.
    pub fn cmp_upper_triangle(&self, other: &Graph) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| cmp_columns(&self.rows, &other.rows))
    }
}

/// Column-order comparison of two row sets of equal length.
pub(crate) fn cmp_columns(a: &[u64], b: &[u64]) -> Ordering {
    for j in 1..a.len() {
        let m = low_mask(j);
        let x = (a[j] & m) ^ (b[j] & m);
        if x != 0 {
            // The lowest differing row index is the most significant bit.
            let k = x.trailing_zeros();
            return if a[j] >> k & 1 == 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
    }
    Ordering::Equal
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_upper_triangle(other)
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.to_edge_list())
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// A bijection on `0..n` in one-line notation: `p[u]` is the image of `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self, GraphError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n {
                return Err(GraphError::NotPermutation(format!(
                    "value {x} out of range 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(GraphError::NotPermutation(format!("value {x} repeated")));
            }
        }
        Ok(Permutation(map))
    }

    /// Builds from the 1-based notation printed by the command line tool.
    pub fn from_one_based(map: &[usize]) -> Result<Self, GraphError> {
        let zero = map
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or_else(|| GraphError::NotPermutation("0 in 1-based notation".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(zero)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub(crate) fn from_vec_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(map.clone()).is_ok());
        Permutation(map)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (u, &pu) in self.0.iter().enumerate() {
            inv[pu] = u;
        }
        Permutation(inv)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Result<Permutation, GraphError> {
        if self.len() != first.len() {
            return Err(GraphError::LengthMismatch {
                perm: first.len(),
                n: self.len(),
            });
        }
        Ok(Permutation(first.0.iter().map(|&x| self.0[x]).collect()))
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }
}

impl std::ops::Index<usize> for Permutation {
    type Output = usize;

    fn index(&self, u: usize) -> &usize {
        &self.0[u]
    }
}

/// An ordered sequence of non-empty, disjoint cells covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    /// Validates the cells; vertices inside a cell are stored sorted.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = vec![false; n];
        let mut cells = cells;
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(GraphError::InvalidPartition("empty cell".into()));
            }
            for &v in cell.iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
            }
            cell.sort_unstable();
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(OrderedPartition { n, cells })
    }

    /// The single-cell partition of `0..n` (no cells when `n == 0`).
    pub fn unit(n: usize) -> Self {
        let cells = if n == 0 {
            vec![]
        } else {
            vec![(0..n).collect()]
        };
        OrderedPartition { n, cells }
    }

    /// One cell per distinct colour, ordered by colour value.
    pub fn from_colors(colors: &[usize]) -> Self {
        let mut distinct: Vec<usize> = colors.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let cells = distinct
            .iter()
            .map(|&c| (0..colors.len()).filter(|&v| colors[v] == c).collect())
            .collect();
        OrderedPartition {
            n: colors.len(),
            cells,
        }
    }

    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<Vec<usize>>) -> Self {
        OrderedPartition { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.n
    }

    /// Index of the cell holding each vertex.
    pub fn cell_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v] = i;
            }
        }
        idx
    }
}

/// The four interchange representations accepted by [`graph_convert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    AdjMatrix,
    AdjList,
    EdgeList,
    Graph6Atom,
}

impl GraphFormat {
    pub const ALL: [GraphFormat; 4] = [
        GraphFormat::AdjMatrix,
        GraphFormat::AdjList,
        GraphFormat::EdgeList,
        GraphFormat::Graph6Atom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::AdjMatrix => "adj_matrix",
            GraphFormat::AdjList => "adj_list",
            GraphFormat::EdgeList => "edge_list",
            GraphFormat::Graph6Atom => "graph6_atom",
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.replace('-', "_").as_str() {
            "adj_matrix" | "matrix" => Ok(GraphFormat::AdjMatrix),
            "adj_list" => Ok(GraphFormat::AdjList),
            "edge_list" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6_atom" | "graph6" | "g6" => Ok(GraphFormat::Graph6Atom),
            _ => Err(format!(
                "unknown graph format `{s}` (expected adj-matrix, adj-list, edge-list or graph6)"
            )),
        }
    }
}

/// A graph held in one of the [`GraphFormat`] representations.
///
/// The textual form of the list formats is a JSON nested list on one line,
/// e.g. `[[0,1],[1,0]]` for a matrix and `[[0,1]]` for an edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphValue {
    AdjMatrix(Vec<Vec<u8>>),
    AdjList(Vec<Vec<usize>>),
    EdgeList(Vec<(usize, usize)>),
    Graph6(String),
}

impl GraphValue {
    pub fn format(&self) -> GraphFormat {
        match self {
            GraphValue::AdjMatrix(_) => GraphFormat::AdjMatrix,
            GraphValue::AdjList(_) => GraphFormat::AdjList,
            GraphValue::EdgeList(_) => GraphFormat::EdgeList,
            GraphValue::Graph6(_) => GraphFormat::Graph6Atom,
        }
    }

    /// Interprets the value as a graph on `n` vertices.
    pub fn to_graph(&self, n: usize) -> Result<Graph, GraphError> {
        let g = match self {
            GraphValue::AdjMatrix(m) => Graph::from_adj_matrix(m)?,
            GraphValue::AdjList(l) => Graph::from_adj_list(l)?,
            GraphValue::EdgeList(e) => return Graph::from_edges(n, e),
            GraphValue::Graph6(s) => graph6::decode_graph6(s)?,
        };
        if g.n() != n {
            return Err(GraphError::VertexCountMismatch {
                expected: n,
                found: g.n(),
            });
        }
        Ok(g)
    }

    /// Renders `g` in the normalised form of `format`.
    pub fn from_graph(g: &Graph, format: GraphFormat) -> Result<GraphValue, GraphError> {
        Ok(match format {
            GraphFormat::AdjMatrix => GraphValue::AdjMatrix(g.to_adj_matrix()),
            GraphFormat::AdjList => GraphValue::AdjList(g.to_adj_list()),
            GraphFormat::EdgeList => GraphValue::EdgeList(g.to_edge_list()),
            GraphFormat::Graph6Atom => GraphValue::Graph6(graph6::encode_graph6(g)?),
        })
    }

    /// Parses one line of text in the given format.
    pub fn parse(format: GraphFormat, text: &str) -> Result<GraphValue, GraphError> {
        let text = text.trim();
        let malformed = |e: serde_json::Error| GraphError::Malformed {
            format,
            reason: e.to_string(),
        };
        Ok(match format {
            GraphFormat::AdjMatrix => {
                GraphValue::AdjMatrix(serde_json::from_str(text).map_err(malformed)?)
            }
            GraphFormat::AdjList => {
                GraphValue::AdjList(serde_json::from_str(text).map_err(malformed)?)
            }
            GraphFormat::EdgeList => {
                let pairs: Vec<[usize; 2]> = serde_json::from_str(text).map_err(malformed)?;
                GraphValue::EdgeList(pairs.into_iter().map(|[u, v]| (u, v)).collect())
            }
            GraphFormat::Graph6Atom => GraphValue::Graph6(text.to_string()),
        })
    }
}

impl fmt::Display for GraphValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
            f.write_str("[")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")
        }
        fn nested<T: fmt::Display>(f: &mut fmt::Formatter<'_>, rows: &[Vec<T>]) -> fmt::Result {
            f.write_str("[")?;
            for (i, r) in rows.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                list(f, r)?;
            }
            f.write_str("]")
        }
        match self {
            GraphValue::AdjMatrix(m) => nested(f, m),
            GraphValue::AdjList(l) => nested(f, l),
            GraphValue::EdgeList(e) => {
                let rows: Vec<Vec<usize>> = e.iter().map(|&(u, v)| vec![u, v]).collect();
                nested(f, &rows)
            }
            GraphValue::Graph6(s) => f.write_str(s),
        }
    }
}

/// Converts `value`, a graph on `n` vertices in format `from`, to format `to`.
pub fn graph_convert(
    n: usize,
    from: GraphFormat,
    to: GraphFormat,
    value: &GraphValue,
) -> Result<GraphValue, GraphError> {
    if value.format() != from {
        return Err(GraphError::FormatMismatch {
            expected: from,
            found: value.format(),
        });
    }
    GraphValue::from_graph(&value.to_graph(n)?, to)
}

/// All one-vertex extensions of `g`: the new vertex is appended as vertex
/// `n`, and the `k`-th graph connects it to the vertices whose bits are set in
/// `k`, for `k` in `0..2^n`.
pub fn extensions(g: &Graph) -> Result<Extensions<'_>, GraphError> {
    check_cap(g.n + 1)?;
    Ok(Extensions {
        base: g,
        next: 0,
        end: 1u128 << g.n,
    })
}

pub struct Extensions<'a> {
    base: &'a Graph,
    next: u128,
    end: u128,
}

impl Iterator for Extensions<'_> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next as u64;
        self.next += 1;
        let n = self.base.n;
        let mut rows = Vec::with_capacity(n + 1);
        rows.extend(
            self.base
                .rows
                .iter()
                .enumerate()
                .map(|(u, &r)| r | ((mask >> u & 1) << n)),
        );
        rows.push(mask);
        Some(Graph { n: n + 1, rows })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order. Yields nothing
/// when `k > n`.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    KSubsets {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut succ = out.clone();
        // Rightmost position that can still advance.
        if let Some(i) = (0..k).rev().find(|&i| succ[i] < self.n - k + i) {
            succ[i] += 1;
            for j in i + 1..k {
                succ[j] = succ[j - 1] + 1;
            }
            self.current = Some(succ);
        }
        Some(out)
    }
}

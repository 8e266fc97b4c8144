//! Canonical labeling by individualization–refinement.
//!
//! The search tree starts from the coarsest equitable refinement of the
//! input colouring. Each internal node individualizes one vertex of its
//! target cell (the first smallest non-singleton cell) and refines again;
//! leaves are discrete partitions, i.e. relabelings of the graph. The
//! canonical form is the relabeled graph whose upper-triangle bit string is
//! smallest over all leaves.
//!
//! Two leaves that produce the same relabeled graph yield an automorphism.
//! Automorphisms prune the tree in two ways: after one is found the search
//! jumps back to the node where the two leaf paths diverge, and at every node
//! a candidate is skipped when some already-explored sibling lies in the same
//! orbit of the automorphisms found so far that fix the node's path.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::{Graph, GraphError, GraphFormat, GraphValue, OrderedPartition, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("colouring covers {coloring} vertices but the graph has {n}")]
    ColoringSize { coloring: usize, n: usize },
    #[error("expected a graph on {expected} vertices, got {found}")]
    VertexCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Options shared by the canonization entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonOptions {
    pub input_format: GraphFormat,
    pub output_format: GraphFormat,
    /// Restricts relabelings to those that keep every vertex inside the
    /// positions of its colour cell.
    pub initial_coloring: Option<OrderedPartition>,
}

impl Default for CanonOptions {
    fn default() -> Self {
        CanonOptions {
            input_format: GraphFormat::AdjMatrix,
            output_format: GraphFormat::AdjMatrix,
            initial_coloring: None,
        }
    }
}

impl CanonOptions {
    pub fn with_coloring(coloring: OrderedPartition) -> Self {
        CanonOptions {
            initial_coloring: Some(coloring),
            ..Default::default()
        }
    }
}

/// Everything a canonization run produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalResult {
    /// `labeling[i]` is the input vertex placed at canonical position `i`.
    pub labeling: Permutation,
    /// The inverse of `labeling`: input vertex `u` moves to position
    /// `permutation[u]`, so `canonic = input.apply_permutation(permutation)`.
    pub permutation: Permutation,
    /// Equitable partition at the root of the search tree.
    pub partition: OrderedPartition,
    /// `orbits[v]` is the least vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
    pub canonic: Graph,
    /// Number of automorphisms discovered during the search.
    pub generators: usize,
}

impl CanonicalResult {
    pub fn canonic_as(&self, format: GraphFormat) -> Result<GraphValue, GraphError> {
        GraphValue::from_graph(&self.canonic, format)
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits
            .iter()
            .enumerate()
            .filter(|&(v, &r)| v == r)
            .count()
    }
}

/// Coarsest equitable partition refining `p`.
///
/// Cells are split in place: a cell is replaced by its pieces ordered by the
/// number of neighbours each vertex has in the splitting cell. The result
/// depends only on the structure of `(g, p)`, so it commutes with relabeling.
pub fn refine_equitable(g: &Graph, p: &OrderedPartition) -> Result<OrderedPartition, CanonError> {
    if p.n() != g.n() {
        return Err(CanonError::ColoringSize {
            coloring: p.n(),
            n: g.n(),
        });
    }
    let mut cells = p.cells().to_vec();
    refine(g, &mut cells);
    Ok(OrderedPartition::from_cells_unchecked(g.n(), cells))
}

fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let mut keyed: Vec<(u32, usize)> = Vec::with_capacity(g.n());
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() && cells.len() < g.n() {
            let splitter = cells[w].iter().fold(0u64, |m, &v| m | 1u64 << v);
            let mut next = Vec::with_capacity(g.n());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                keyed.clear();
                keyed.extend(
                    cell.iter()
                        .map(|&v| ((g.row(v) & splitter).count_ones(), v)),
                );
                keyed.sort_unstable();
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    next.push(cell);
                    continue;
                }
                changed = true;
                let mut start = 0;
                while start < keyed.len() {
                    let count = keyed[start].0;
                    let end = start + keyed[start..].partition_point(|&(c, _)| c == count);
                    next.push(keyed[start..end].iter().map(|&(_, v)| v).collect());
                    start = end;
                }
            }
            *cells = next;
            w += 1;
        }
        if !changed {
            return;
        }
    }
}

fn individualize(cells: &[Vec<usize>], target: usize, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..target]);
    out.push(vec![v]);
    out.push(cells[target].iter().copied().filter(|&u| u != v).collect());
    out.extend_from_slice(&cells[target + 1..]);
    out
}

/// Disjoint sets whose representative is always the least member.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        match ra.cmp(&rb) {
            Ordering::Less => self.parent[rb] = ra,
            Ordering::Greater => self.parent[ra] = rb,
            Ordering::Equal => {}
        }
    }
}

struct Leaf {
    lab: Vec<usize>,
    graph: Graph,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` to unwind to the node at depth `level`.
    fn visit(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.g.n() {
            return self.leaf(&cells, path);
        }
        let level = path.len();
        let target = target_cell(&cells);
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, UnionFind)> = None;

        for &v in &candidates {
            if !explored.is_empty() {
                // Rebuild the stabiliser orbits only when new automorphisms arrived.
                if orbits.as_ref().map(|(k, _)| *k) != Some(self.autos.len()) {
                    orbits = Some((self.autos.len(), self.stabilizer_orbits(path)));
                }
                let uf = &mut orbits.as_mut().unwrap().1;
                let rv = uf.find(v);
                if explored.iter().any(|&u| uf.find(u) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = individualize(&cells, target, v);
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn stabilizer_orbits(&self, path: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.n());
        for a in &self.autos {
            if path.iter().all(|&p| a[p] == p) {
                for (u, &au) in a.iter().enumerate() {
                    uf.union(u, au);
                }
            }
        }
        uf
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0; lab.len()];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let graph = self.g.permuted(&pos);
        let leaf = Leaf {
            lab,
            graph,
            path: path.to_vec(),
        };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                graph: leaf.graph.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.graph == leaf.graph {
            let jump = divergence(&first.path, &leaf.path);
            let auto = automorphism(&first.lab, &leaf.lab);
            self.autos.push(auto);
            return Some(jump);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.graph.cmp(&best.graph) {
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let jump = divergence(&best.path, &leaf.path);
                let auto = automorphism(&best.lab, &leaf.lab);
                self.autos.push(auto);
                Some(jump)
            }
            Ordering::Greater => None,
        }
    }
}

fn target_cell(cells: &[Vec<usize>]) -> usize {
    let mut best = usize::MAX;
    let mut idx = 0;
    for (i, c) in cells.iter().enumerate() {
        if c.len() > 1 && c.len() < best {
            best = c.len();
            idx = i;
        }
    }
    idx
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The map sending `from[i]` to `to[i]` for every position `i`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut map = vec![0; from.len()];
    for (&u, &v) in from.iter().zip(to) {
        map[u] = v;
    }
    map
}

/// Canonical labeling, orbits and canonical form of `g`.
pub fn densenauty(g: &Graph, opts: &CanonOptions) -> Result<CanonicalResult, CanonError> {
    let n = g.n();
    let initial = match &opts.initial_coloring {
        Some(p) if p.n() != n => {
            return Err(CanonError::ColoringSize { coloring: p.n(), n });
        }
        Some(p) => p.clone(),
        None => OrderedPartition::unit(n),
    };
    let mut cells = initial.cells().to_vec();
    refine(g, &mut cells);
    let partition = OrderedPartition::from_cells_unchecked(n, cells.clone());

    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.visit(cells, &mut Vec::new());

    let best = search.best.expect("the search tree has at least one leaf");
    let mut uf = UnionFind::new(n);
    for a in &search.autos {
        for (u, &au) in a.iter().enumerate() {
            uf.union(u, au);
        }
    }
    let orbits = (0..n).map(|v| uf.find(v)).collect();
    let labeling = Permutation::from_vec_unchecked(best.lab);
    let permutation = labeling.inverse();
    Ok(CanonicalResult {
        labeling,
        permutation,
        partition,
        orbits,
        canonic: best.graph,
        generators: search.autos.len(),
    })
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(n: usize, g: &Graph) -> Result<Graph, CanonError> {
    check_n(n, g)?;
    Ok(densenauty(g, &CanonOptions::default())?.canonic)
}

/// Canonizes a graph given in `opts.input_format`, returning the permutation
/// that carries it to its canonical form and that form in
/// `opts.output_format`.
pub fn canonic_graph(
    n: usize,
    value: &GraphValue,
    opts: &CanonOptions,
) -> Result<(Permutation, GraphValue), CanonError> {
    if value.format() != opts.input_format {
        return Err(GraphError::FormatMismatch {
            expected: opts.input_format,
            found: value.format(),
        }
        .into());
    }
    let g = value.to_graph(n)?;
    let r = densenauty(&g, opts)?;
    let out = r.canonic_as(opts.output_format)?;
    Ok((r.permutation, out))
}

/// Tests `g1` and `g2` for isomorphism.
///
/// Returns `Some((p, canonic))` with `g1.apply_permutation(p) == g2` when they
/// are isomorphic (respecting `opts.initial_coloring` on both sides) and
/// `None` otherwise.
pub fn isomorphic(
    n: usize,
    g1: &Graph,
    g2: &Graph,
    opts: &CanonOptions,
) -> Result<Option<(Permutation, Graph)>, CanonError> {
    check_n(n, g1)?;
    check_n(n, g2)?;
    let r1 = densenauty(g1, opts)?;
    let r2 = densenauty(g2, opts)?;
    if r1.canonic != r2.canonic {
        return Ok(None);
    }
    // g1 -> canonic -> g2
    let p = r2
        .labeling
        .after(&r1.permutation)
        .expect("both permutations have length n");
    Ok(Some((p, r1.canonic)))
}

fn check_n(n: usize, g: &Graph) -> Result<(), CanonError> {
    if g.n() != n {
        return Err(CanonError::VertexCount {
            expected: n,
            found: g.n(),
        });
    }
    Ok(())
}

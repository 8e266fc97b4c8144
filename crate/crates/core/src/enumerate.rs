//! Isomorph-free generation by extend-and-reduce, and canonical deduplication.
//!
//! Every set returned here is sorted by [`Graph`]'s order, which for graphs
//! on at most 62 vertices coincides with sorting their graph6 encodings.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, CanonError};
use crate::graph::{extensions, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("input graph {index} is not in canonical form")]
    NonCanonical { index: usize },
    #[error("graphs on {first} and {other} vertices cannot be mixed")]
    MixedVertexCounts { first: usize, other: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

/// Switches for one extend step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtendOptions {
    /// Replace each surviving extension by its canonical form. With this off
    /// the step keeps every labeled extension that passes the filter.
    pub canonize: bool,
    /// Verify that every input graph is canonical before extending.
    pub strict: bool,
    /// Extend distinct parents on the rayon thread pool.
    pub parallel: bool,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        ExtendOptions {
            canonize: true,
            strict: false,
            parallel: false,
        }
    }
}

/// Counts and timings for one extend step, mirroring a column of the
/// enumeration tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepStats {
    /// Vertex count of the graphs produced by the step.
    pub n: usize,
    pub count: usize,
    /// Wall time since the start of the whole run.
    pub elapsed: Duration,
    /// Time spent inside canonization (summed over threads), since the start
    /// of the run.
    pub canon: Duration,
}

fn common_n(graphs: &[Graph]) -> Result<Option<usize>, EnumError> {
    let Some(first) = graphs.first().map(Graph::n) else {
        return Ok(None);
    };
    if let Some(g) = graphs.iter().find(|g| g.n() != first) {
        return Err(EnumError::MixedVertexCounts {
            first,
            other: g.n(),
        });
    }
    Ok(Some(first))
}

/// `{ canonical_form(h) : g in graphs, h in extensions(g), keep(h) }`,
/// sorted and deduplicated.
pub fn extend_and_reduce<F>(graphs: &[Graph], keep: F) -> Result<Vec<Graph>, EnumError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    extend_and_reduce_with(graphs, keep, ExtendOptions::default()).map(|(out, _)| out)
}

/// As [`extend_and_reduce`], also returning the time spent canonizing.
pub fn extend_and_reduce_with<F>(
    graphs: &[Graph],
    keep: F,
    opts: ExtendOptions,
) -> Result<(Vec<Graph>, Duration), EnumError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let Some(n) = common_n(graphs)? else {
        return Ok((Vec::new(), Duration::ZERO));
    };
    if opts.strict {
        for (index, g) in graphs.iter().enumerate() {
            if canonical_form(n, g)? != *g {
                return Err(EnumError::NonCanonical { index });
            }
        }
    }

    let expand = |g: &Graph| -> Result<(Vec<Graph>, Duration), EnumError> {
        let mut out = Vec::new();
        let mut canon = Duration::ZERO;
        for h in extensions(g)?.filter(|h| keep(h)) {
            if opts.canonize {
                let t = Instant::now();
                let c = canonical_form(n + 1, &h)?;
                canon += t.elapsed();
                out.push(c);
            } else {
                out.push(h);
            }
        }
        Ok((out, canon))
    };

    let parts: Vec<(Vec<Graph>, Duration)> = if opts.parallel {
        graphs.par_iter().map(expand).collect::<Result<_, _>>()?
    } else {
        graphs.iter().map(expand).collect::<Result<_, _>>()?
    };
    let canon = parts.iter().map(|(_, d)| *d).sum();
    let mut out: Vec<Graph> = parts.into_iter().flat_map(|(g, _)| g).collect();
    out.sort_unstable();
    out.dedup();
    Ok((out, canon))
}

/// Iterates [`extend_and_reduce_with`] `n` times from the empty graph,
/// applying `keep` at every size and reporting each step to `on_step`.
pub fn generate<F, S>(
    n: usize,
    keep: F,
    opts: ExtendOptions,
    mut on_step: S,
) -> Result<Vec<Graph>, EnumError>
where
    F: Fn(&Graph) -> bool + Sync,
    S: FnMut(&StepStats),
{
    let start = Instant::now();
    let mut canon = Duration::ZERO;
    let mut layer = vec![Graph::empty(0)?];
    for size in 1..=n {
        let (next, spent) = extend_and_reduce_with(&layer, &keep, opts)?;
        canon += spent;
        layer = next;
        on_step(&StepStats {
            n: size,
            count: layer.len(),
            elapsed: start.elapsed(),
            canon,
        });
    }
    Ok(layer)
}

/// One canonical representative of every graph on `n` vertices.
///
/// The cost grows with the number of classes; `n <= 9` (274 668 classes)
/// is the intended range.
pub fn all_nonisomorphic(n: usize) -> Result<Vec<Graph>, EnumError> {
    all_nonisomorphic_with(n, ExtendOptions::default())
}

pub fn all_nonisomorphic_with(n: usize, opts: ExtendOptions) -> Result<Vec<Graph>, EnumError> {
    generate(n, |_| true, opts, |_| {})
}

/// Canonical forms of the classes present in `graphs`, sorted.
pub fn dedup_canonical(graphs: &[Graph]) -> Result<Vec<Graph>, EnumError> {
    let Some(n) = common_n(graphs)? else {
        return Ok(Vec::new());
    };
    let mut out = graphs
        .iter()
        .map(|g| canonical_form(n, g))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

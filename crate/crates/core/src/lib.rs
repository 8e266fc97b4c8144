//! Canonical labeling, isomorph-free enumeration and Ramsey graph search for
//! small dense graphs.
//!
//! Graphs have at most 64 vertices and are stored as one `u64` adjacency row
//! per vertex. The main pieces:
//!
//! * [`graph`]: the [`Graph`] type, permutations, ordered partitions and the
//!   interchange formats (adjacency matrix, adjacency list, edge list, graph6).
//! * [`graph6`]: the graph6 line format used by nauty's gtools.
//! * [`canon`]: an individualization–refinement canonizer with automorphism
//!   pruning ([`densenauty`], [`canonical_form`], [`isomorphic`]).
//! * [`enumerate`]: extend-and-reduce generation of non-isomorphic graphs.
//! * [`sat`]: CNF formulas, a DPLL solver with projected all-solutions
//!   enumeration, and DIMACS I/O.
//! * [`ramsey`]: Ramsey colourings by generate–test–reduce and by
//!   constrain–generate–reduce through the SAT encoding.
//! * [`tools`]: running nauty's `geng` and `shortg` over pipes.
//! * [`cli`]: the `isoforge` command line.
//!
//! ```
//! use isoforge::{canonical_form, decode_graph6, Graph};
//!
//! let c5 = Graph::cycle(5).unwrap();
//! let g = decode_graph6("DqK").unwrap();
//! assert_eq!(canonical_form(5, &g).unwrap(), canonical_form(5, &c5).unwrap());
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod ramsey;
pub mod sat;
pub mod tools;

pub use canon::{
    canonic_graph, canonical_form, densenauty, isomorphic, refine_equitable, CanonError,
    CanonOptions, CanonicalResult,
};
pub use enumerate::{
    all_nonisomorphic, dedup_canonical, extend_and_reduce, generate, EnumError, ExtendOptions,
    StepStats,
};
pub use graph::{
    extensions, graph_convert, k_subsets, vertex_cap, Graph, GraphError, GraphFormat, GraphValue,
    OrderedPartition, Permutation, MAX_VERTICES,
};
pub use graph6::{decode_graph6, encode_graph6, read_graph6_lines, Graph6Error};
pub use ramsey::{
    encode_ramsey, gen_ramsey_cg, gen_ramsey_gt, is_ramsey, EdgeVarMap, RamseyError, RamseyInstance,
};
pub use sat::{solve, solve_all, Clause, CnfFormula, Literal, Model, SatError};
pub use tools::{exec_bidi, exec_stream, ToolError, ToolSpec};

//! Canonical labeling of a small graph given as an adjacency matrix.

use isoforge::canon::{canonic_graph, CanonOptions};
use isoforge::graph::{GraphFormat, GraphValue};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = GraphValue::AdjMatrix(vec![
        vec![0, 1, 0, 0, 0],
        vec![1, 0, 1, 0, 1],
        vec![0, 1, 0, 1, 0],
        vec![0, 0, 1, 0, 1],
        vec![0, 1, 0, 1, 0],
    ]);
    let (perm, canonic) = canonic_graph(5, &graph, &CanonOptions::default())?;
    println!("graph   = {graph}");
    println!("canonic = {canonic}");
    println!("perm    = {:?} (1-based)", perm.to_one_based());

    // The same graph given as graph6, with the result as an edge list.
    let opts = CanonOptions {
        input_format: GraphFormat::Graph6Atom,
        output_format: GraphFormat::EdgeList,
        initial_coloring: None,
    };
    let g6 =
        isoforge::graph::graph_convert(5, GraphFormat::AdjMatrix, GraphFormat::Graph6Atom, &graph)?;
    let (_, edges) = canonic_graph(5, &g6, &opts)?;
    println!("{g6} -> {edges}");
    Ok(())
}

//! Converting one graph between the four interchange formats.

use isoforge::graph::{graph_convert, GraphFormat, GraphValue};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let atom = GraphValue::Graph6("DqK".into());
    for to in GraphFormat::ALL {
        let v = graph_convert(5, GraphFormat::Graph6Atom, to, &atom)?;
        println!("{:<12} {v}", to.name());
    }

    // A list of graph6 lines, each converted back from its matrix.
    let atoms = ["DRo", "Dbg", "DdW", "DLo", "D[S", "DpS"];
    for a in atoms {
        let m = graph_convert(
            5,
            GraphFormat::Graph6Atom,
            GraphFormat::AdjMatrix,
            &GraphValue::Graph6(a.into()),
        )?;
        let back = graph_convert(5, GraphFormat::AdjMatrix, GraphFormat::Graph6Atom, &m)?;
        println!("{a} -> {m} -> {back}");
    }
    Ok(())
}

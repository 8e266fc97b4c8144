//! Native counterparts of nauty's `geng` and `shortg`: all graphs of a
//! given order, and deduplication of a list of graph6 lines.

use isoforge::enumerate::{all_nonisomorphic, dedup_canonical};
use isoforge::graph6::{decode_graph6, encode_graph6};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=7 {
        println!("{n} vertices: {} graphs", all_nonisomorphic(n)?.len());
    }

    let atoms = [
        "DRo", "Dbg", "DdW", "DLo", "D[S", "DpS", "DYc", "DqK", "DMg", "DkK", "Dhc", "DUW",
    ];
    let graphs = atoms
        .iter()
        .map(|a| decode_graph6(a))
        .collect::<Result<Vec<_>, _>>()?;
    let classes = dedup_canonical(&graphs)?;
    let lines = classes
        .iter()
        .map(encode_graph6)
        .collect::<Result<Vec<_>, _>>()?;
    println!("{} atoms -> {:?}", atoms.len(), lines);
    Ok(())
}

//! The full canonization result: labeling, orbits, root partition and a
//! search under an initial vertex colouring.

use isoforge::canon::{densenauty, CanonOptions};
use isoforge::graph::{Graph, OrderedPartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    let petersen = Graph::from_edges(10, &edges)?;

    let r = densenauty(&petersen, &CanonOptions::default())?;
    println!("labeling    {:?}", r.labeling.as_slice());
    println!("orbits      {:?} ({} orbit)", r.orbits, r.orbit_count());
    println!("root cells  {:?}", r.partition.cells());
    println!("generators  {}", r.generators);

    // Colour the outer cycle differently from the inner star.
    let colors: Vec<usize> = (0..10).map(|v| (v >= 5) as usize).collect();
    let opts = CanonOptions::with_coloring(OrderedPartition::from_colors(&colors));
    let c = densenauty(&petersen, &opts)?;
    println!(
        "coloured orbits {:?} ({} orbits)",
        c.orbits,
        c.orbit_count()
    );
    Ok(())
}

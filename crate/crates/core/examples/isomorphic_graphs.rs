//! Isomorphism testing with a witness permutation.

use isoforge::canon::{isomorphic, CanonOptions};
use isoforge::graph::Graph;

fn show(g1: &Graph, g2: &Graph) -> Result<(), Box<dyn std::error::Error>> {
    match isomorphic(g1.n(), g1, g2, &CanonOptions::default())? {
        Some((perm, canonic)) => {
            assert_eq!(&g1.apply_permutation(&perm)?, g2);
            println!("isomorphic via {:?} (1-based)", perm.to_one_based());
            println!("shared canonical form {:?}", canonic.to_adj_matrix());
        }
        None => println!("not isomorphic"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g1 = Graph::from_adj_matrix(&[
        [0, 1, 0, 1, 1],
        [1, 0, 1, 0, 0],
        [0, 1, 0, 1, 0],
        [1, 0, 1, 0, 1],
        [1, 0, 0, 1, 0],
    ])?;
    let g2 = Graph::from_adj_matrix(&[
        [0, 1, 0, 1, 1],
        [1, 0, 1, 0, 0],
        [0, 1, 0, 0, 1],
        [1, 0, 0, 0, 1],
        [1, 0, 1, 1, 0],
    ])?;
    show(&g1, &g2)?;

    let h1 = Graph::from_adj_matrix(&[
        [0, 1, 1, 0, 1],
        [1, 0, 0, 0, 1],
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0],
    ])?;
    let h2 = Graph::from_adj_matrix(&[
        [0, 1, 0, 0, 1],
        [1, 0, 1, 1, 0],
        [0, 1, 0, 0, 1],
        [0, 1, 0, 0, 1],
        [1, 0, 1, 1, 0],
    ])?;
    show(&h1, &h2)
}

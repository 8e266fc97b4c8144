//! Among any six people, three are mutual friends or three are mutual
//! strangers: there is a (3,3;5) colouring and no (3,3;6) one.

use isoforge::graph6::encode_graph6;
use isoforge::ramsey::{gen_ramsey_gt, gen_ramsey_gt_with, is_ramsey, GtOptions, RamseyInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let five = RamseyInstance::new(3, 3, 5)?;
    let classes = gen_ramsey_gt(&five)?;
    for g in &classes {
        println!("(3,3;5): {} {:?}", encode_graph6(g)?, g.to_adj_matrix());
        assert!(is_ramsey(&five, g)?);
    }
    println!(
        "(3,3;6): {} colourings",
        gen_ramsey_gt(&RamseyInstance::new(3, 3, 6)?)?.len()
    );

    for (filter, canonize) in [(true, false), (false, true), (false, false)] {
        let opts = GtOptions {
            filter,
            canonize,
            parallel: false,
        };
        let count = gen_ramsey_gt_with(&five, opts, |_| {})?.len();
        println!("filter={filter:<5} canonize={canonize:<5} -> {count} graphs on 5 vertices");
    }
    Ok(())
}

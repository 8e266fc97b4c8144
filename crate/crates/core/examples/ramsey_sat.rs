//! Ramsey colourings through the SAT encoding: encode, enumerate every model
//! projected on the edge variables, decode and reduce to canonical forms.
//!
//! Usage: `cargo run --release --example ramsey_sat -- [S T N] [--dimacs]`
//! (defaults to 3 5 11). With `--dimacs` the CNF for N is printed instead.

use std::env;

use isoforge::graph6::encode_graph6;
use isoforge::ramsey::{encode_ramsey, gen_ramsey_cg_stats, RamseyInstance};
use isoforge::sat::to_dimacs;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = env::args().skip(1).collect();
    let nums: Vec<usize> = args.iter().filter_map(|a| a.parse().ok()).collect();
    let (s, t, n) = match nums.as_slice() {
        [s, t, n, ..] => (*s, *t, *n),
        _ => (3, 5, 11),
    };

    if args.iter().any(|a| a == "--dimacs") {
        let (map, cnf) = encode_ramsey(&RamseyInstance::new(s, t, n)?)?;
        eprintln!(
            "{} edge variables, {} variables in total, {} clauses",
            map.num_edge_vars(),
            cnf.num_vars(),
            cnf.clauses().len()
        );
        print!("{}", to_dimacs(&cnf));
        return Ok(());
    }

    println!("n\tmodels\tclasses\tseconds");
    let mut last = Vec::new();
    for m in 1..=n {
        let (graphs, stats) = gen_ramsey_cg_stats(&RamseyInstance::new(s, t, m)?)?;
        println!(
            "{m}\t{}\t{}\t{:.3}",
            stats.models,
            stats.classes,
            stats.elapsed.as_secs_f64()
        );
        last = graphs;
    }
    for g in last.iter().take(5) {
        println!("{}", encode_graph6(g)?);
    }
    Ok(())
}

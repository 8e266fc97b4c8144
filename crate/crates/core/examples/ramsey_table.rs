//! Prints, for each n, how many non-isomorphic (s, t; n) Ramsey colourings
//! exist, using generate–test–reduce.
//!
//! Usage: `cargo run --release --example ramsey_table -- [S T N] [--jobs]`
//! (defaults to 3 5 14).

use std::env;

use isoforge::ramsey::{gen_ramsey_gt_with, GtOptions, RamseyInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = env::args().skip(1).collect();
    let parallel = args.iter().any(|a| a == "--jobs");
    let nums: Vec<usize> = args.iter().filter_map(|a| a.parse().ok()).collect();
    let (s, t, n) = match nums.as_slice() {
        [s, t, n, ..] => (*s, *t, *n),
        _ => (3, 5, 14),
    };

    let inst = RamseyInstance::new(s, t, n)?;
    let opts = GtOptions {
        parallel,
        ..Default::default()
    };
    println!("n\tclasses\tseconds\tcanon_seconds");
    let mut first_empty = None;
    gen_ramsey_gt_with(&inst, opts, |step| {
        println!(
            "{}\t{}\t{:.3}\t{:.3}",
            step.n,
            step.count,
            step.elapsed.as_secs_f64(),
            step.canon.as_secs_f64()
        );
        if step.count == 0 && first_empty.is_none() {
            first_empty = Some(step.n);
        }
    })?;
    match first_empty {
        Some(r) => println!("R({s},{t}) = {r}"),
        None => println!("R({s},{t}) > {n}"),
    }
    Ok(())
}

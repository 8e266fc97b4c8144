//! Cross-checking against nauty's own `geng` and `shortg` when they are
//! installed (found via `$GTOOLS_DIR` or `$PATH`).

use isoforge::enumerate::all_nonisomorphic;
use isoforge::tools::{exec_bidi, exec_stream, ToolError, ToolSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=7 {
        let lines = match exec_stream(&ToolSpec::geng(n)) {
            Ok(it) => it.collect::<Result<Vec<_>, _>>()?,
            Err(e @ ToolError::ToolUnavailable { .. }) => {
                println!("skipping: {e}");
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        };
        let native = all_nonisomorphic(n)?.len();
        println!("n = {n}: geng {} native {native}", lines.len());
    }

    let atoms = [
        "DRo", "Dbg", "DdW", "DLo", "D[S", "DpS", "DYc", "DqK", "DMg", "DkK", "Dhc", "DUW",
    ];
    println!("shortg: {:?}", exec_bidi(&ToolSpec::shortg(), atoms)?);
    Ok(())
}

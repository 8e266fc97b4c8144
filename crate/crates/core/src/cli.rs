//! The `isoforge` command line.
//!
//! Graph input and output is one graph per line. graph6 is the default
//! format so commands compose with each other and with nauty's gtools.
//! Exit status is 0 on success, 1 on bad data (with a message on standard
//! error) and 2 on a usage error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{BufRead, Write};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::canon::{canonic_graph, canonical_form, isomorphic, CanonOptions};
use crate::enumerate::{all_nonisomorphic_with, ExtendOptions, StepStats};
use crate::graph::{graph_convert, GraphFormat, GraphValue};
use crate::graph6::{encode_graph6, read_graph6_lines};
use crate::ramsey::{
    encode_ramsey, gen_ramsey_cg_stats, gen_ramsey_gt_with, GtOptions, RamseyInstance,
};
use crate::sat::to_dimacs;

#[derive(Parser, Debug)]
#[command(
    name = "isoforge",
    version,
    about = "Graph canonization, enumeration and Ramsey search"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Convert each input line between graph formats.
    Convert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: GraphFormat,
        #[arg(long)]
        to: GraphFormat,
    },
    /// Print the canonical form of each input line.
    Canon {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "graph6")]
        fmt: GraphFormat,
        /// Also print the 1-based relabeling that produces the canonical form.
        #[arg(long)]
        perm: bool,
    },
    /// Test two graphs for isomorphism; prints a 1-based witness, exit 1 if none.
    Iso {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "graph6")]
        fmt: GraphFormat,
        g1: String,
        g2: String,
    },
    /// All graphs on N vertices up to isomorphism, as graph6 lines.
    Geng {
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Read graph6 lines and print one canonical line per isomorphism class.
    Shortg,
    /// Ramsey colouring search.
    Ramsey {
        #[command(subcommand)]
        command: RamseyCmd,
    },
}

#[derive(Subcommand, Debug)]
enum RamseyCmd {
    /// Generate, test and reduce.
    Gt(RamseyArgs),
    /// Encode to CNF, enumerate all models, reduce.
    Cg(RamseyArgs),
    /// Print the CNF encoding in DIMACS format.
    Cnf { s: usize, t: usize, n: usize },
}

#[derive(Args, Debug)]
struct RamseyArgs {
    s: usize,
    t: usize,
    n: usize,
    /// Per-size statistics on standard error:
    /// n, classes, total seconds, canonization seconds (cg adds the model count).
    #[arg(long)]
    stats: bool,
    #[arg(long)]
    jobs: Option<usize>,
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => {
            let _ = stdout.flush();
            code
        }
        Err(e) => {
            let _ = stdout.flush();
            let _ = writeln!(stderr, "error: {e:#}");
            1
        }
    }
}

fn dispatch(
    cmd: Cmd,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match cmd {
        Cmd::Convert { n, from, to } => {
            for (i, line) in data_lines(stdin) {
                let line = line?;
                let value = GraphValue::parse(from, &line).with_context(|| format!("line {i}"))?;
                let converted =
                    graph_convert(n, from, to, &value).with_context(|| format!("line {i}"))?;
                writeln!(out, "{converted}")?;
            }
        }
        Cmd::Canon { n, fmt, perm } => {
            let opts = CanonOptions {
                input_format: fmt,
                output_format: fmt,
                initial_coloring: None,
            };
            for (i, line) in data_lines(stdin) {
                let line = line?;
                let value = GraphValue::parse(fmt, &line).with_context(|| format!("line {i}"))?;
                let (p, canonic) =
                    canonic_graph(n, &value, &opts).with_context(|| format!("line {i}"))?;
                if perm {
                    writeln!(out, "{canonic} {}", one_based(&p.to_one_based()))?;
                } else {
                    writeln!(out, "{canonic}")?;
                }
            }
        }
        Cmd::Iso { n, fmt, g1, g2 } => {
            let parse = |s: &str| -> Result<_> { Ok(GraphValue::parse(fmt, s)?.to_graph(n)?) };
            let a = parse(&g1).context("first graph")?;
            let b = parse(&g2).context("second graph")?;
            match isomorphic(n, &a, &b, &CanonOptions::default())? {
                Some((p, _)) => writeln!(out, "{}", one_based(&p.to_one_based()))?,
                None => {
                    writeln!(err, "not isomorphic")?;
                    return Ok(1);
                }
            }
        }
        Cmd::Geng { n, jobs } => {
            let graphs = with_jobs(jobs, |parallel| {
                all_nonisomorphic_with(
                    n,
                    ExtendOptions {
                        parallel,
                        ..Default::default()
                    },
                )
            })??;
            write_graph6(out, &graphs)?;
        }
        Cmd::Shortg => {
            let mut classes = BTreeSet::new();
            for g in read_graph6_lines(stdin) {
                let g = g?;
                classes.insert(canonical_form(g.n(), &g)?);
            }
            let graphs: Vec<_> = classes.into_iter().collect();
            write_graph6(out, &graphs)?;
        }
        Cmd::Ramsey { command } => ramsey(command, out, err)?,
    }
    Ok(0)
}

fn ramsey(cmd: RamseyCmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match cmd {
        RamseyCmd::Gt(a) => {
            let inst = RamseyInstance::new(a.s, a.t, a.n)?;
            let mut rows = Vec::new();
            let graphs = with_jobs(a.jobs, |parallel| {
                let opts = GtOptions {
                    parallel,
                    ..Default::default()
                };
                gen_ramsey_gt_with(&inst, opts, |s: &StepStats| rows.push(*s))
            })??;
            if a.stats {
                for s in rows {
                    writeln!(
                        err,
                        "{}\t{}\t{:.3}\t{:.3}",
                        s.n,
                        s.count,
                        s.elapsed.as_secs_f64(),
                        s.canon.as_secs_f64()
                    )?;
                }
            }
            write_graph6(out, &graphs)?;
        }
        RamseyCmd::Cg(a) => {
            let inst = RamseyInstance::new(a.s, a.t, a.n)?;
            let sizes = if a.stats { 1..=a.n } else { a.n..=a.n };
            let mut last = Vec::new();
            for m in sizes {
                let (graphs, s) = gen_ramsey_cg_stats(&RamseyInstance::new(a.s, a.t, m)?)?;
                if a.stats {
                    writeln!(
                        err,
                        "{m}\t{}\t{:.3}\t{:.3}\t{}",
                        s.classes,
                        s.elapsed.as_secs_f64(),
                        s.canon.as_secs_f64(),
                        s.models
                    )?;
                }
                last = graphs;
            }
            if a.stats && a.n == 0 {
                last = gen_ramsey_cg_stats(&inst)?.0;
            }
            write_graph6(out, &last)?;
        }
        RamseyCmd::Cnf { s, t, n } => {
            let (_, cnf) = encode_ramsey(&RamseyInstance::new(s, t, n)?)?;
            out.write_all(to_dimacs(&cnf).as_bytes())?;
        }
    }
    Ok(())
}

fn data_lines(
    stdin: &mut dyn BufRead,
) -> impl Iterator<Item = (usize, std::io::Result<String>)> + '_ {
    stdin
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty()))
}

fn one_based(p: &[usize]) -> String {
    let items: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(","))
}

fn write_graph6(out: &mut dyn Write, graphs: &[crate::graph::Graph]) -> Result<()> {
    for g in graphs {
        writeln!(out, "{}", encode_graph6(g)?)?;
    }
    Ok(())
}

/// Runs `f` on a dedicated pool of `jobs` threads when more than one is
/// requested, telling it whether to parallelize.
fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce(bool) -> R + Send) -> Result<R> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(k) if k > 1 => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(k).build()?;
            Ok(pool.install(|| f(true)))
        }
        _ => Ok(f(false)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("isoforge").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn convert_graph6_to_matrix() {
        let (code, out, _) = call(
            &[
                "convert",
                "--n",
                "5",
                "--from",
                "graph6",
                "--to",
                "adj-matrix",
            ],
            "DqK\n",
        );
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "[[0,1,1,0,0],[1,0,0,1,0],[1,0,0,0,1],[0,1,0,0,1],[0,0,1,1,0]]\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["bogus"], "").0, 2);
        assert_eq!(call(&["convert", "--n", "5"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
        let (code, _, err) = call(
            &[
                "convert", "--n", "4", "--from", "graph6", "--to", "adj-list",
            ],
            "DqK\n",
        );
        assert_eq!(code, 1);
        assert!(err.starts_with("error: line 1"), "{err}");
    }

    #[test]
    fn party_problem_is_empty_at_six() {
        assert_eq!(
            call(&["ramsey", "gt", "3", "3", "6"], ""),
            (0, String::new(), String::new())
        );
        let (code, five, _) = call(&["ramsey", "gt", "3", "3", "5"], "");
        assert_eq!(code, 0);
        assert_eq!(five.lines().count(), 1);
        assert_eq!(call(&["ramsey", "cg", "3", "3", "5"], "").1, five);
    }

    #[test]
    fn geng_is_a_fixed_point_of_shortg() {
        let (_, g5, _) = call(&["geng", "5"], "");
        assert_eq!(g5.lines().count(), 34);
        assert_eq!(call(&["shortg"], &g5).1, g5);
        assert_eq!(call(&["geng", "5", "--jobs", "2"], "").1, g5);
    }

    #[test]
    fn stats_columns() {
        let (_, _, err) = call(&["ramsey", "gt", "3", "3", "4", "--stats"], "");
        let rows: Vec<Vec<&str>> = err.lines().map(|l| l.split('\t').collect()).collect();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.len() == 4));
        let (_, _, err) = call(&["ramsey", "cg", "3", "3", "4", "--stats"], "");
        assert!(err.lines().all(|l| l.split('\t').count() == 5));
    }

    #[test]
    fn iso_and_canon() {
        let (code, out, _) = call(&["iso", "--n", "5", "DqK", "DqK"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with('['));
        let (code, _, err) = call(&["iso", "--n", "5", "DqK", "D~{"], "");
        assert_eq!((code, err.as_str()), (1, "not isomorphic\n"));
        let (code, out, _) = call(&["canon", "--n", "5", "--perm"], "DqK\nDRo\n");
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].split(' ').next(), lines[1].split(' ').next());
    }

    #[test]
    fn cnf_dump() {
        let (code, out, _) = call(&["ramsey", "cnf", "2", "2", "2"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("p cnf 1 2\n"));
    }
}

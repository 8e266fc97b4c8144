mod common;

use common::*;
use isoforge::canon::{canonical_form, refine_equitable};
use isoforge::enumerate::{all_nonisomorphic, dedup_canonical, extend_and_reduce};
use isoforge::graph::{
    extensions, graph_convert, Graph, GraphFormat, GraphValue, OrderedPartition, Permutation,
};
use isoforge::ramsey::{encode_ramsey, is_ramsey, RamseyInstance};
use isoforge::sat::{from_dimacs, solve, solve_all, to_dimacs};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        random_graph(&mut rng, n, 0.5)
    })
}

fn arb_graph_perm(max_n: usize) -> impl Strategy<Value = (Graph, Permutation, Permutation)> {
    arb_graph(0, max_n).prop_flat_map(|g| {
        let n = g.n();
        let perm = || Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (Just(g), perm(), perm()).prop_map(|(g, p, q)| {
            (
                g,
                Permutation::new(p).unwrap(),
                Permutation::new(q).unwrap(),
            )
        })
    })
}

#[test]
fn format_round_trips() {
    // Exhaustive up to five vertices, every 97th labeled graph at six.
    for n in 0..=6 {
        for g in all_graphs(n).step_by(if n == 6 { 97 } else { 1 }) {
            for f1 in GraphFormat::ALL {
                let v1 = GraphValue::from_graph(&g, f1).unwrap();
                for f2 in GraphFormat::ALL {
                    let v2 = graph_convert(n, f1, f2, &v1).unwrap();
                    assert_eq!(graph_convert(n, f2, f1, &v2).unwrap(), v1);
                    assert_eq!(GraphValue::parse(f2, &v2.to_string()).unwrap(), v2);
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_labeled_class_counts() {
    for n in 0..=6 {
        let labeled: Vec<Graph> = all_graphs(n).collect();
        let classes = dedup_canonical(&labeled).unwrap();
        let generated = all_nonisomorphic(n).unwrap();
        if n == 0 {
            assert_eq!(generated, vec![Graph::empty(0).unwrap()]);
        } else {
            assert_eq!(generated, classes);
        }
        for g in &generated {
            assert_eq!(&canonical_form(n, g).unwrap(), g);
        }
    }
}

#[test]
fn stepwise_extension_reproduces_every_size() {
    let mut layer = vec![Graph::empty(0).unwrap()];
    for n in 1..=6 {
        layer = extend_and_reduce(&layer, |_| true).unwrap();
        assert_eq!(layer, all_nonisomorphic(n).unwrap());
    }
}

#[test]
fn ramsey_test_matches_subset_scan() {
    for n in 0..=6 {
        for g in all_graphs(n).step_by(if n == 6 { 7 } else { 1 }) {
            for (s, t) in [(1, 3), (2, 2), (3, 3), (3, 4), (4, 3), (3, 5)] {
                let inst = RamseyInstance::new(s, t, n).unwrap();
                assert_eq!(is_ramsey(&inst, &g).unwrap(), brute_is_ramsey(s, t, &g));
            }
        }
    }
}

#[test]
fn symmetry_break_keeps_every_class() {
    for n in 1..=5 {
        for (s, t) in [(3, 3), (3, 4), (4, 3), (2, 3), (4, 4)] {
            let inst = RamseyInstance::new(s, t, n).unwrap();
            let (map, cnf) = encode_ramsey(&inst).unwrap();
            let decoded: Vec<Graph> = solve_all(&cnf, &map.projection())
                .iter()
                .map(|m| map.decode(m))
                .collect();
            for g in &decoded {
                assert!(brute_is_ramsey(s, t, g));
            }
            let unbroken: Vec<Graph> = all_graphs(n).filter(|g| brute_is_ramsey(s, t, g)).collect();
            assert_eq!(
                dedup_canonical(&decoded).unwrap(),
                dedup_canonical(&unbroken).unwrap(),
                "({s},{t};{n})"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn permutations_compose((g, p, q) in arb_graph_perm(12)) {
        let twice = g.apply_permutation(&p).unwrap().apply_permutation(&q).unwrap();
        prop_assert_eq!(&twice, &g.apply_permutation(&q.after(&p).unwrap()).unwrap());
        let mut d1: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let h = g.apply_permutation(&p).unwrap();
        let mut d2: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
        d1.sort();
        d2.sort();
        prop_assert_eq!(d1, d2);
        prop_assert_eq!(h.apply_permutation(&p.inverse()).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_a_class_invariant((g, p, _) in arb_graph_perm(14)) {
        let n = g.n();
        let c = canonical_form(n, &g).unwrap();
        prop_assert_eq!(&c, &canonical_form(n, &g.apply_permutation(&p).unwrap()).unwrap());
        prop_assert_eq!(&canonical_form(n, &c).unwrap(), &c);
    }

    #[test]
    fn extensions_restrict_to_parent(g in arb_graph(0, 8)) {
        let n = g.n();
        let ext: Vec<Graph> = extensions(&g).unwrap().collect();
        prop_assert_eq!(ext.len(), 1usize << n);
        for h in &ext {
            prop_assert_eq!(h.n(), n + 1);
            prop_assert_eq!(&h.remove_vertex(n), &g);
        }
        let mut distinct = ext.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(distinct.len(), ext.len());
    }

    #[test]
    fn refinement_is_equitable(g in arb_graph(1, 16), colors in proptest::collection::vec(0usize..3, 16)) {
        let n = g.n();
        let start = OrderedPartition::from_colors(&colors[..n]);
        let p = refine_equitable(&g, &start).unwrap();
        let cells = p.cells();
        for a in cells {
            for b in cells {
                let count = |v: usize| b.iter().filter(|&&w| g.has_edge(v, w)).count();
                prop_assert!(a.iter().all(|&v| count(v) == count(a[0])));
            }
        }
        // Each refined cell sits inside one starting cell.
        let owner = start.cell_index();
        for a in cells {
            prop_assert!(a.iter().all(|&v| owner[v] == owner[a[0]]));
        }
        prop_assert_eq!(refine_equitable(&g, &p).unwrap(), p);
    }

    #[test]
    fn dedup_is_idempotent_and_order_free(seed in any::<u64>(), len in 0usize..30) {
        let mut rng = StdRng::seed_from_u64(seed);
        let gs: Vec<Graph> = (0..len).map(|_| random_graph(&mut rng, 6, 0.5)).collect();
        let once = dedup_canonical(&gs).unwrap();
        prop_assert_eq!(&dedup_canonical(&once).unwrap(), &once);
        let mut rev = gs.clone();
        rev.reverse();
        prop_assert_eq!(&dedup_canonical(&rev).unwrap(), &once);
    }

    #[test]
    fn ramsey_property_is_hereditary(g in arb_graph(1, 9), s in 2usize..5, t in 2usize..5) {
        let n = g.n();
        let inst = RamseyInstance::new(s, t, n).unwrap();
        if is_ramsey(&inst, &g).unwrap() {
            let smaller = RamseyInstance::new(s, t, n - 1).unwrap();
            for v in 0..n {
                prop_assert!(is_ramsey(&smaller, &g.remove_vertex(v)).unwrap());
            }
        }
    }

    #[test]
    fn solver_agrees_with_truth_table(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_formula(&mut rng, 10);
        let proj: Vec<u32> = (1..=f.num_vars()).filter(|v| v % 2 == 1).collect();
        let (sat, count) = truth_table(&f, &proj);
        let model = solve(&f);
        prop_assert_eq!(model.is_some(), sat);
        if let Some(m) = model {
            prop_assert!(f.is_satisfied_by(&m));
        }
        let all = solve_all(&f, &proj);
        prop_assert_eq!(all.len(), count);
        let mut projections: Vec<Vec<bool>> = all.iter().map(|m| m.project(&proj)).collect();
        projections.sort();
        projections.dedup();
        prop_assert_eq!(projections.len(), all.len());
        prop_assert!(all.iter().all(|m| f.is_satisfied_by(m)));
        prop_assert_eq!(from_dimacs(&to_dimacs(&f)).unwrap(), f);
    }
}

mod common;

use common::*;
use isoforge::graph::Graph;
use isoforge::graph6::{
    body_len, decode_graph6, encode_graph6, read_graph6_lines, write_graph6_lines,
};
use proptest::prelude::*;

#[test]
fn exhaustive_round_trip_up_to_five() {
    for n in 0..=5 {
        let mut count = 0;
        for g in all_graphs(n) {
            let s = encode_graph6(&g).unwrap();
            assert_eq!(s, oracle_graph6(&g));
            assert_eq!(decode_graph6(&s).unwrap(), g);
            assert_eq!(encode_graph6(&decode_graph6(&s).unwrap()).unwrap(), s);
            count += 1;
        }
        assert_eq!(count, 1usize << (n * n.saturating_sub(1) / 2));
    }
}

#[test]
fn c5_atoms_decode_to_listed_matrices() {
    for (atom, m) in C5_ATOMS.iter().zip(C5_MATRICES.iter()) {
        assert_eq!(decode_graph6(atom).unwrap(), matrix_graph(m));
        assert_eq!(encode_graph6(&matrix_graph(m)).unwrap(), *atom);
    }
}

#[test]
fn encoding_order_matches_graph_order() {
    let graphs: Vec<Graph> = all_graphs(5).collect();
    let mut by_graph = graphs.clone();
    by_graph.sort();
    let mut by_text: Vec<String> = graphs.iter().map(|g| encode_graph6(g).unwrap()).collect();
    by_text.sort();
    let encoded: Vec<String> = by_graph.iter().map(|g| encode_graph6(g).unwrap()).collect();
    assert_eq!(encoded, by_text);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(graph_on)
}

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

proptest! {
    #[test]
    fn round_trip_random(g in arb_graph(62)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(s.len(), 1 + body_len(g.n()));
        prop_assert_eq!(s.len(), 1 + (g.n() * g.n().saturating_sub(1) / 2).div_ceil(6));
        prop_assert_eq!(&s, &oracle_graph6(&g));
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn line_stream_round_trip(gs in proptest::collection::vec(arb_graph(12), 0..20)) {
        let mut buf = Vec::new();
        write_graph6_lines(&mut buf, gs.iter()).unwrap();
        let back: Vec<Graph> = read_graph6_lines(buf.as_slice()).collect::<Result<_, _>>().unwrap();
        prop_assert_eq!(back, gs);
    }

    #[test]
    fn same_size_order_is_text_order((a, b) in (0usize..=9).prop_flat_map(|n| (graph_on(n), graph_on(n)))) {
        let (sa, sb) = (encode_graph6(&a).unwrap(), encode_graph6(&b).unwrap());
        prop_assert_eq!(a.cmp(&b), sa.cmp(&sb));
    }
}

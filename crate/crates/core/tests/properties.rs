use pathdeg_core::{
    avoids, canonical_form, canonical_graph6, find_violation, from_graph6, to_graph6,
    verify_witness, Graph,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn adjacency_is_symmetric_and_loopless(g in graph(24)) {
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.n() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn graph6_round_trips(g in graph(40)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_invariant((g, perm) in graph_and_perm(14)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_graph6(&g), canonical_graph6(&h));
        let form = canonical_form(&g);
        prop_assert_eq!(to_graph6(&g.relabel(&form.relabeling).unwrap()), form.graph6);
    }

    #[test]
    fn avoidance_is_label_invariant((g, perm) in graph_and_perm(10), ell in 1usize..10) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(avoids(&g, ell), avoids(&h, ell));
    }

    #[test]
    fn violations_verify(g in graph(12), ell in 1usize..12) {
        if ell < g.n() {
            match find_violation(&g, ell).unwrap() {
                Some(v) => {
                    prop_assert!(verify_witness(&g, &v, ell).valid);
                    prop_assert!(!avoids(&g, ell));
                }
                None => prop_assert!(avoids(&g, ell)),
            }
        }
    }

    #[test]
    fn bipartite_sides_have_no_odd_paths(a in 1usize..7, b in 1usize..7, ell in 0usize..6) {
        let g = pathdeg_core::complete_bipartite(a, b).unwrap();
        let odd = 2 * ell + 1;
        if odd < a + b && a >= 2 {
            prop_assert!(pathdeg_core::path_of_length(&g, 0, 1, odd).unwrap().is_none());
        }
    }
}

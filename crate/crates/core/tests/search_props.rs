mod common;

use proptest::prelude::*;
use rand::Rng;

use bimenger::connectivity::{circular_decomposition, cycle_through};
use bimenger::matching::{maximum_matching, perfect_matching, UndirectedGraph};
use bimenger::oracle::{closed_trail_brute, find_trail_brute, signed_path_exists};
use bimenger::pathfinder::{find_path, find_signed_trail_within, is_clean, is_edge_clean, unclean_witness};
use bimenger::walk::{classify_walk, WalkClass};
use bimenger::{EdgeSet, Sign, SignedVertex, SignedVertexSet, VertexId};

use common::{graph, graph_with_sets, rng};

fn clean_brute(g: &bimenger::BidirectedGraph, x: &SignedVertexSet) -> bool {
    x.iter()
        .all(|a| x.iter().filter(|b| b.vertex != a.vertex).all(|b| !signed_path_exists(g, *a, *b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_cleanness_matches_enumeration(g in graph(6, 12)) {
        for v in g.vertices() {
            prop_assert_eq!(is_edge_clean(&g, v).unwrap(), closed_trail_brute(&g, v).is_none());
        }
    }

    #[test]
    fn signed_trails_match_enumeration(g in graph(6, 12), seed in any::<u64>()) {
        let mut r = rng(seed);
        let allowed = EdgeSet::from_edges(g.edge_count(), g.edge_ids().filter(|_| r.gen_bool(0.8)));
        for u in g.vertices() {
            for w in g.vertices().filter(|&w| w != u) {
                for a in Sign::BOTH {
                    for b in Sign::BOTH {
                        let (from, to) = (SignedVertex::new(u, a), SignedVertex::new(w, b));
                        let got = find_signed_trail_within(&g, &allowed, from, to).unwrap();
                        let want = find_trail_brute(&g, &allowed, &[from].into(), &[to].into());
                        prop_assert_eq!(got.is_some(), want.is_some());
                        if let Some(t) = got {
                            prop_assert!(t.is_trail(&g));
                            prop_assert!(t.edges.iter().all(|e| allowed.contains(*e)));
                            prop_assert_eq!(t.signed_start(&g), Some(from));
                            prop_assert_eq!(t.signed_end(&g), Some(to));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cleanness_matches_enumeration((g, x, _y) in graph_with_sets(6, 12)) {
        let clean = is_clean(&g, &x);
        prop_assert_eq!(clean, clean_brute(&g, &x));
        prop_assert_eq!(clean, unclean_witness(&g, &x).is_none());
        if let Some(w) = unclean_witness(&g, &x) {
            prop_assert!(w.is_path(&g) && !w.is_trivial());
            prop_assert!(x.contains(&w.signed_start(&g).unwrap()));
            prop_assert!(x.contains(&w.signed_end(&g).unwrap()));
        }
    }

    #[test]
    fn forbidden_edges_are_avoided(g in graph(6, 12), seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let (x, y) = (VertexId(0), VertexId(n - 1));
        let forbidden = EdgeSet::from_edges(g.edge_count(), g.edge_ids().filter(|_| r.gen_bool(0.3)));
        let got = find_path(&g, x, y, &forbidden).unwrap();
        let (h, _) = g.restrict(&forbidden.complement());
        let want = Sign::BOTH.iter().any(|&a| {
            Sign::BOTH
                .iter()
                .any(|&b| signed_path_exists(&h, SignedVertex::new(x, a), SignedVertex::new(y, b)))
        });
        prop_assert_eq!(got.is_some(), want);
        if let Some(p) = got {
            prop_assert!(p.is_path(&g));
            prop_assert!(p.edges.iter().all(|e| !forbidden.contains(*e)));
            prop_assert_eq!((p.start(), p.end()), (x, y));
        }
    }

    #[test]
    fn cycle_edges_have_cycle_witnesses(g in graph(6, 10)) {
        let dec = circular_decomposition(&g);
        for e in g.edge_ids() {
            match cycle_through(&g, e) {
                Some(c) => {
                    prop_assert!(dec.cycle_edges.contains(e));
                    prop_assert_eq!(classify_walk(&g, &c).unwrap(), WalkClass::Cycle);
                    prop_assert!(c.edges.contains(&e));
                }
                None => prop_assert!(!dec.cycle_edges.contains(e)),
            }
        }
    }

    #[test]
    fn matchings_are_deterministic_and_valid(n in 1..=10usize, p in 0.1..0.7f64, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut u = UndirectedGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if r.gen_bool(p) {
                    u.add_edge(a, b).unwrap();
                }
            }
        }
        let m = maximum_matching(&u);
        prop_assert_eq!(maximum_matching(&u).pairs(), m.pairs());
        for (a, b) in m.pairs() {
            prop_assert!(u.has_edge(a, b));
        }
        match perfect_matching(&u) {
            Some(pm) => {
                prop_assert!(pm.is_perfect());
                prop_assert_eq!(pm.len() * 2, n);
            }
            None => prop_assert!(m.len() * 2 < n),
        }
    }
}

mod common;

use proptest::prelude::*;
use rand::Rng;

use bimenger::appendage::{bon, compute_appendage, find_ear_trail, good_path, is_admissible};
use bimenger::oracle::{brute_appendage, enum_paths, is_admissible_brute, signed_path_exists};
use bimenger::{EdgeSet, Sign, SignedVertex};

use common::{edge_clean_instance, rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn appendage_matches_subset_oracle(seed in any::<u64>()) {
        let (g, x, p) = edge_clean_instance(seed, 6, 10);
        let a = compute_appendage(&g, &p, x).unwrap();
        prop_assert_eq!(&a.edges, &brute_appendage(&g, &p, x).unwrap());
        prop_assert!(is_admissible(&g, &a.edges, &p, x).unwrap());
        // maximality: no outside edge can be added
        let inside = a.with_path(g.edge_count());
        for f in g.edge_ids().filter(|f| !inside.contains(*f)) {
            let mut bigger = a.edges.clone();
            bigger.insert(f);
            prop_assert!(!is_admissible(&g, &bigger, &p, x).unwrap());
        }
        prop_assert!(find_ear_trail(&g, &p, x, &a.edges).is_none());
    }

    #[test]
    fn admissibility_matches_oracle_and_is_closed_under_union(seed in any::<u64>()) {
        let (g, x, p) = edge_clean_instance(seed, 6, 10);
        let mut r = rng(seed ^ 0x5eed);
        let outside: Vec<_> = g.edge_ids().filter(|e| !p.edges.contains(e)).collect();
        let mut admissible = Vec::new();
        for _ in 0..24 {
            let a = EdgeSet::from_edges(g.edge_count(), outside.iter().copied().filter(|_| r.gen_bool(0.4)));
            let fast = is_admissible(&g, &a, &p, x).unwrap();
            prop_assert_eq!(fast, is_admissible_brute(&g, &a, &p, x));
            if fast {
                admissible.push(a);
            }
        }
        for a in &admissible {
            for b in &admissible {
                prop_assert!(is_admissible(&g, &a.union(b), &p, x).unwrap());
            }
        }
    }

    #[test]
    fn disjoint_paths_avoid_the_appendage(seed in any::<u64>()) {
        let (g, x, p) = edge_clean_instance(seed, 7, 10);
        let a = compute_appendage(&g, &p, x).unwrap();
        let pe = p.edge_set(g.edge_count());
        for y in g.vertices().filter(|&y| y != x) {
            for q in enum_paths(&g, x, y, 16).unwrap() {
                let qe = q.edge_set(g.edge_count());
                if qe.is_disjoint(&pe) {
                    prop_assert!(qe.is_disjoint(&a.edges));
                }
            }
        }
    }

    #[test]
    fn one_edge_at_the_anchor(seed in any::<u64>()) {
        let (g, x, p) = edge_clean_instance(seed, 7, 10);
        let a = compute_appendage(&g, &p, x).unwrap();
        let inside = a.with_path(g.edge_count());
        let at_x = g.incident(x).iter().filter(|e| inside.contains(**e)).count();
        prop_assert_eq!(at_x, 1);
    }

    #[test]
    fn good_paths_exist(seed in any::<u64>()) {
        let (g, x, p) = edge_clean_instance(seed, 6, 10);
        let a = compute_appendage(&g, &p, x).unwrap();
        let inside = a.with_path(g.edge_count());
        let mut touched: Vec<_> = p.vertices.clone();
        for e in inside.iter() {
            touched.push(g.edge(e).u);
            touched.push(g.edge(e).v);
        }
        touched.sort();
        touched.dedup();
        for &w in touched.iter().filter(|&&w| w != x) {
            for alpha in Sign::BOTH {
                let target = SignedVertex::new(w, alpha);
                let reachable = Sign::BOTH
                    .iter()
                    .any(|&s| signed_path_exists(&g, SignedVertex::new(x, s), target));
                let found = good_path(&g, &a, target).unwrap();
                if reachable {
                    prop_assert!(found.is_some());
                }
                if let Some(q) = found {
                    prop_assert!(q.is_path(&g));
                    prop_assert_eq!(q.signed_end(&g), Some(target));
                    prop_assert!(q.edges.iter().all(|e| inside.contains(*e)));
                }
            }
        }
        let b = bon(&g, &p, x, &a.edges);
        prop_assert!(b.contains(&SignedVertex::new(x, Sign::Plus)));
        prop_assert!(b.contains(&SignedVertex::new(x, Sign::Minus)));
    }
}

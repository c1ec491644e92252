mod common;

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rand::Rng;

use bimenger::menger_edge::{edge_menger, EdgeMengerOutcome};
use bimenger::menger_vertex::{
    build_hat, lift_path, project_trail, relax_endpoints, simplify, vertex_menger, HatEdge, VertexMengerOutcome,
};
use bimenger::oracle::{brute_menger_edge, brute_menger_vertex, closed_trail_brute, enum_paths, enum_xy_paths};
use bimenger::pathfinder::{is_clean, is_edge_clean};
use bimenger::walk::classify_set_walk;
use bimenger::{BidirectedGraph, Sign, SignedVertex, SignedVertexSet, VertexId, Walk};

use common::{graph, graph_with_sets, rng};

fn named(g: &BidirectedGraph, w: &Walk, origin: Option<&[bimenger::EdgeId]>) -> (String, Vec<String>) {
    let edges = w
        .edges
        .iter()
        .map(|&e| {
            let e = origin.map_or(e, |o| o[e.0]);
            format!("{e:?}")
        })
        .collect();
    (g.vertex_name(w.start()).to_string(), edges)
}

fn support(s: &SignedVertexSet) -> BTreeSet<VertexId> {
    s.iter().map(|sv| sv.vertex).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn simplify_keeps_xy_paths((g, x, y) in graph_with_sets(6, 12)) {
        let s = simplify(&g, &x, &y);
        let before: HashSet<_> = enum_xy_paths(&g, &x, &y, 16).unwrap().iter().map(|p| named(&g, p, None)).collect();
        let after: HashSet<_> = enum_xy_paths(&s.graph, &s.x, &y, 16)
            .unwrap()
            .iter()
            .map(|p| named(&s.graph, p, Some(&s.edge_origin)))
            .collect();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn simplified_paths_from_x_to_y_are_xy_paths((g, x, y) in graph_with_sets(6, 12)) {
        let s = simplify(&g, &x, &y);
        let h = &s.graph;
        for u in support(&s.x) {
            for w in support(&y).into_iter().filter(|&w| w != u) {
                for p in enum_paths(h, u, w, 16).unwrap() {
                    let starts = s.x.contains(&p.signed_start(h).unwrap());
                    let ends = y.contains(&p.signed_end(h).unwrap());
                    if starts && ends {
                        prop_assert!(classify_set_walk(h, &s.x, &y, &p), "{}", p.display(h));
                    }
                }
            }
        }
        for v in support(&s.x) {
            prop_assert!(!Sign::BOTH.iter().all(|&a| s.x.contains(&SignedVertex::new(v, a))));
        }
        if is_clean(&g, &x) {
            prop_assert!(is_clean(h, &s.x));
        }
    }

    #[test]
    fn hat_structure_and_round_trip((g, x, y) in graph_with_sets(6, 12)) {
        let s = simplify(&g, &x, &y);
        let red = build_hat(&s.graph, &s.x, &y);
        let hat = &red.hat;
        // resigning in simplify may merge two edges into one signature; the
        // hat has parallel edges exactly then
        let mut pairs = HashSet::new();
        let mut parallel = false;
        for f in hat.edge_ids() {
            let ed = hat.edge(f);
            parallel |= !pairs.insert((ed.u.min(ed.v), ed.u.max(ed.v)));
            if let HatEdge::Internal(v) = red.kinds[f.0] {
                prop_assert_eq!(hat.sign(red.split(v, Sign::Minus), f), Sign::Plus);
                prop_assert_eq!(hat.sign(red.split(v, Sign::Plus), f), Sign::Minus);
            }
        }
        prop_assert_eq!(parallel, s.graph.duplicate_signature().is_some());
        prop_assert_eq!(hat.duplicate_signature().is_some(), parallel);
        for p in enum_xy_paths(&s.graph, &s.x, &y, 16).unwrap() {
            if p.is_trivial() {
                continue;
            }
            let lifted = lift_path(&red, &s.graph, &p).unwrap();
            prop_assert!(lifted.is_path(hat));
            prop_assert_eq!((lifted.start(), lifted.end()), (red.x, red.y));
            prop_assert_eq!(project_trail(&red, &s.graph, &lifted).unwrap(), p);
        }
    }

    #[test]
    fn cleanness_is_edge_cleanness_of_the_hat((g, x, y) in graph_with_sets(6, 12)) {
        let s = simplify(&g, &x, &y);
        let red = build_hat(&s.graph, &s.x, &y);
        let clean = is_clean(&s.graph, &s.x);
        prop_assert_eq!(clean, is_edge_clean(&red.hat, red.x).unwrap());
        prop_assert_eq!(clean, closed_trail_brute(&red.hat, red.x).is_none());
    }

    #[test]
    fn hat_edge_packing_is_vertex_packing((g, x, y) in graph_with_sets(5, 8)) {
        let s = simplify(&g, &x, &y);
        prop_assume!(is_clean(&s.graph, &s.x));
        let red = build_hat(&s.graph, &s.x, &y);
        let vertex = brute_menger_vertex(&s.graph, &s.x, &y, 16).unwrap();
        let edge = brute_menger_edge(&red.hat, red.x, red.y, 40).unwrap();
        // trivial X-Y paths lift to x v^a v^-a y
        prop_assert_eq!(vertex.max_disjoint, edge.max_disjoint);
    }

    #[test]
    fn relaxed_paths_are_signed_paths_of_the_original((g, x, y) in graph_with_sets(6, 10)) {
        let (h, x2, y2) = relax_endpoints(&g, &x, &y);
        prop_assert_eq!(x2.len(), x.len());
        prop_assert_eq!(y2.len(), y.len());
        let relaxed = enum_xy_paths(&h, &x2, &y2, 24).unwrap();
        prop_assert!(relaxed.iter().all(|p| p.len() >= 2));
        let mut direct = 0;
        for a in &x {
            for b in &y {
                if a.vertex == b.vertex {
                    direct += (a.sign == -b.sign) as usize;
                } else {
                    direct += enum_paths(&g, a.vertex, b.vertex, 16)
                        .unwrap()
                        .iter()
                        .filter(|p| p.signed_start(&g) == Some(*a) && p.signed_end(&g) == Some(*b))
                        .count();
                }
            }
        }
        prop_assert_eq!(relaxed.len(), direct);
    }

    #[test]
    fn edge_menger_matches_oracle(g in graph(7, 14), seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let x = VertexId(r.gen_range(0..n));
        let y = VertexId((x.0 + r.gen_range(1..n)) % n);
        prop_assume!(closed_trail_brute(&g, x).is_none());
        let oracle = brute_menger_edge(&g, x, y, 16).unwrap();
        let mut paths: Vec<Walk> = Vec::new();
        loop {
            match edge_menger(&g, x, y, &paths).unwrap() {
                EdgeMengerOutcome::Separator(s) => {
                    prop_assert_eq!(s.len(), paths.len());
                    break;
                }
                EdgeMengerOutcome::Paths(ps) => {
                    prop_assert_eq!(ps.len(), paths.len() + 1);
                    for (p, q) in paths.iter().zip(&ps) {
                        prop_assert_eq!(p.edges[0], q.edges[0]);
                    }
                    paths = ps;
                }
            }
        }
        prop_assert_eq!(paths.len(), oracle.max_disjoint);
    }

    #[test]
    fn vertex_menger_matches_oracle((g, x, y) in graph_with_sets(7, 14)) {
        prop_assume!(is_clean(&g, &x));
        let oracle = brute_menger_vertex(&g, &x, &y, 16).unwrap();
        let mut paths: Vec<Walk> = Vec::new();
        loop {
            match vertex_menger(&g, &x, &y, &paths).unwrap() {
                VertexMengerOutcome::Separator(s) => {
                    prop_assert_eq!(s.len(), paths.len());
                    break;
                }
                VertexMengerOutcome::Paths(ps) => {
                    for (p, q) in paths.iter().zip(&ps) {
                        prop_assert_eq!(p.start(), q.start());
                    }
                    paths = ps;
                }
            }
        }
        prop_assert_eq!(paths.len(), oracle.max_disjoint);
    }
}

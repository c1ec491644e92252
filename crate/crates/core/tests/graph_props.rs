mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use bimenger::format::{parse, serialize, Document};
use bimenger::generators::random_digraph;
use bimenger::graph::{embed_directed, subdivide_parallels};
use bimenger::oracle::{brute_menger_vertex, enum_paths, enum_xy_paths};
use bimenger::walk::{classify_set_walk, classify_walk, inverse_walk};
use bimenger::{BidirectedGraph, DirectedGraph, Sign, SignedVertex, SignedVertexSet, VertexId, Walk};

use common::{graph, graph_with_sets, rng};

/// A random alternating walk of at most `len` edges.
fn random_walk(g: &BidirectedGraph, seed: u64, len: usize) -> Walk {
    let mut r = rng(seed);
    let start = VertexId(r.gen_range(0..g.vertex_count()));
    let mut w = Walk::trivial(start);
    for _ in 0..len {
        let v = w.end();
        let arrival = w.last_oriented().map(|o| g.sign(v, o.edge));
        let next: Vec<_> = g
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| arrival != Some(g.sign(v, e)))
            .collect();
        match next.choose(&mut r) {
            Some(&e) => w.push(g, e),
            None => break,
        }
    }
    w
}

fn subwalk(w: &Walk, i: usize, j: usize) -> Walk {
    Walk {
        vertices: w.vertices[i..=j].to_vec(),
        edges: w.edges[i..j].to_vec(),
    }
}

fn directed_reachable(d: &DirectedGraph, s: usize, t: usize) -> bool {
    let succ = d.successors();
    let mut seen = vec![false; d.vertices.len()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(v) = stack.pop() {
        for &w in &succ[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[t]
}

fn set_names(g: &BidirectedGraph, s: &SignedVertexSet) -> Vec<String> {
    s.iter().map(|sv| g.signed_name(*sv)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inverse_keeps_class(g in graph(8, 16), seed in any::<u64>(), len in 0..10usize) {
        let w = random_walk(&g, seed, len);
        prop_assert!(w.is_walk(&g));
        prop_assert_eq!(classify_walk(&g, &inverse_walk(&w)).unwrap(), classify_walk(&g, &w).unwrap());
        prop_assert_eq!(inverse_walk(&inverse_walk(&w)), w);
    }

    #[test]
    fn reversing_twice_is_identity(g in graph(8, 16)) {
        for e in g.edge_ids() {
            let ed = g.edge(e);
            for tail in [ed.u, ed.v] {
                let o = g.orient(e, tail);
                prop_assert_ne!(o.reversed(), o);
                prop_assert_eq!(o.reversed().reversed(), o);
            }
        }
    }

    #[test]
    fn proper_subwalks_are_not_xy_walks((g, x, y) in graph_with_sets(6, 10)) {
        for p in enum_xy_paths(&g, &x, &y, 16).unwrap() {
            prop_assert!(classify_set_walk(&g, &x, &y, &p));
            for i in 0..=p.len() {
                for j in i..=p.len() {
                    if (i, j) != (0, p.len()) {
                        prop_assert!(!classify_set_walk(&g, &x, &y, &subwalk(&p, i, j)));
                    }
                }
            }
        }
    }

    #[test]
    fn subdivision_is_simple_and_keeps_disjoint_paths((g, x, y) in graph_with_sets(5, 8)) {
        let (h, provenance) = subdivide_parallels(&g);
        prop_assert!(h.duplicate_signature().is_none());
        prop_assert_eq!(h.edge_count(), 2 * g.edge_count());
        prop_assert_eq!(provenance.len(), h.edge_count());
        // original vertices keep their ids
        let before = brute_menger_vertex(&g, &x, &y, 16).unwrap();
        let after = brute_menger_vertex(&h, &x, &y, 32).unwrap();
        prop_assert_eq!(before.max_disjoint, after.max_disjoint);
    }

    #[test]
    fn double_flip_is_identity(g in graph(6, 12), v in 0..6usize) {
        let v = VertexId(v % g.vertex_count());
        let f = g.flip_signs_at_vertex(v).unwrap();
        for e in g.incident(v) {
            prop_assert_eq!(f.sign(v, *e), -g.sign(v, *e));
        }
        prop_assert_eq!(f.flip_signs_at_vertex(v).unwrap(), g);
    }

    #[test]
    fn flipping_at_an_endpoint_keeps_paths(g in graph(6, 12), a in 0..6usize, b in 0..6usize) {
        let n = g.vertex_count();
        let (x, y) = (VertexId(a % n), VertexId(b % n));
        prop_assume!(x != y);
        let f = g.flip_signs_at_vertex(x).unwrap();
        prop_assert_eq!(enum_paths(&g, x, y, 16).unwrap(), enum_paths(&f, x, y, 16).unwrap());
    }

    #[test]
    fn embedding_keeps_reachability(n in 2..=6usize, p in 0.1..0.6f64, seed in any::<u64>()) {
        let d = random_digraph(&mut rng(seed), n, p);
        let g = embed_directed(&d).unwrap();
        for s in 0..n {
            for t in (0..n).filter(|&t| t != s) {
                // leaving with - follows arcs forwards
                let forward = SignedVertex::new(VertexId(s), Sign::Minus);
                let found = enum_paths(&g, VertexId(s), VertexId(t), 16)
                    .unwrap()
                    .iter()
                    .any(|p| p.signed_start(&g) == Some(forward));
                prop_assert_eq!(found, directed_reachable(&d, s, t));
            }
        }
    }

    #[test]
    fn text_format_round_trips((g, x, y) in graph_with_sets(8, 16), seed in any::<u64>()) {
        let mut doc = Document::new(g.clone());
        doc.sets.insert("X".into(), x);
        doc.sets.insert("Y".into(), y);
        let w = random_walk(&g, seed, 5);
        doc.paths.push(w.clone());
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back.graph.canonical(), g.canonical());
        prop_assert_eq!(
            set_names(&back.graph, back.set("X").unwrap()),
            set_names(&g, doc.set("X").unwrap())
        );
        prop_assert_eq!(back.paths[0].display(&back.graph), w.display(&g));
    }
}

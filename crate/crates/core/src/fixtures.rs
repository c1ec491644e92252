//! Small named graphs used throughout the tests and the CLI.

use std::collections::BTreeMap;

use crate::graph::{BidirectedGraph, GraphBuilder, Sign, SignedVertex, SignedVertexSet};

use Sign::{Minus as M, Plus as P};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: BidirectedGraph,
    pub sets: BTreeMap<String, SignedVertexSet>,
}

fn build(vertices: &[&str], edges: &[(&str, &str, Sign, &str, Sign)]) -> BidirectedGraph {
    let mut b = GraphBuilder::new();
    for v in vertices {
        b.add_vertex(v).expect("fixture vertex");
    }
    for &(name, u, su, v, sv) in edges {
        b.add_edge_by_name(name, u, su, v, sv).expect("fixture edge");
    }
    b.build().expect("fixture graph")
}

pub fn signed_set(graph: &BidirectedGraph, items: &[(&str, Sign)]) -> SignedVertexSet {
    items
        .iter()
        .map(|(n, s)| SignedVertex::new(graph.vertex_by_name(n).expect("fixture vertex"), *s))
        .collect()
}

/// `u - w`, sign `-` at `u`, `+` at `w`.
pub fn edge() -> BidirectedGraph {
    build(&["u", "w"], &[("e", "u", M, "w", P)])
}

/// `u - v - w` alternating at `v`.
pub fn path2() -> BidirectedGraph {
    build(
        &["u", "v", "w"],
        &[("e1", "u", M, "v", P), ("e2", "v", M, "w", P)],
    )
}

/// Like [`path2`] but both edges carry `+` at `v`.
pub fn nopath() -> BidirectedGraph {
    build(
        &["u", "v", "w"],
        &[("e1", "u", M, "v", P), ("e2", "v", P, "w", P)],
    )
}

/// Two parallel `u`–`w` edges with opposite signatures, forming a cycle.
pub fn two_cycle() -> BidirectedGraph {
    build(&["u", "w"], &[("f", "u", M, "w", P), ("g", "w", M, "u", P)])
}

/// Two disjoint paths exist, but none of the two-path families uses `(x1,+)`.
pub fn fig6() -> (BidirectedGraph, SignedVertexSet, SignedVertexSet) {
    let g = build(
        &["x1", "x2", "y1", "y2"],
        &[
            ("x1y1", "x1", M, "y1", P),
            ("x1y2", "x1", P, "y2", M),
            ("x2y2", "x2", P, "y2", M),
        ],
    );
    let x = signed_set(&g, &[("x1", P), ("x1", M), ("x2", P)]);
    let y = signed_set(&g, &[("y1", P), ("y2", M)]);
    (g, x, y)
}

/// Four two-edge routes from `x'` to `x`; no `x'`–`x'` path, and no three
/// edges separate `x'` from `x`.
pub fn ext() -> BidirectedGraph {
    let names: Vec<String> = (1..=4).map(|i| format!("a{i}")).collect();
    let mut vertices = vec!["x'", "x"];
    vertices.extend(names.iter().map(String::as_str));
    let mut b = GraphBuilder::new();
    for v in &vertices {
        b.add_vertex(v).expect("fixture vertex");
    }
    for a in &names {
        b.add_edge_by_name(&format!("x'{a}"), "x'", M, a, P)
            .expect("fixture edge");
        b.add_edge_by_name(&format!("{a}x"), a, M, "x", P)
            .expect("fixture edge");
    }
    b.build().expect("fixture graph")
}

/// A lollipop at `m`: a `u`–`w` trail runs around the loop `m a b m`, but
/// there is no `u`–`w` path.
pub fn fig8() -> BidirectedGraph {
    build(
        &["u", "m", "a", "b", "w"],
        &[
            ("um", "u", M, "m", P),
            ("ma", "m", M, "a", P),
            ("ab", "a", M, "b", P),
            ("bm", "b", M, "m", M),
            ("mw", "m", P, "w", P),
        ],
    )
}

/// Source graph of the vertex-split illustration.
pub fn fig5() -> (BidirectedGraph, SignedVertexSet, SignedVertexSet) {
    let g = build(
        &["v", "x1", "x2", "y1", "y2"],
        &[
            ("y1v", "y1", M, "v", P),
            ("vy2", "v", M, "y2", P),
            ("y1y2", "y1", M, "y2", P),
            ("y1x1", "y1", M, "x1", P),
            ("x2v_a", "x2", M, "v", M),
            ("x2v_b", "x2", M, "v", P),
        ],
    );
    let x = signed_set(&g, &[("x1", M), ("x2", M)]);
    let y = signed_set(&g, &[("y1", M), ("y2", P)]);
    (g, x, y)
}

fn sets(pairs: Vec<(&str, SignedVertexSet)>) -> BTreeMap<String, SignedVertexSet> {
    pairs.into_iter().map(|(n, s)| (n.to_string(), s)).collect()
}

/// Every fixture by name.
pub fn all() -> Vec<Fixture> {
    let (fig6_g, fig6_x, fig6_y) = fig6();
    let (fig5_g, fig5_x, fig5_y) = fig5();
    let ext_g = ext();
    let ext_x = signed_set(&ext_g, &[("x'", M)]);
    vec![
        Fixture {
            name: "edge",
            graph: edge(),
            sets: BTreeMap::new(),
        },
        Fixture {
            name: "path2",
            graph: path2(),
            sets: BTreeMap::new(),
        },
        Fixture {
            name: "nopath",
            graph: nopath(),
            sets: BTreeMap::new(),
        },
        Fixture {
            name: "two-cycle",
            graph: two_cycle(),
            sets: BTreeMap::new(),
        },
        Fixture {
            name: "fig5",
            graph: fig5_g,
            sets: sets(vec![("X", fig5_x), ("Y", fig5_y)]),
        },
        Fixture {
            name: "fig6",
            graph: fig6_g,
            sets: sets(vec![("X", fig6_x), ("Y", fig6_y)]),
        },
        Fixture {
            name: "ext",
            graph: ext_g,
            sets: sets(vec![("X", ext_x)]),
        },
        Fixture {
            name: "fig8",
            graph: fig8(),
            sets: BTreeMap::new(),
        },
    ]
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

//! Strong and circular connectivity.

use std::collections::BTreeSet;

use crate::graph::{BidirectedGraph, EdgeId, EdgeSet, Sign, SignedVertex, VertexId};
use crate::pathfinder::find_signed_path;
use crate::walk::Walk;

/// Edges lying on a cycle and the vertex partition they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularDecomposition {
    pub cycle_edges: EdgeSet,
    pub components: Vec<BTreeSet<VertexId>>,
}

fn has_path(graph: &BidirectedGraph, from: SignedVertex, to: SignedVertex) -> bool {
    let none = EdgeSet::empty(graph.edge_count());
    find_signed_path(graph, from, to, &none)
        .expect("distinct endpoints")
        .is_some()
}

/// Every pair `v != w` has signs `α, β` with both a `(v,α)`–`(w,β)` and a
/// `(v,-α)`–`(w,-β)` path.
pub fn is_strongly_connected(graph: &BidirectedGraph) -> bool {
    let vs: Vec<VertexId> = graph.vertices().collect();
    for (i, &v) in vs.iter().enumerate() {
        for &w in &vs[i + 1..] {
            let ok = Sign::BOTH.iter().any(|&a| {
                Sign::BOTH.iter().any(|&b| {
                    has_path(graph, SignedVertex::new(v, a), SignedVertex::new(w, b))
                        && has_path(graph, SignedVertex::new(v, -a), SignedVertex::new(w, -b))
                })
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// A cycle through `e`, if there is one: a path in `B - e` between the
/// endpoints of `e` leaving and entering with the signs opposite to `e`'s.
pub fn cycle_through(graph: &BidirectedGraph, e: EdgeId) -> Option<Walk> {
    let ed = graph.edge(e);
    let forbidden = EdgeSet::from_edges(graph.edge_count(), [e]);
    let path = find_signed_path(
        graph,
        SignedVertex::new(ed.v, -ed.sign_v),
        SignedVertex::new(ed.u, -ed.sign_u),
        &forbidden,
    )
    .expect("distinct endpoints")?;
    // close it: u e v P u
    let mut cycle = Walk {
        vertices: vec![ed.u, ed.v],
        edges: vec![e],
    };
    cycle = cycle.join(&path);
    Some(cycle)
}

pub fn circular_decomposition(graph: &BidirectedGraph) -> CircularDecomposition {
    let cycle_edges = EdgeSet::from_edges(
        graph.edge_count(),
        graph.edge_ids().filter(|&e| cycle_through(graph, e).is_some()),
    );
    let n = graph.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = BTreeSet::new();
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(v) = stack.pop() {
            members.insert(VertexId(v));
            for &e in graph.incident(VertexId(v)) {
                if cycle_edges.contains(e) {
                    let w = graph.edge(e).other(VertexId(v)).0;
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
        }
        components.push(members);
    }
    CircularDecomposition {
        cycle_edges,
        components,
    }
}

pub fn is_circularly_connected(graph: &BidirectedGraph) -> bool {
    circular_decomposition(graph).components.len() <= 1
}

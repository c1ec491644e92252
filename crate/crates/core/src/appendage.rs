//! Admissible edge sets and appendages of paths.

use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, EdgeSet, Sign, SignedVertex, SignedVertexSet, VertexId};
use crate::pathfinder::{find_path_within, find_set_trail, Orientation};
use crate::walk::{Path, Trail};

/// The maximal `(P, anchor)`-admissible edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Appendage {
    pub base_path: Path,
    pub anchor: VertexId,
    pub edges: EdgeSet,
}

impl Appendage {
    /// `A ∪ E(P)`.
    pub fn with_path(&self, edge_count: usize) -> EdgeSet {
        self.edges.union(&self.base_path.edge_set(edge_count))
    }
}

fn check_base(graph: &BidirectedGraph, p: &Path, x: VertexId) -> Result<()> {
    if !p.is_path(graph) {
        return Err(Error::contract("base walk is not a path"));
    }
    if p.start() != x {
        return Err(Error::contract("anchor must be the start of the path"));
    }
    Ok(())
}

fn both(x: VertexId) -> SignedVertexSet {
    Sign::BOTH.iter().map(|&s| SignedVertex::new(x, s)).collect()
}

/// Whether every orientation of every edge of `a` starts a trail to `x`
/// inside `a ∪ E(P)`.
pub fn is_admissible(graph: &BidirectedGraph, a: &EdgeSet, p: &Path, x: VertexId) -> Result<bool> {
    check_base(graph, p, x)?;
    let within = a.union(&p.edge_set(graph.edge_count()));
    let nu = Orientation::lexicographic(graph);
    let target = both(x);
    for e in a.iter() {
        let ed = graph.edge(e);
        for head in [ed.u, ed.v] {
            if head == x {
                continue;
            }
            let mut rest = within.clone();
            rest.remove(e);
            let from: SignedVertexSet = [SignedVertex::new(head, -graph.sign(head, e))]
                .into_iter()
                .collect();
            if find_set_trail(graph, &rest, &from, &target, &nu).is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Signed vertices from which an ear may leave: both signs at `v`, plus
/// `(w, -σ(w,e))` for every oriented edge of `A` and every forward edge of `P`
/// ending in `w`.
pub fn bon(graph: &BidirectedGraph, p: &Path, v: VertexId, a: &EdgeSet) -> SignedVertexSet {
    let mut out = both(v);
    for e in a.iter() {
        let ed = graph.edge(e);
        out.insert(SignedVertex::new(ed.u, -ed.sign_u));
        out.insert(SignedVertex::new(ed.v, -ed.sign_v));
    }
    for oe in p.oriented_edges() {
        out.insert(SignedVertex::new(oe.head, -graph.sign(oe.head, oe.edge)));
    }
    out
}

/// A nontrivial trail outside `A ∪ E(P)` with both signed ends in the Bon set.
pub fn find_ear_trail(graph: &BidirectedGraph, p: &Path, v: VertexId, a: &EdgeSet) -> Option<Trail> {
    let taken = a.union(&p.edge_set(graph.edge_count()));
    let b = bon(graph, p, v, a);
    let nu = Orientation::lexicographic(graph);
    let t = find_set_trail(graph, &taken.complement(), &b, &b, &nu)?;
    assert!(t.edges.iter().all(|&e| !taken.contains(e)));
    Some(t)
}

/// Grows an admissible set from the empty set, first by path edges that a
/// trail from `v` can traverse backwards, then by ear trails, until neither
/// applies. Meaningful when `v` is edge-clean.
pub fn compute_appendage(graph: &BidirectedGraph, p: &Path, v: VertexId) -> Result<Appendage> {
    check_base(graph, p, v)?;
    let m = graph.edge_count();
    let path_edges = p.edge_set(m);
    let mut a = EdgeSet::empty(m);
    let nu = Orientation::lexicographic(graph);
    let start = both(v);
    for _ in 0..=m {
        let within = a.union(&path_edges);
        let mut grew = false;
        for oe in p.oriented_edges() {
            if a.contains(oe.edge) {
                continue;
            }
            let mut rest = within.clone();
            rest.remove(oe.edge);
            let to: SignedVertexSet = [SignedVertex::new(oe.head, -graph.sign(oe.head, oe.edge))]
                .into_iter()
                .collect();
            if find_set_trail(graph, &rest, &start, &to, &nu).is_some() {
                a.insert(oe.edge);
                grew = true;
                break;
            }
        }
        if grew {
            continue;
        }
        match find_ear_trail(graph, p, v, &a) {
            Some(t) => {
                for e in t.edges {
                    a.insert(e);
                }
            }
            None => {
                return Ok(Appendage {
                    base_path: p.clone(),
                    anchor: v,
                    edges: a,
                })
            }
        }
    }
    Err(Error::internal("appendage construction did not terminate"))
}

/// A path from the anchor to `target` inside `A ∪ E(P)`.
pub fn good_path(
    graph: &BidirectedGraph,
    app: &Appendage,
    target: SignedVertex,
) -> Result<Option<Path>> {
    let within = app.with_path(graph.edge_count());
    find_path_within(
        graph,
        &within,
        app.anchor,
        &Sign::BOTH,
        target.vertex,
        &[target.sign],
    )
}

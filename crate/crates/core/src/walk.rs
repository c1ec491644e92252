//! Walks, trails, paths and cycles in a bidirected graph.
//!
//! A walk is stored as its vertex sequence plus the underlying edge of each
//! step; the orientation of step `j` is `vertices[j] -> vertices[j + 1]`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{
    support, BidirectedGraph, EdgeId, EdgeSet, OrientedEdge, Sign, SignedVertex, SignedVertexSet,
    VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// A walk known to be a path.
pub type Path = Walk;
/// A walk known to be a trail.
pub type Trail = Walk;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WalkClass {
    Invalid,
    Walk,
    Trail,
    Path,
    Cycle,
}

impl Walk {
    pub fn trivial(v: VertexId) -> Self {
        Walk {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a walk from a start vertex and a list of edges, following each
    /// edge to its other endpoint. Fails if an edge is not incident to the
    /// current vertex.
    pub fn from_edges(graph: &BidirectedGraph, start: VertexId, edges: &[EdgeId]) -> Result<Self> {
        let mut vertices = vec![start];
        let mut cur = start;
        for &e in edges {
            if !graph.has_edge(e) {
                return Err(Error::UnknownEdge(format!("#{}", e.0)));
            }
            let edge = graph.edge(e);
            if !edge.is_incident(cur) {
                return Err(Error::contract(format!(
                    "edge `{}` is not incident to `{}`",
                    graph.edge_name(e),
                    graph.vertex_name(cur)
                )));
            }
            cur = edge.other(cur);
            vertices.push(cur);
        }
        Ok(Walk {
            vertices,
            edges: edges.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("walks have a vertex")
    }

    pub fn oriented_edges(&self) -> impl Iterator<Item = OrientedEdge> + '_ {
        self.edges.iter().enumerate().map(|(j, &e)| OrientedEdge {
            edge: e,
            tail: self.vertices[j],
            head: self.vertices[j + 1],
        })
    }

    pub fn first_oriented(&self) -> Option<OrientedEdge> {
        self.oriented_edges().next()
    }

    pub fn last_oriented(&self) -> Option<OrientedEdge> {
        self.oriented_edges().last()
    }

    /// Signed startvertex; `None` for trivial walks.
    pub fn signed_start(&self, graph: &BidirectedGraph) -> Option<SignedVertex> {
        let e = *self.edges.first()?;
        Some(SignedVertex::new(self.start(), graph.sign(self.start(), e)))
    }

    /// Signed endvertex; `None` for trivial walks.
    pub fn signed_end(&self, graph: &BidirectedGraph) -> Option<SignedVertex> {
        let e = *self.edges.last()?;
        Some(SignedVertex::new(self.end(), graph.sign(self.end(), e)))
    }

    pub fn inverse(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        Walk { vertices, edges }
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self, edge_count: usize) -> EdgeSet {
        EdgeSet::from_edges(edge_count, self.edges.iter().copied())
    }

    pub fn internal_vertices(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    /// Position of the first occurrence of `v`.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Subwalk from the start up to position `i` (inclusive vertex index).
    pub fn prefix(&self, i: usize) -> Walk {
        Walk {
            vertices: self.vertices[..=i].to_vec(),
            edges: self.edges[..i].to_vec(),
        }
    }

    /// Subwalk from position `i` to the end.
    pub fn suffix(&self, i: usize) -> Walk {
        Walk {
            vertices: self.vertices[i..].to_vec(),
            edges: self.edges[i..].to_vec(),
        }
    }

    /// `P v`: prefix ending at the first occurrence of `v`.
    pub fn up_to(&self, v: VertexId) -> Option<Walk> {
        self.position(v).map(|i| self.prefix(i))
    }

    /// `v P`: suffix starting at the first occurrence of `v`.
    pub fn from_vertex(&self, v: VertexId) -> Option<Walk> {
        self.position(v).map(|i| self.suffix(i))
    }

    /// Concatenation at a shared vertex: `self` must end where `other` starts.
    pub fn join(&self, other: &Walk) -> Walk {
        assert_eq!(self.end(), other.start(), "walks do not meet");
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Walk { vertices, edges }
    }

    /// Appends one step along `e`.
    pub fn push(&mut self, graph: &BidirectedGraph, e: EdgeId) {
        let next = graph.edge(e).other(self.end());
        self.edges.push(e);
        self.vertices.push(next);
    }

    pub fn has_distinct_edges(&self) -> bool {
        let set: BTreeSet<_> = self.edges.iter().collect();
        set.len() == self.edges.len()
    }

    pub fn has_distinct_vertices(&self) -> bool {
        self.vertex_set().len() == self.vertices.len()
    }

    pub fn is_walk(&self, graph: &BidirectedGraph) -> bool {
        classify_walk(graph, self).map_or(false, |c| c != WalkClass::Invalid)
    }

    pub fn is_trail(&self, graph: &BidirectedGraph) -> bool {
        is_valid_walk(graph, self) && self.has_distinct_edges()
    }

    pub fn is_path(&self, graph: &BidirectedGraph) -> bool {
        is_valid_walk(graph, self) && self.has_distinct_edges() && self.has_distinct_vertices()
    }

    /// Human-readable alternating vertex/edge sequence.
    pub fn display(&self, graph: &BidirectedGraph) -> String {
        let mut s = graph.vertex_name(self.vertices[0]).to_string();
        for (j, &e) in self.edges.iter().enumerate() {
            s.push(' ');
            s.push_str(graph.edge_name(e));
            s.push(' ');
            s.push_str(graph.vertex_name(self.vertices[j + 1]));
        }
        s
    }
}

fn check_ids(graph: &BidirectedGraph, w: &Walk) -> Result<()> {
    if w.vertices.len() != w.edges.len() + 1 {
        return Err(Error::contract("walk must have one more vertex than edges"));
    }
    if let Some(v) = w.vertices.iter().find(|v| !graph.has_vertex(**v)) {
        return Err(Error::UnknownVertex(format!("#{}", v.0)));
    }
    if let Some(e) = w.edges.iter().find(|e| !graph.has_edge(**e)) {
        return Err(Error::UnknownEdge(format!("#{}", e.0)));
    }
    Ok(())
}

fn is_valid_walk(graph: &BidirectedGraph, w: &Walk) -> bool {
    if check_ids(graph, w).is_err() {
        return false;
    }
    for (j, &e) in w.edges.iter().enumerate() {
        let edge = graph.edge(e);
        let (a, b) = (w.vertices[j], w.vertices[j + 1]);
        if !((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)) {
            return false;
        }
    }
    for i in 1..w.edges.len() {
        let v = w.vertices[i];
        if graph.sign(v, w.edges[i - 1]) == graph.sign(v, w.edges[i]) {
            return false;
        }
    }
    true
}

/// Strongest class the candidate belongs to.
pub fn classify_walk(graph: &BidirectedGraph, w: &Walk) -> Result<WalkClass> {
    check_ids(graph, w)?;
    if !is_valid_walk(graph, w) {
        return Ok(WalkClass::Invalid);
    }
    if !w.has_distinct_edges() {
        return Ok(WalkClass::Walk);
    }
    if w.has_distinct_vertices() {
        return Ok(WalkClass::Path);
    }
    let l = w.len();
    if l >= 2 && w.start() == w.end() {
        let inner: BTreeSet<_> = w.vertices[..l].iter().collect();
        let closes = graph.sign(w.start(), w.edges[0]) != graph.sign(w.end(), w.edges[l - 1]);
        if inner.len() == l && closes {
            return Ok(WalkClass::Cycle);
        }
    }
    Ok(WalkClass::Trail)
}

pub fn inverse_walk(w: &Walk) -> Walk {
    w.inverse()
}

fn is_trivial_xy(x: &SignedVertexSet, y: &SignedVertexSet, v: VertexId) -> bool {
    Sign::BOTH.iter().any(|&a| {
        x.contains(&SignedVertex::new(v, a)) && y.contains(&SignedVertex::new(v, -a))
    })
}

/// Whether `w` is an X–Y walk.
pub fn classify_set_walk(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    w: &Walk,
) -> bool {
    if !is_valid_walk(graph, w) {
        return false;
    }
    if w.is_trivial() {
        return is_trivial_xy(x, y, w.start());
    }
    let start = w.signed_start(graph).expect("nontrivial");
    let end = w.signed_end(graph).expect("nontrivial");
    if !x.contains(&start) || !y.contains(&end) {
        return false;
    }
    let xs = support(x);
    let ys = support(y);
    if w
        .internal_vertices()
        .iter()
        .any(|v| xs.contains(v) || ys.contains(v))
    {
        return false;
    }
    !is_trivial_xy(x, y, w.start()) && !is_trivial_xy(x, y, w.end())
}

pub fn is_set_path(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    w: &Walk,
) -> bool {
    w.has_distinct_vertices() && w.has_distinct_edges() && classify_set_walk(graph, x, y, w)
}

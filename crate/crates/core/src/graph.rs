//! Bidirected graphs: an undirected multigraph whose half-edges each carry a sign.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Neg;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Index of a vertex inside one particular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an edge inside one particular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A vertex together with the sign with which a walk leaves or enters it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedVertex {
    pub vertex: VertexId,
    pub sign: Sign,
}

impl SignedVertex {
    pub fn new(vertex: VertexId, sign: Sign) -> Self {
        SignedVertex { vertex, sign }
    }

    pub fn flipped(self) -> Self {
        SignedVertex::new(self.vertex, -self.sign)
    }
}

pub type SignedVertexSet = BTreeSet<SignedVertex>;

/// Vertices of a signed vertex set.
pub fn support(set: &SignedVertexSet) -> BTreeSet<VertexId> {
    set.iter().map(|s| s.vertex).collect()
}

/// An edge traversed from `tail` to `head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedEdge {
    pub edge: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl OrientedEdge {
    pub fn reversed(self) -> Self {
        OrientedEdge {
            edge: self.edge,
            tail: self.head,
            head: self.tail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign_u: Sign,
    pub sign_v: Sign,
}

impl Edge {
    /// Sign of the half-edge at `w`. Panics if `w` is not an endpoint.
    pub fn sign_at(&self, w: VertexId) -> Sign {
        if w == self.u {
            self.sign_u
        } else if w == self.v {
            self.sign_v
        } else {
            panic!("vertex {w:?} is not an endpoint of this edge")
        }
    }

    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            debug_assert_eq!(w, self.v);
            self.u
        }
    }

    pub fn is_incident(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    /// Endpoints and signs ordered by vertex index, used to detect duplicates.
    fn signature(&self) -> (VertexId, Sign, VertexId, Sign) {
        if self.u <= self.v {
            (self.u, self.sign_u, self.v, self.sign_v)
        } else {
            (self.v, self.sign_v, self.u, self.sign_u)
        }
    }
}

/// Immutable bidirected graph. Vertex and edge names are opaque strings;
/// ids are indices in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidirectedGraph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    edges: Vec<Edge>,
    incident: Vec<Vec<EdgeId>>,
    vertex_lookup: HashMap<String, VertexId>,
    edge_lookup: HashMap<String, EdgeId>,
}

impl BidirectedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_lookup.get(name).copied()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        v.0 < self.vertex_names.len()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len()
    }

    /// Edges incident to `v`, in id order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.0]
    }

    pub fn sign(&self, v: VertexId, e: EdgeId) -> Sign {
        self.edges[e.0].sign_at(v)
    }

    /// The orientation of `e` that starts at `tail`.
    pub fn orient(&self, e: EdgeId, tail: VertexId) -> OrientedEdge {
        let edge = &self.edges[e.0];
        OrientedEdge {
            edge: e,
            tail,
            head: edge.other(tail),
        }
    }

    pub fn signed_name(&self, s: SignedVertex) -> String {
        format!("{}:{}", self.vertex_name(s.vertex), s.sign)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    /// True when no two distinct edges share both endpoints and both signs.
    pub fn duplicate_signature(&self) -> Option<(EdgeId, EdgeId)> {
        let mut seen = HashMap::new();
        for (i, edge) in self.edges.iter().enumerate() {
            if let Some(&j) = seen.get(&edge.signature()) {
                return Some((EdgeId(j), EdgeId(i)));
            }
            seen.insert(edge.signature(), i);
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.duplicate_signature().is_none()
    }

    /// Rebuilds the graph with edges and vertices in lexicographic name order.
    pub fn canonical(&self) -> BidirectedGraph {
        let mut vnames: Vec<&str> = self.vertex_names.iter().map(String::as_str).collect();
        vnames.sort_unstable();
        let mut b = GraphBuilder::new();
        for name in vnames {
            b.add_vertex(name).expect("names are unique");
        }
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &c| self.edge_names[a].cmp(&self.edge_names[c]));
        for i in order {
            let e = &self.edges[i];
            b.add_edge_by_name(
                &self.edge_names[i],
                &self.vertex_names[e.u.0],
                e.sign_u,
                &self.vertex_names[e.v.0],
                e.sign_v,
            )
            .expect("edges of a valid graph");
        }
        b.build_relaxed()
    }

    /// Copy with every half-edge at `v` negated.
    pub fn flip_signs_at_vertex(&self, v: VertexId) -> Result<BidirectedGraph> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
        Ok(self.map_signs_at(v, |s| -s))
    }

    /// Copy with every half-edge at `v` set to `sign`.
    pub fn with_signs_at_vertex(&self, v: VertexId, sign: Sign) -> BidirectedGraph {
        self.map_signs_at(v, |_| sign)
    }

    fn map_signs_at(&self, v: VertexId, f: impl Fn(Sign) -> Sign) -> BidirectedGraph {
        let mut g = self.clone();
        for e in &self.incident[v.0] {
            let edge = &mut g.edges[e.0];
            if edge.u == v {
                edge.sign_u = f(edge.sign_u);
            } else {
                edge.sign_v = f(edge.sign_v);
            }
        }
        g
    }

    /// Copy keeping only the edges in `keep` (vertices and their ids are unchanged,
    /// edge ids are renumbered). Returns the new graph and the old id of every new edge.
    pub fn restrict(&self, keep: &EdgeSet) -> (BidirectedGraph, Vec<EdgeId>) {
        let mut b = GraphBuilder::new();
        for name in &self.vertex_names {
            b.add_vertex(name).expect("unique");
        }
        let mut origin = Vec::new();
        for e in keep.iter() {
            let edge = &self.edges[e.0];
            b.add_edge(&self.edge_names[e.0], edge.u, edge.sign_u, edge.v, edge.sign_v)
                .expect("valid edge");
            origin.push(e);
        }
        (b.build_relaxed(), origin)
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }
}

/// A set of edges of one graph, stored as a bit mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

impl EdgeSet {
    pub fn empty(edge_count: usize) -> Self {
        EdgeSet {
            bits: FixedBitSet::with_capacity(edge_count),
        }
    }

    pub fn full(edge_count: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(edge_count);
        bits.insert_range(..);
        EdgeSet { bits }
    }

    pub fn from_edges(edge_count: usize, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut s = EdgeSet::empty(edge_count);
        for e in edges {
            s.insert(e);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.contains(e.0)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.bits.insert(e.0);
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.bits.set(e.0, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones().map(EdgeId)
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &EdgeSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSet { bits }
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

/// Incremental constructor for [`BidirectedGraph`]. Ids follow insertion order.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    edges: Vec<Edge>,
    vertex_lookup: HashMap<String, VertexId>,
    edge_lookup: HashMap<String, EdgeId>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.vertex_lookup.contains_key(name) {
            return Err(Error::DuplicateId(name.to_string()));
        }
        let id = VertexId(self.vertex_names.len());
        self.vertex_names.push(name.to_string());
        self.vertex_lookup.insert(name.to_string(), id);
        Ok(id)
    }

    /// Adds a vertex named `base`, or `base'`, `base''`, ... if taken.
    pub fn add_fresh_vertex(&mut self, base: &str) -> VertexId {
        let name = fresh_name(base, |n| self.vertex_lookup.contains_key(n));
        self.add_vertex(&name).expect("fresh")
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn add_edge(
        &mut self,
        name: &str,
        u: VertexId,
        sign_u: Sign,
        v: VertexId,
        sign_v: Sign,
    ) -> Result<EdgeId> {
        if self.edge_lookup.contains_key(name) {
            return Err(Error::DuplicateId(name.to_string()));
        }
        if u.0 >= self.vertex_names.len() || v.0 >= self.vertex_names.len() {
            return Err(Error::UnknownVertex(format!("edge {name}")));
        }
        if u == v {
            return Err(Error::Loop(name.to_string()));
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            u,
            v,
            sign_u,
            sign_v,
        });
        self.edge_names.push(name.to_string());
        self.edge_lookup.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_fresh_edge(
        &mut self,
        base: &str,
        u: VertexId,
        sign_u: Sign,
        v: VertexId,
        sign_v: Sign,
    ) -> Result<EdgeId> {
        let name = fresh_name(base, |n| self.edge_lookup.contains_key(n));
        self.add_edge(&name, u, sign_u, v, sign_v)
    }

    pub fn add_edge_by_name(
        &mut self,
        name: &str,
        u: &str,
        sign_u: Sign,
        v: &str,
        sign_v: Sign,
    ) -> Result<EdgeId> {
        let uu = self
            .vertex(u)
            .ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
        let vv = self
            .vertex(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        self.add_edge(name, uu, sign_u, vv, sign_v)
    }

    /// Builds the graph, rejecting two edges with identical endpoints and signs.
    pub fn build(self) -> Result<BidirectedGraph> {
        let g = self.build_relaxed();
        if let Some((a, b)) = g.duplicate_signature() {
            return Err(Error::DuplicateSignature(
                g.edge_name(a).to_string(),
                g.edge_name(b).to_string(),
            ));
        }
        Ok(g)
    }

    /// Builds the graph without the duplicate-signature check. Auxiliary
    /// constructions may legitimately produce such parallel edges.
    pub fn build_relaxed(self) -> BidirectedGraph {
        let mut incident = vec![Vec::new(); self.vertex_names.len()];
        for (i, e) in self.edges.iter().enumerate() {
            incident[e.u.0].push(EdgeId(i));
            incident[e.v.0].push(EdgeId(i));
        }
        BidirectedGraph {
            vertex_names: self.vertex_names,
            edge_names: self.edge_names,
            edges: self.edges,
            incident,
            vertex_lookup: self.vertex_lookup,
            edge_lookup: self.edge_lookup,
        }
    }
}

fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut name = base.to_string();
    while taken(&name) {
        name.push('\'');
    }
    name
}

/// Replaces every edge by an alternating two-edge gadget through a fresh vertex.
/// The result never has two edges with the same endpoints and signs. The returned
/// vector gives, for every new edge, the original edge it came from.
pub fn subdivide_parallels(graph: &BidirectedGraph) -> (BidirectedGraph, Vec<EdgeId>) {
    let mut b = GraphBuilder::new();
    for name in graph.vertex_names() {
        b.add_vertex(name).expect("unique");
    }
    let mut provenance = Vec::with_capacity(2 * graph.edge_count());
    for e in graph.edge_ids() {
        let edge = graph.edge(e);
        let name = graph.edge_name(e);
        let mid = b.add_fresh_vertex(&format!("{name}~mid"));
        b.add_fresh_edge(&format!("{name}~1"), edge.u, edge.sign_u, mid, Sign::Plus)
            .expect("valid");
        b.add_fresh_edge(&format!("{name}~2"), mid, Sign::Minus, edge.v, edge.sign_v)
            .expect("valid");
        provenance.push(e);
        provenance.push(e);
    }
    (b.build_relaxed(), provenance)
}

/// A loop-free directed multigraph with named vertices and arcs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DirectedGraph {
    pub vertices: Vec<String>,
    /// `(arc name, tail index, head index)`
    pub arcs: Vec<(String, usize, usize)>,
}

impl DirectedGraph {
    pub fn new(vertex_count: usize) -> Self {
        DirectedGraph {
            vertices: (0..vertex_count).map(|i| format!("v{i}")).collect(),
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, tail: usize, head: usize) {
        let name = format!("a{}", self.arcs.len());
        self.arcs.push((name, tail, head));
    }

    /// Out-neighbour lists.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (_, t, h) in &self.arcs {
            out[*t].push(*h);
        }
        out
    }
}

/// Views a digraph as a bidirected graph: arc `x -> y` gets sign `-` at `x`
/// and `+` at `y`. Vertex and edge ids coincide with the digraph's indices.
pub fn embed_directed(d: &DirectedGraph) -> Result<BidirectedGraph> {
    let mut b = GraphBuilder::new();
    for name in &d.vertices {
        b.add_vertex(name)?;
    }
    for (name, t, h) in &d.arcs {
        b.add_edge(name, VertexId(*t), Sign::Minus, VertexId(*h), Sign::Plus)?;
    }
    Ok(b.build_relaxed())
}

/// Renders a signed-vertex set as `name:sign` tokens.
pub fn format_signed_set(graph: &BidirectedGraph, set: &SignedVertexSet) -> String {
    set.iter()
        .map(|s| graph.signed_name(*s))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Groups a signed-vertex set by vertex.
pub fn signs_by_vertex(set: &SignedVertexSet) -> BTreeMap<VertexId, Vec<Sign>> {
    let mut out: BTreeMap<VertexId, Vec<Sign>> = BTreeMap::new();
    for s in set {
        out.entry(s.vertex).or_default().push(s.sign);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_parallel() -> BidirectedGraph {
        let mut b = GraphBuilder::new();
        let u = b.add_vertex("u").unwrap();
        let v = b.add_vertex("v").unwrap();
        b.add_edge("e1", u, Sign::Minus, v, Sign::Plus).unwrap();
        b.add_edge("e2", u, Sign::Minus, v, Sign::Plus).unwrap();
        b.build_relaxed()
    }

    #[test]
    fn negation_is_involution() {
        for s in Sign::BOTH {
            assert_eq!(-(-s), s);
        }
    }

    #[test]
    fn builder_rejects_loops_and_duplicates() {
        let mut b = GraphBuilder::new();
        let u = b.add_vertex("u").unwrap();
        assert!(matches!(b.add_vertex("u"), Err(Error::DuplicateId(_))));
        assert!(matches!(
            b.add_edge("l", u, Sign::Plus, u, Sign::Minus),
            Err(Error::Loop(_))
        ));
        let mut b = GraphBuilder::new();
        let u = b.add_vertex("u").unwrap();
        let v = b.add_vertex("v").unwrap();
        b.add_edge("e1", u, Sign::Minus, v, Sign::Plus).unwrap();
        b.add_edge("e2", v, Sign::Plus, u, Sign::Minus).unwrap();
        assert!(matches!(b.build(), Err(Error::DuplicateSignature(_, _))));
    }

    #[test]
    fn opposite_parallel_edges_are_allowed() {
        let mut b = GraphBuilder::new();
        let u = b.add_vertex("u").unwrap();
        let v = b.add_vertex("v").unwrap();
        b.add_edge("e1", u, Sign::Minus, v, Sign::Plus).unwrap();
        b.add_edge("e2", u, Sign::Plus, v, Sign::Minus).unwrap();
        assert!(b.build().is_ok());
    }

    #[test]
    fn subdivision_removes_duplicates() {
        let g = two_parallel();
        assert!(!g.is_simple());
        let (s, prov) = subdivide_parallels(&g);
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s.vertex_count(), 4);
        assert!(s.is_simple());
        assert_eq!(prov, vec![EdgeId(0), EdgeId(0), EdgeId(1), EdgeId(1)]);
        // signs at the fresh vertex differ, outer signs survive
        for pair in [(0, 1), (2, 3)] {
            let a = s.edge(EdgeId(pair.0));
            let b = s.edge(EdgeId(pair.1));
            assert_eq!(a.sign_u, Sign::Minus);
            assert_eq!(b.sign_v, Sign::Plus);
            assert_ne!(a.sign_v, b.sign_u);
        }
    }

    #[test]
    fn flip_twice_is_identity() {
        let g = two_parallel();
        let f = g.flip_signs_at_vertex(VertexId(0)).unwrap();
        assert_eq!(f.edge(EdgeId(0)).sign_u, Sign::Plus);
        assert_eq!(f.edge(EdgeId(0)).sign_v, Sign::Plus);
        assert_eq!(f.flip_signs_at_vertex(VertexId(0)).unwrap(), g);
        assert!(g.flip_signs_at_vertex(VertexId(7)).is_err());
    }

    #[test]
    fn oriented_edge_double_reverse() {
        let g = two_parallel();
        let o = g.orient(EdgeId(1), VertexId(1));
        assert_eq!(o.head, VertexId(0));
        assert_eq!(o.reversed().reversed(), o);
    }

    #[test]
    fn edge_set_operations() {
        let a = EdgeSet::from_edges(5, [EdgeId(0), EdgeId(3)]);
        let b = EdgeSet::from_edges(5, [EdgeId(3), EdgeId(4)]);
        assert_eq!(a.union(&b).len(), 3);
        assert_eq!(a.difference(&b).to_vec(), vec![EdgeId(0)]);
        assert_eq!(a.complement().len(), 3);
        assert!(!a.is_disjoint(&b));
    }

    #[test]
    fn embed_single_arc() {
        let mut d = DirectedGraph::new(2);
        d.add_arc(0, 1);
        let g = embed_directed(&d).unwrap();
        assert_eq!(g.sign(VertexId(0), EdgeId(0)), Sign::Minus);
        assert_eq!(g.sign(VertexId(1), EdgeId(0)), Sign::Plus);
    }
}

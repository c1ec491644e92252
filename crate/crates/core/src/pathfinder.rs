//! Signed path and trail search.
//!
//! Paths are found through the vertex-split graph: every vertex `v` becomes
//! `v+`/`v-` joined by an internal edge, sources and sinks hang off two
//! terminals, and a path corresponds to an augmenting path of the matching
//! formed by the internal edges. Trails are paths in the line graph.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{
    BidirectedGraph, EdgeId, EdgeSet, GraphBuilder, OrientedEdge, Sign, SignedVertex,
    SignedVertexSet, VertexId,
};
use crate::matching::{alternating_component_path, perfect_matching_from, Matching, UndirectedGraph};
use crate::walk::{classify_set_walk, Path, Trail, Walk};

type RawEdge = (usize, Sign, usize, Sign);

fn split_node(v: usize, s: Sign) -> usize {
    match s {
        Sign::Plus => 2 * v,
        Sign::Minus => 2 * v + 1,
    }
}

/// Core search on an anonymous signed graph with vertices `0..n`. Returns the
/// vertex sequence and the raw edge indices of a path whose signed start lies
/// in `sources` and whose signed end lies in `sinks` (trivial if some vertex is
/// in `sources` with one sign and in `sinks` with the other). Internal vertices
/// are unrestricted.
fn raw_set_path(
    n: usize,
    edges: &[RawEdge],
    sources: &[(usize, Sign)],
    sinks: &[(usize, Sign)],
) -> Option<(Vec<usize>, Vec<usize>)> {
    if sources.is_empty() || sinks.is_empty() {
        return None;
    }
    let xp = 2 * n;
    let yp = 2 * n + 1;
    let mut g = UndirectedGraph::new(2 * n + 2);
    let mut internal = Vec::with_capacity(n);
    for v in 0..n {
        let pair = (split_node(v, Sign::Plus), split_node(v, Sign::Minus));
        g.add_edge(pair.0, pair.1).expect("valid");
        internal.push(pair);
    }
    let mut image: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, &(u, su, v, sv)) in edges.iter().enumerate() {
        let (a, b) = (split_node(u, su), split_node(v, sv));
        if g.add_edge(a, b).expect("valid") {
            image.insert((a.min(b), a.max(b)), i);
        }
    }
    for &(v, s) in sources {
        g.add_edge(xp, split_node(v, -s)).expect("valid");
    }
    for &(v, s) in sinks {
        g.add_edge(yp, split_node(v, -s)).expect("valid");
    }
    let m = Matching::from_pairs(2 * n + 2, &internal).expect("disjoint");
    let mp = perfect_matching_from(&g, &m).expect("valid initial matching")?;
    let comp = alternating_component_path(&g, &m, &mp, xp).expect("matching preconditions hold");
    assert!(
        comp.len() >= 4 && comp.len() % 2 == 0 && *comp.last().unwrap() == yp,
        "alternating component does not join the terminals"
    );
    let inner = &comp[1..comp.len() - 1];
    let mut vertices = Vec::with_capacity(inner.len() / 2);
    let mut used = Vec::with_capacity(inner.len() / 2);
    for (i, pair) in inner.chunks(2).enumerate() {
        assert_eq!(pair[0] / 2, pair[1] / 2, "matched pair is not a split vertex");
        vertices.push(pair[0] / 2);
        if i > 0 {
            let prev = inner[2 * i - 1];
            let key = (prev.min(pair[0]), prev.max(pair[0]));
            used.push(*image.get(&key).expect("image edge"));
        }
    }
    Some((vertices, used))
}

fn check_capacity(graph: &BidirectedGraph, set: &EdgeSet) -> Result<()> {
    if set.capacity() != graph.edge_count() {
        return Err(Error::contract("edge set does not belong to this graph"));
    }
    Ok(())
}

fn check_vertex(graph: &BidirectedGraph, v: VertexId) -> Result<()> {
    if !graph.has_vertex(v) {
        return Err(Error::UnknownVertex(format!("#{}", v.0)));
    }
    Ok(())
}

/// A path in `allowed` from a signed vertex of `sources` to one of `sinks`;
/// internal vertices may lie anywhere. Trivial answers are possible.
pub fn find_set_path(
    graph: &BidirectedGraph,
    allowed: &EdgeSet,
    sources: &SignedVertexSet,
    sinks: &SignedVertexSet,
) -> Option<Path> {
    let list: Vec<EdgeId> = allowed.iter().collect();
    let edges: Vec<RawEdge> = list
        .iter()
        .map(|&e| {
            let ed = graph.edge(e);
            (ed.u.0, ed.sign_u, ed.v.0, ed.sign_v)
        })
        .collect();
    let s: Vec<_> = sources.iter().map(|sv| (sv.vertex.0, sv.sign)).collect();
    let t: Vec<_> = sinks.iter().map(|sv| (sv.vertex.0, sv.sign)).collect();
    let (vs, es) = raw_set_path(graph.vertex_count(), &edges, &s, &t)?;
    let walk = Walk {
        vertices: vs.into_iter().map(VertexId).collect(),
        edges: es.into_iter().map(|i| list[i]).collect(),
    };
    assert!(walk.is_path(graph), "projected walk is not a path");
    match (walk.signed_start(graph), walk.signed_end(graph)) {
        (Some(a), Some(b)) => assert!(sources.contains(&a) && sinks.contains(&b)),
        _ => assert!(Sign::BOTH.iter().any(|&s| {
            sources.contains(&SignedVertex::new(walk.start(), s))
                && sinks.contains(&SignedVertex::new(walk.start(), -s))
        })),
    }
    Some(walk)
}

/// An `x`–`y` path inside `allowed` whose first sign at `x` is in `alphas` and
/// whose last sign at `y` is in `betas`.
pub fn find_path_within(
    graph: &BidirectedGraph,
    allowed: &EdgeSet,
    x: VertexId,
    alphas: &[Sign],
    y: VertexId,
    betas: &[Sign],
) -> Result<Option<Path>> {
    check_vertex(graph, x)?;
    check_vertex(graph, y)?;
    check_capacity(graph, allowed)?;
    if x == y {
        return Err(Error::contract("path endpoints must be distinct"));
    }
    for &e in graph.incident(x) {
        if allowed.contains(e)
            && graph.edge(e).other(x) == y
            && alphas.contains(&graph.sign(x, e))
            && betas.contains(&graph.sign(y, e))
        {
            return Ok(Some(Walk {
                vertices: vec![x, y],
                edges: vec![e],
            }));
        }
    }
    let mut inner = allowed.clone();
    for &e in graph.incident(x).iter().chain(graph.incident(y)) {
        inner.remove(e);
    }
    let mut starts: BTreeMap<SignedVertex, EdgeId> = BTreeMap::new();
    for &e in graph.incident(x) {
        let v = graph.edge(e).other(x);
        if allowed.contains(e) && v != y && alphas.contains(&graph.sign(x, e)) {
            starts
                .entry(SignedVertex::new(v, -graph.sign(v, e)))
                .or_insert(e);
        }
    }
    let mut ends: BTreeMap<SignedVertex, EdgeId> = BTreeMap::new();
    for &f in graph.incident(y) {
        let v = graph.edge(f).other(y);
        if allowed.contains(f) && v != x && betas.contains(&graph.sign(y, f)) {
            ends.entry(SignedVertex::new(v, -graph.sign(v, f)))
                .or_insert(f);
        }
    }
    let s: SignedVertexSet = starts.keys().copied().collect();
    let t: SignedVertexSet = ends.keys().copied().collect();
    let Some(mid) = find_set_path(graph, &inner, &s, &t) else {
        return Ok(None);
    };
    let (e, f) = match (mid.signed_start(graph), mid.signed_end(graph)) {
        (Some(a), Some(b)) => (starts[&a], ends[&b]),
        _ => {
            let v = mid.start();
            let g = Sign::BOTH
                .into_iter()
                .find(|&g| {
                    starts.contains_key(&SignedVertex::new(v, g))
                        && ends.contains_key(&SignedVertex::new(v, -g))
                })
                .expect("trivial middle part");
            (
                starts[&SignedVertex::new(v, g)],
                ends[&SignedVertex::new(v, -g)],
            )
        }
    };
    let mut vertices = vec![x];
    vertices.extend(&mid.vertices);
    vertices.push(y);
    let mut edges = vec![e];
    edges.extend(&mid.edges);
    edges.push(f);
    let path = Walk { vertices, edges };
    assert!(path.is_path(graph), "assembled walk is not a path");
    Ok(Some(path))
}

/// An `(x, α)`–`(y, β)` path avoiding `forbidden`, where `α` is the sign of the
/// first edge at `x` and `β` the sign of the last edge at `y`.
pub fn find_signed_path(
    graph: &BidirectedGraph,
    from: SignedVertex,
    to: SignedVertex,
    forbidden: &EdgeSet,
) -> Result<Option<Path>> {
    check_capacity(graph, forbidden)?;
    find_path_within(
        graph,
        &forbidden.complement(),
        from.vertex,
        &[from.sign],
        to.vertex,
        &[to.sign],
    )
}

/// Any `x`–`y` path avoiding `forbidden`.
pub fn find_path(
    graph: &BidirectedGraph,
    x: VertexId,
    y: VertexId,
    forbidden: &EdgeSet,
) -> Result<Option<Path>> {
    check_capacity(graph, forbidden)?;
    find_path_within(graph, &forbidden.complement(), x, &Sign::BOTH, y, &Sign::BOTH)
}

/// One chosen traversal direction per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    tails: Vec<VertexId>,
}

impl Orientation {
    /// Every edge points away from its endpoint with the smaller name.
    pub fn lexicographic(graph: &BidirectedGraph) -> Self {
        let tails = graph
            .edge_ids()
            .map(|e| {
                let ed = graph.edge(e);
                if graph.vertex_name(ed.u) <= graph.vertex_name(ed.v) {
                    ed.u
                } else {
                    ed.v
                }
            })
            .collect();
        Orientation { tails }
    }

    /// Lexicographic, except that edges at `y` point into `y` and edges at `x`
    /// point away from `x`.
    pub fn away_from_into(graph: &BidirectedGraph, x: VertexId, y: Option<VertexId>) -> Self {
        let mut o = Orientation::lexicographic(graph);
        if let Some(y) = y {
            for &f in graph.incident(y) {
                o.tails[f.0] = graph.edge(f).other(y);
            }
        }
        for &e in graph.incident(x) {
            o.tails[e.0] = x;
        }
        o
    }

    pub fn from_tails(graph: &BidirectedGraph, tails: Vec<VertexId>) -> Result<Self> {
        if tails.len() != graph.edge_count() {
            return Err(Error::contract("orientation must cover every edge"));
        }
        for (i, &t) in tails.iter().enumerate() {
            if !graph.edge(EdgeId(i)).is_incident(t) {
                return Err(Error::contract("orientation tail is not an endpoint"));
            }
        }
        Ok(Orientation { tails })
    }

    pub fn tail(&self, e: EdgeId) -> VertexId {
        self.tails[e.0]
    }

    pub fn head(&self, graph: &BidirectedGraph, e: EdgeId) -> VertexId {
        graph.edge(e).other(self.tails[e.0])
    }

    pub fn oriented(&self, graph: &BidirectedGraph, e: EdgeId) -> OrientedEdge {
        graph.orient(e, self.tails[e.0])
    }
}

/// Line graph of a bidirected graph with respect to an orientation. Vertex `i`
/// of `graph` stands for edge `source[i]`; line edge `j` carries the shared
/// vertex `label[j]`.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: BidirectedGraph,
    pub source: Vec<EdgeId>,
    pub label: Vec<VertexId>,
    pub orientation: Orientation,
}

struct RawLine {
    edges: Vec<RawEdge>,
    labels: Vec<VertexId>,
}

fn raw_line_graph(
    graph: &BidirectedGraph,
    index: &[Option<usize>],
    nu: &Orientation,
) -> RawLine {
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let tau = |e: EdgeId, v: VertexId| {
        if nu.head(graph, e) == v {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    for v in graph.vertices() {
        let inc: Vec<EdgeId> = graph
            .incident(v)
            .iter()
            .copied()
            .filter(|e| index[e.0].is_some())
            .collect();
        for &p in inc.iter().filter(|&&e| graph.sign(v, e) == Sign::Plus) {
            for &m in inc.iter().filter(|&&e| graph.sign(v, e) == Sign::Minus) {
                edges.push((
                    index[p.0].unwrap(),
                    tau(p, v),
                    index[m.0].unwrap(),
                    tau(m, v),
                ));
                labels.push(v);
            }
        }
    }
    RawLine { edges, labels }
}

fn edge_index(graph: &BidirectedGraph, allowed: &EdgeSet) -> (Vec<EdgeId>, Vec<Option<usize>>) {
    let list: Vec<EdgeId> = allowed.iter().collect();
    let mut index = vec![None; graph.edge_count()];
    for (i, e) in list.iter().enumerate() {
        index[e.0] = Some(i);
    }
    (list, index)
}

pub fn line_graph(graph: &BidirectedGraph, nu: &Orientation) -> LineGraph {
    line_graph_within(graph, &graph.all_edges(), nu)
}

/// Line graph of the subgraph formed by `allowed`.
pub fn line_graph_within(graph: &BidirectedGraph, allowed: &EdgeSet, nu: &Orientation) -> LineGraph {
    let (list, index) = edge_index(graph, allowed);
    let raw = raw_line_graph(graph, &index, nu);
    let mut b = GraphBuilder::new();
    for &e in &list {
        b.add_vertex(graph.edge_name(e)).expect("edge names are unique");
    }
    for (&(p, sp, m, sm), &v) in raw.edges.iter().zip(&raw.labels) {
        let name = format!(
            "{}.{}@{}",
            graph.edge_name(list[p]),
            graph.edge_name(list[m]),
            graph.vertex_name(v)
        );
        b.add_fresh_edge(&name, VertexId(p), sp, VertexId(m), sm)
            .expect("valid");
    }
    LineGraph {
        graph: b.build_relaxed(),
        source: list,
        label: raw.labels,
        orientation: nu.clone(),
    }
}

/// The line-graph walk induced by a walk of the source graph.
pub fn walk_to_line(graph: &BidirectedGraph, lg: &LineGraph, walk: &Walk) -> Result<Walk> {
    let mut pos = HashMap::new();
    for (i, e) in lg.source.iter().enumerate() {
        pos.insert(*e, i);
    }
    let mut by_key: HashMap<(usize, usize, VertexId), EdgeId> = HashMap::new();
    for le in lg.graph.edge_ids() {
        let ed = lg.graph.edge(le);
        let v = lg.label[le.0];
        by_key.insert((ed.u.0, ed.v.0, v), le);
        by_key.insert((ed.v.0, ed.u.0, v), le);
    }
    if walk.is_trivial() {
        return Err(Error::contract("trivial walks have no line-graph image"));
    }
    let lv: Vec<usize> = walk
        .edges
        .iter()
        .map(|e| {
            pos.get(e)
                .copied()
                .ok_or_else(|| Error::contract("walk edge missing from line graph"))
        })
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for i in 0..lv.len() - 1 {
        let v = walk.vertices[i + 1];
        let le = by_key
            .get(&(lv[i], lv[i + 1], v))
            .ok_or_else(|| Error::contract("consecutive edges do not alternate"))?;
        edges.push(*le);
    }
    let _ = graph;
    Ok(Walk {
        vertices: lv.into_iter().map(VertexId).collect(),
        edges,
    })
}

/// The source-graph walk induced by a line-graph walk. A single line-graph
/// vertex becomes its edge traversed along the orientation.
pub fn line_to_walk(graph: &BidirectedGraph, lg: &LineGraph, lwalk: &Walk) -> Result<Walk> {
    let edges: Vec<EdgeId> = lwalk.vertices.iter().map(|v| lg.source[v.0]).collect();
    let start = if lwalk.is_trivial() {
        lg.orientation.tail(edges[0])
    } else {
        let v1 = lg.label[lwalk.edges[0].0];
        graph.edge(edges[0]).other(v1)
    };
    let walk = Walk::from_edges(graph, start, &edges)?;
    for (i, le) in lwalk.edges.iter().enumerate() {
        if walk.vertices[i + 1] != lg.label[le.0] {
            return Err(Error::contract("line-graph labels do not chain"));
        }
    }
    Ok(walk)
}

/// A nontrivial trail in `allowed` whose signed start lies in `sources` and
/// whose signed end lies in `sinks`.
pub fn find_set_trail(
    graph: &BidirectedGraph,
    allowed: &EdgeSet,
    sources: &SignedVertexSet,
    sinks: &SignedVertexSet,
    nu: &Orientation,
) -> Option<Trail> {
    let (list, index) = edge_index(graph, allowed);
    let raw = raw_line_graph(graph, &index, nu);
    let mut s = Vec::new();
    for sv in sources {
        for &e in graph.incident(sv.vertex) {
            if let Some(i) = index[e.0] {
                if graph.sign(sv.vertex, e) == sv.sign {
                    let sign = if nu.tail(e) == sv.vertex {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                    s.push((i, sign));
                }
            }
        }
    }
    let mut t = Vec::new();
    for sv in sinks {
        for &f in graph.incident(sv.vertex) {
            if let Some(i) = index[f.0] {
                if graph.sign(sv.vertex, f) == sv.sign {
                    let sign = if nu.head(graph, f) == sv.vertex {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    };
                    t.push((i, sign));
                }
            }
        }
    }
    let (lv, le) = raw_set_path(list.len(), &raw.edges, &s, &t)?;
    let edges: Vec<EdgeId> = lv.iter().map(|&i| list[i]).collect();
    let start = if le.is_empty() {
        let i = lv[0];
        let sset: HashSet<_> = s.iter().copied().collect();
        let tset: HashSet<_> = t.iter().copied().collect();
        if sset.contains(&(i, Sign::Plus)) && tset.contains(&(i, Sign::Minus)) {
            nu.tail(edges[0])
        } else {
            nu.head(graph, edges[0])
        }
    } else {
        graph.edge(edges[0]).other(raw.labels[le[0]])
    };
    let trail = Walk::from_edges(graph, start, &edges).expect("line path projects");
    assert!(trail.is_trail(graph), "projected walk is not a trail");
    assert!(sources.contains(&trail.signed_start(graph).unwrap()));
    assert!(sinks.contains(&trail.signed_end(graph).unwrap()));
    Some(trail)
}

/// An `(x, α)`–`(y, β)` trail inside `allowed`.
pub fn find_signed_trail_within(
    graph: &BidirectedGraph,
    allowed: &EdgeSet,
    from: SignedVertex,
    to: SignedVertex,
) -> Result<Option<Trail>> {
    check_vertex(graph, from.vertex)?;
    check_vertex(graph, to.vertex)?;
    check_capacity(graph, allowed)?;
    if from.vertex == to.vertex {
        return Err(Error::contract(
            "trail endpoints must be distinct; use is_edge_clean for closed trails",
        ));
    }
    let nu = Orientation::away_from_into(graph, from.vertex, Some(to.vertex));
    Ok(find_set_trail(
        graph,
        allowed,
        &[from].into_iter().collect(),
        &[to].into_iter().collect(),
        &nu,
    ))
}

pub fn find_signed_trail(
    graph: &BidirectedGraph,
    from: SignedVertex,
    to: SignedVertex,
) -> Result<Option<Trail>> {
    find_signed_trail_within(graph, &graph.all_edges(), from, to)
}

/// A nontrivial `x`–`x` trail, if one exists.
pub fn closed_trail_at(graph: &BidirectedGraph, x: VertexId) -> Result<Option<Trail>> {
    check_vertex(graph, x)?;
    let both: SignedVertexSet = Sign::BOTH
        .iter()
        .map(|&s| SignedVertex::new(x, s))
        .collect();
    let nu = Orientation::away_from_into(graph, x, None);
    Ok(find_set_trail(graph, &graph.all_edges(), &both, &both, &nu))
}

pub fn is_edge_clean(graph: &BidirectedGraph, x: VertexId) -> Result<bool> {
    Ok(closed_trail_at(graph, x)?.is_none())
}

/// A nontrivial path starting and ending in `set`, if one exists.
pub fn unclean_witness(graph: &BidirectedGraph, set: &SignedVertexSet) -> Option<Path> {
    let all = graph.all_edges();
    for a in set {
        let targets: BTreeMap<VertexId, Vec<Sign>> =
            set.iter()
                .filter(|b| b.vertex != a.vertex)
                .fold(BTreeMap::new(), |mut m, b| {
                    m.entry(b.vertex).or_insert_with(Vec::new).push(b.sign);
                    m
                });
        for (w, betas) in targets {
            if let Some(p) =
                find_path_within(graph, &all, a.vertex, &[a.sign], w, &betas).expect("valid")
            {
                return Some(p);
            }
        }
    }
    None
}

pub fn is_clean(graph: &BidirectedGraph, set: &SignedVertexSet) -> bool {
    unclean_witness(graph, set).is_none()
}

/// Whether `walk` is an X–Y path (convenience re-check used by callers).
pub fn is_xy_path(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    walk: &Walk,
) -> bool {
    walk.is_path(graph) && classify_set_walk(graph, x, y, walk)
}

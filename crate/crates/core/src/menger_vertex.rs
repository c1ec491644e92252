//! Vertex-disjoint `X`–`Y` paths via the vertex-split reduction to the edge
//! version.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{
    support, BidirectedGraph, EdgeId, EdgeSet, GraphBuilder, Sign, SignedVertex, SignedVertexSet,
    VertexId,
};
use crate::menger_edge::{edge_menger_with, EdgeMengerOptions, EdgeMengerOutcome};
use crate::pathfinder::{find_path, unclean_witness};
use crate::walk::{classify_set_walk, Path, Walk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexMengerOutcome {
    Separator(Vec<VertexId>),
    Paths(Vec<Path>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexMengerOptions {
    /// Reject a non-clean `X` before running.
    pub check_precondition: bool,
}

impl Default for VertexMengerOptions {
    fn default() -> Self {
        Self {
            check_precondition: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMengerReport {
    pub outcome: VertexMengerOutcome,
    pub recursion_depth: usize,
    /// Vertices carrying a trivial `X`–`Y` path.
    pub trivial: Vec<VertexId>,
}

/// What `simplify` changed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimplifyReport {
    pub deleted_edges: Vec<EdgeId>,
    pub resigned: Vec<VertexId>,
    pub isolated: Vec<VertexId>,
    pub dropped: Vec<SignedVertex>,
}

#[derive(Debug, Clone)]
pub struct Simplified {
    pub graph: BidirectedGraph,
    pub x: SignedVertexSet,
    /// Edge of the simplified graph to the edge of the input it came from.
    pub edge_origin: Vec<EdgeId>,
    pub report: SimplifyReport,
}

fn has(set: &SignedVertexSet, v: VertexId, s: Sign) -> bool {
    set.contains(&SignedVertex::new(v, s))
}

/// Vertices with `(v, α) ∈ X` and `(v, -α) ∈ Y`.
pub fn trivial_vertices(x: &SignedVertexSet, y: &SignedVertexSet) -> BTreeSet<VertexId> {
    support(x)
        .into_iter()
        .filter(|&v| Sign::BOTH.iter().any(|&a| has(x, v, a) && has(y, v, -a)))
        .collect()
}

/// Normalizes the neighbourhoods of `X ∪ Y` vertices so that every path from
/// `X'` to `Y` is an `X'`–`Y` path. `Y` is left unchanged.
pub fn simplify(graph: &BidirectedGraph, x: &SignedVertexSet, y: &SignedVertexSet) -> Simplified {
    let mut report = SimplifyReport::default();
    let mut x_out = x.clone();
    let mut isolated = BTreeSet::new();
    let mut resigned = BTreeSet::new();
    let mut cut: BTreeSet<SignedVertex> = BTreeSet::new();
    let touched: BTreeSet<VertexId> = support(x).union(&support(y)).copied().collect();
    for &v in &touched {
        let trivial = Sign::BOTH
            .into_iter()
            .find(|&a| has(x, v, a) && has(y, v, -a));
        if let Some(a) = trivial {
            isolated.insert(v);
            let drop = SignedVertex::new(v, -a);
            if x_out.remove(&drop) {
                report.dropped.push(drop);
            }
            continue;
        }
        let only_x = |s| has(x, v, s) && !has(y, v, s);
        let only_y = |s| has(y, v, s) && !has(x, v, s);
        if (only_x(Sign::Plus) && only_x(Sign::Minus)) || (only_y(Sign::Plus) && only_y(Sign::Minus)) {
            resigned.insert(v);
            let drop = SignedVertex::new(v, Sign::Minus);
            if x_out.remove(&drop) {
                report.dropped.push(drop);
            }
            continue;
        }
        for s in Sign::BOTH {
            if !has(x, v, s) && !has(y, v, s) {
                cut.insert(SignedVertex::new(v, s));
            }
        }
    }
    let mut b = GraphBuilder::new();
    for v in graph.vertices() {
        b.add_vertex(graph.vertex_name(v)).expect("same names");
    }
    let mut edge_origin = Vec::new();
    for e in graph.edge_ids() {
        let ed = graph.edge(e);
        let dead = [ed.u, ed.v].iter().any(|&w| {
            isolated.contains(&w) || cut.contains(&SignedVertex::new(w, graph.sign(w, e)))
        });
        if dead {
            report.deleted_edges.push(e);
            continue;
        }
        let su = if resigned.contains(&ed.u) { Sign::Plus } else { ed.sign_u };
        let sv = if resigned.contains(&ed.v) { Sign::Plus } else { ed.sign_v };
        b.add_edge(graph.edge_name(e), ed.u, su, ed.v, sv).expect("valid edge");
        edge_origin.push(e);
    }
    report.resigned = resigned.into_iter().collect();
    report.isolated = isolated.into_iter().collect();
    Simplified {
        graph: b.build_relaxed(),
        x: x_out,
        edge_origin,
        report,
    }
}

/// Role of a hat edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HatEdge {
    /// `v^- v^+`.
    Internal(VertexId),
    Image(EdgeId),
    AttachX(SignedVertex),
    AttachY(SignedVertex),
}

#[derive(Debug, Clone)]
pub struct HatReduction {
    pub hat: BidirectedGraph,
    pub x: VertexId,
    pub y: VertexId,
    pub x_set: SignedVertexSet,
    pub y_set: SignedVertexSet,
    /// `v ↦ (v^+, v^-)`.
    pub vertex_map: Vec<(VertexId, VertexId)>,
    /// Hat vertex to `(v, sign)`; `None` for the terminals.
    pub split_of: Vec<Option<(VertexId, Sign)>>,
    pub internal: Vec<EdgeId>,
    pub edge_map: Vec<EdgeId>,
    pub attach_x: BTreeMap<SignedVertex, EdgeId>,
    pub attach_y: BTreeMap<SignedVertex, EdgeId>,
    pub kinds: Vec<HatEdge>,
}

impl HatReduction {
    pub fn split(&self, v: VertexId, s: Sign) -> VertexId {
        let (p, m) = self.vertex_map[v.0];
        match s {
            Sign::Plus => p,
            Sign::Minus => m,
        }
    }
}

/// The vertex-split graph: `v` becomes `v^+`, `v^-` joined by an edge with
/// `+` at `v^-`; each edge keeps its signs between the matching split
/// vertices; `x` joins `v^α` for `(v, -α) ∈ X` and `y` likewise for `Y`.
pub fn build_hat(graph: &BidirectedGraph, x: &SignedVertexSet, y: &SignedVertexSet) -> HatReduction {
    let mut b = GraphBuilder::new();
    let mut vertex_map = Vec::new();
    let mut split_of = Vec::new();
    for v in graph.vertices() {
        let name = graph.vertex_name(v);
        let p = b.add_vertex(&format!("{name}^+")).expect("fresh");
        let m = b.add_vertex(&format!("{name}^-")).expect("fresh");
        vertex_map.push((p, m));
        split_of.push(Some((v, Sign::Plus)));
        split_of.push(Some((v, Sign::Minus)));
    }
    let tx = b.add_fresh_vertex("x");
    let ty = b.add_fresh_vertex("y");
    split_of.push(None);
    split_of.push(None);
    let split = |v: VertexId, s: Sign| {
        let (p, m) = vertex_map[v.0];
        if s == Sign::Plus {
            p
        } else {
            m
        }
    };
    let mut kinds = Vec::new();
    let mut internal = Vec::new();
    for v in graph.vertices() {
        let id = b
            .add_fresh_edge(
                &format!("{}^", graph.vertex_name(v)),
                split(v, Sign::Minus),
                Sign::Plus,
                split(v, Sign::Plus),
                Sign::Minus,
            )
            .expect("valid");
        internal.push(id);
        kinds.push(HatEdge::Internal(v));
    }
    let mut edge_map = Vec::new();
    for e in graph.edge_ids() {
        let ed = graph.edge(e);
        let id = b
            .add_fresh_edge(
                graph.edge_name(e),
                split(ed.u, ed.sign_u),
                ed.sign_u,
                split(ed.v, ed.sign_v),
                ed.sign_v,
            )
            .expect("valid");
        edge_map.push(id);
        kinds.push(HatEdge::Image(e));
    }
    let mut attach = |set: &SignedVertexSet, t: VertexId, tag: &str, y_side: bool| {
        let mut out = BTreeMap::new();
        for &sv in set {
            let a = -sv.sign;
            let name = format!("{tag}{}{}", graph.vertex_name(sv.vertex), sv.sign);
            let id = b
                .add_fresh_edge(&name, t, Sign::Minus, split(sv.vertex, a), a)
                .expect("valid");
            out.insert(sv, id);
            kinds.push(if y_side {
                HatEdge::AttachY(sv)
            } else {
                HatEdge::AttachX(sv)
            });
        }
        out
    };
    let attach_x = attach(x, tx, "x:", false);
    let attach_y = attach(y, ty, "y:", true);
    HatReduction {
        hat: b.build_relaxed(),
        x: tx,
        y: ty,
        x_set: x.clone(),
        y_set: y.clone(),
        vertex_map,
        split_of,
        internal,
        edge_map,
        attach_x,
        attach_y,
        kinds,
    }
}

/// The hat path `x v1^{-α1} v1^{α1} v2^{β1} v2^{-β1} ... y` of an `X`–`Y`
/// path.
pub fn lift_path(red: &HatReduction, graph: &BidirectedGraph, p: &Path) -> Result<Path> {
    if p.is_trivial() || !p.is_path(graph) || !classify_set_walk(graph, &red.x_set, &red.y_set, p) {
        return Err(Error::contract(format!(
            "`{}` is not a nontrivial X-Y path",
            p.display(graph)
        )));
    }
    let start = p.signed_start(graph).expect("nontrivial");
    let end = p.signed_end(graph).expect("nontrivial");
    let mut w = Walk {
        vertices: vec![red.x],
        edges: vec![],
    };
    let step = |w: &mut Walk, e: EdgeId| w.push(&red.hat, e);
    step(&mut w, red.attach_x[&start]);
    for (i, &v) in p.vertices.iter().enumerate() {
        step(&mut w, red.internal[v.0]);
        if i < p.edges.len() {
            step(&mut w, red.edge_map[p.edges[i].0]);
        }
    }
    step(&mut w, red.attach_y[&end]);
    debug_assert!(w.is_path(&red.hat));
    Ok(w)
}

/// Contracts each internal-edge pair of an `x`–`y` trail or a closed `x`–`x`
/// trail of the hat back to its vertex.
pub fn project_trail(red: &HatReduction, graph: &BidirectedGraph, t: &Walk) -> Result<Path> {
    if t.len() < 3 || t.start() != red.x || (t.end() != red.y && t.end() != red.x) {
        return Err(Error::contract("not an x-y or x-x trail of the hat"));
    }
    let inner = &t.vertices[1..t.vertices.len() - 1];
    let mid = &t.edges[1..t.edges.len() - 1];
    if inner.len() % 2 != 0 {
        return Err(Error::internal("hat trail has an odd interior"));
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, pair) in inner.chunks(2).enumerate() {
        let (Some((v, _)), Some((w, _))) = (red.split_of[pair[0].0], red.split_of[pair[1].0]) else {
            return Err(Error::internal("terminal inside a hat trail"));
        };
        if v != w || mid[2 * i] != red.internal[v.0] {
            return Err(Error::internal("hat trail does not alternate internal edges"));
        }
        vertices.push(v);
        if 2 * i + 1 < mid.len() {
            match red.kinds[mid[2 * i + 1].0] {
                HatEdge::Image(e) => edges.push(e),
                _ => return Err(Error::internal("expected an image edge")),
            }
        }
    }
    let p = Walk { vertices, edges };
    if !p.is_path(graph) {
        return Err(Error::internal("projection is not a path"));
    }
    Ok(p)
}

/// Hat edge separator to a vertex separator: each edge names the vertex it
/// was split from; image edges take the endpoint with the smaller name.
pub fn transfer_separator(red: &HatReduction, graph: &BidirectedGraph, s: &[EdgeId]) -> BTreeSet<VertexId> {
    s.iter()
        .map(|&f| match red.kinds[f.0] {
            HatEdge::Internal(v) => v,
            HatEdge::Image(e) => {
                let ed = graph.edge(e);
                if graph.vertex_name(ed.u) <= graph.vertex_name(ed.v) {
                    ed.u
                } else {
                    ed.v
                }
            }
            HatEdge::AttachX(sv) | HatEdge::AttachY(sv) => sv.vertex,
        })
        .collect()
}

/// `B - S` with `S` removed from both sets; vertex ids are kept.
pub fn delete_vertices(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    s: &BTreeSet<VertexId>,
) -> (BidirectedGraph, SignedVertexSet, SignedVertexSet) {
    let keep = EdgeSet::from_edges(
        graph.edge_count(),
        graph
            .edge_ids()
            .filter(|&e| !s.contains(&graph.edge(e).u) && !s.contains(&graph.edge(e).v)),
    );
    let (g, _) = graph.restrict(&keep);
    let f = |set: &SignedVertexSet| set.iter().filter(|sv| !s.contains(&sv.vertex)).copied().collect();
    (g, f(x), f(y))
}

/// Some `X`–`Y` path, if one exists.
pub fn find_xy_path(graph: &BidirectedGraph, x: &SignedVertexSet, y: &SignedVertexSet) -> Result<Option<Path>> {
    if let Some(&v) = trivial_vertices(x, y).iter().next() {
        return Ok(Some(Walk::trivial(v)));
    }
    let simple = simplify(graph, x, y);
    let red = build_hat(&simple.graph, &simple.x, y);
    let none = EdgeSet::empty(red.hat.edge_count());
    let Some(hp) = find_path(&red.hat, red.x, red.y, &none)? else {
        return Ok(None);
    };
    let p = project_trail(&red, &simple.graph, &hp)?;
    let p = map_edges(&p, &simple.edge_origin);
    if !classify_set_walk(graph, x, y, &p) {
        return Err(Error::internal("projected path is not an X-Y path"));
    }
    Ok(Some(p))
}

fn map_edges(p: &Walk, origin: &[EdgeId]) -> Walk {
    Walk {
        vertices: p.vertices.clone(),
        edges: p.edges.iter().map(|e| origin[e.0]).collect(),
    }
}

fn check_paths(graph: &BidirectedGraph, x: &SignedVertexSet, y: &SignedVertexSet, paths: &[Path]) -> Result<()> {
    let mut used = BTreeSet::new();
    for p in paths {
        if p.vertices.iter().any(|&v| !graph.has_vertex(v)) || p.edges.iter().any(|&e| !graph.has_edge(e)) {
            return Err(Error::contract("path references unknown ids"));
        }
        if !p.is_path(graph) || !classify_set_walk(graph, x, y, p) {
            return Err(Error::contract(format!("`{}` is not an X-Y path", p.display(graph))));
        }
        for &v in &p.vertices {
            if !used.insert(v) {
                return Err(Error::contract("paths are not vertex-disjoint"));
            }
        }
    }
    Ok(())
}

pub fn verify_outcome(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    paths: &[Path],
    outcome: &VertexMengerOutcome,
) -> Result<()> {
    let k = paths.len();
    match outcome {
        VertexMengerOutcome::Separator(s) => {
            let set: BTreeSet<_> = s.iter().copied().collect();
            if set.len() != k {
                return Err(Error::internal("separator has the wrong size"));
            }
            let (g, xs, ys) = delete_vertices(graph, x, y, &set);
            if find_xy_path(&g, &xs, &ys)?.is_some() {
                return Err(Error::internal("separator leaves an X-Y path"));
            }
        }
        VertexMengerOutcome::Paths(out) => {
            if out.len() != k + 1 {
                return Err(Error::internal("wrong number of paths"));
            }
            check_paths(graph, x, y, out).map_err(|e| Error::internal(format!("output paths: {e}")))?;
            for (p, q) in paths.iter().zip(out) {
                if p.start() != q.start() {
                    return Err(Error::internal("start vertex not preserved"));
                }
            }
        }
    }
    Ok(())
}

pub fn vertex_menger(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    paths: &[Path],
) -> Result<VertexMengerOutcome> {
    vertex_menger_with(graph, x, y, paths, VertexMengerOptions::default()).map(|r| r.outcome)
}

pub fn vertex_menger_with(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    paths: &[Path],
    options: VertexMengerOptions,
) -> Result<VertexMengerReport> {
    for sv in x.iter().chain(y) {
        if !graph.has_vertex(sv.vertex) {
            return Err(Error::UnknownVertex(format!("#{}", sv.vertex.0)));
        }
    }
    check_paths(graph, x, y, paths)?;
    if options.check_precondition {
        if let Some(w) = unclean_witness(graph, x) {
            return Err(Error::Precondition {
                message: "X is not clean".to_string(),
                witness: Some(w),
            });
        }
    }
    let (outcome, depth, trivial) = solve(graph, x, y, paths)?;
    verify_outcome(graph, x, y, paths, &outcome)?;
    Ok(VertexMengerReport {
        outcome,
        recursion_depth: depth,
        trivial: trivial.into_iter().collect(),
    })
}

fn solve(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    paths: &[Path],
) -> Result<(VertexMengerOutcome, usize, BTreeSet<VertexId>)> {
    let k = paths.len();
    let trivial = trivial_vertices(x, y);
    let given: BTreeSet<VertexId> = paths.iter().filter(|p| p.is_trivial()).map(|p| p.start()).collect();
    if let Some(&t) = trivial.difference(&given).next() {
        // a trivial path is disjoint from every nontrivial one
        let mut out = paths.to_vec();
        out.push(Walk::trivial(t));
        return Ok((VertexMengerOutcome::Paths(out), 0, trivial));
    }
    let simple = simplify(graph, x, y);
    let x0: SignedVertexSet = simple.x.iter().filter(|sv| !trivial.contains(&sv.vertex)).copied().collect();
    let y0: SignedVertexSet = y.iter().filter(|sv| !trivial.contains(&sv.vertex)).copied().collect();
    let mut to_simple = vec![None; graph.edge_count()];
    for (i, &e) in simple.edge_origin.iter().enumerate() {
        to_simple[e.0] = Some(EdgeId(i));
    }
    let red = build_hat(&simple.graph, &x0, &y0);
    let mut lifted = Vec::new();
    for p in paths.iter().filter(|p| !p.is_trivial()) {
        let edges = p
            .edges
            .iter()
            .map(|e| to_simple[e.0].ok_or_else(|| Error::internal("input path edge removed by simplify")))
            .collect::<Result<Vec<_>>>()?;
        let q = Walk {
            vertices: p.vertices.clone(),
            edges,
        };
        lifted.push(lift_path(&red, &simple.graph, &q)?);
    }
    let report = edge_menger_with(
        &red.hat,
        red.x,
        red.y,
        &lifted,
        EdgeMengerOptions {
            check_precondition: false,
        },
    )?;
    let outcome = match report.outcome {
        EdgeMengerOutcome::Separator(s) => {
            let mut set = transfer_separator(&red, &simple.graph, &s);
            set.extend(trivial.iter().copied());
            let mut names: Vec<VertexId> = graph.vertices().filter(|v| !set.contains(v)).collect();
            names.sort_by(|a, b| graph.vertex_name(*a).cmp(graph.vertex_name(*b)));
            let mut extra = names.into_iter();
            while set.len() < k {
                match extra.next() {
                    Some(v) => set.insert(v),
                    None => return Err(Error::internal("not enough vertices to pad the separator")),
                };
            }
            VertexMengerOutcome::Separator(set.into_iter().collect())
        }
        EdgeMengerOutcome::Paths(hp) => {
            let mut projected = hp
                .iter()
                .map(|h| project_trail(&red, &simple.graph, h).map(|p| map_edges(&p, &simple.edge_origin)))
                .collect::<Result<Vec<_>>>()?
                .into_iter();
            let mut out = Vec::with_capacity(k + 1);
            for p in paths {
                if p.is_trivial() {
                    out.push(p.clone());
                } else {
                    out.push(projected.next().expect("one per lifted path"));
                }
            }
            out.push(projected.next().expect("the new path"));
            VertexMengerOutcome::Paths(out)
        }
    };
    Ok((outcome, report.recursion_depth, trivial))
}

/// Hangs a fresh pendant vertex off every member of `X` and `Y`, so that
/// `X''`–`Y''` paths may pass through the original terminals.
pub fn relax_endpoints(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
) -> (BidirectedGraph, SignedVertexSet, SignedVertexSet) {
    let mut b = GraphBuilder::new();
    for v in graph.vertices() {
        b.add_vertex(graph.vertex_name(v)).expect("same names");
    }
    for e in graph.edge_ids() {
        let ed = graph.edge(e);
        b.add_edge(graph.edge_name(e), ed.u, ed.sign_u, ed.v, ed.sign_v)
            .expect("valid");
    }
    let mut hang = |set: &SignedVertexSet, tag: &str| -> SignedVertexSet {
        set.iter()
            .map(|sv| {
                let base = format!("{}~{tag}{}", graph.vertex_name(sv.vertex), sv.sign);
                let n = b.add_fresh_vertex(&base);
                b.add_fresh_edge(&base, sv.vertex, -sv.sign, n, sv.sign)
                    .expect("valid");
                SignedVertex::new(n, sv.sign)
            })
            .collect()
    };
    let x2 = hang(x, "x");
    let y2 = hang(y, "y");
    (b.build_relaxed(), x2, y2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generators::gen_grid;
    use crate::walk::{classify_walk, WalkClass};
    use Sign::{Minus as M, Plus as P};

    fn walk(g: &BidirectedGraph, start: &str, edges: &[&str]) -> Walk {
        let es: Vec<_> = edges.iter().map(|e| g.edge_by_name(e).unwrap()).collect();
        Walk::from_edges(g, g.vertex_by_name(start).unwrap(), &es).unwrap()
    }

    #[test]
    fn fig6_hat_counts() {
        let (g, x, y) = fixtures::fig6();
        let red = build_hat(&g, &x, &y);
        assert_eq!(red.hat.vertex_count(), 10);
        assert_eq!(red.hat.edge_count(), 4 + 3 + x.len() + y.len());
        assert!(red.hat.is_simple());
    }

    #[test]
    fn empty_x_leaves_x_isolated() {
        let g = fixtures::path2();
        let red = build_hat(&g, &SignedVertexSet::new(), &SignedVertexSet::new());
        assert!(red.hat.incident(red.x).is_empty());
    }

    #[test]
    fn hat_signs() {
        let (g, x, y) = fixtures::fig5();
        let red = build_hat(&g, &x, &y);
        for v in g.vertices() {
            let e = red.hat.edge(red.internal[v.0]);
            assert_eq!(e.sign_at(red.split(v, M)), P);
            assert_eq!(e.sign_at(red.split(v, P)), M);
        }
        for e in g.edge_ids() {
            let ed = g.edge(e);
            let h = red.hat.edge(red.edge_map[e.0]);
            assert_eq!(h.sign_at(red.split(ed.u, ed.sign_u)), ed.sign_u);
            assert_eq!(h.sign_at(red.split(ed.v, ed.sign_v)), ed.sign_v);
        }
        for (sv, &f) in &red.attach_x {
            assert_eq!(red.hat.edge(f).sign_at(red.x), M);
            assert_eq!(red.hat.edge(f).sign_at(red.split(sv.vertex, -sv.sign)), -sv.sign);
        }
    }

    #[test]
    fn lift_and_project_fig6() {
        let (g, x, y) = fixtures::fig6();
        let red = build_hat(&g, &x, &y);
        let p = walk(&g, "x2", &["x2y2"]);
        let h = lift_path(&red, &g, &p).unwrap();
        assert_eq!(h.vertices.len(), 6);
        assert_eq!(classify_walk(&red.hat, &h).unwrap(), WalkClass::Path);
        assert_eq!(project_trail(&red, &g, &h).unwrap(), p);
        assert!(lift_path(&red, &g, &Walk::trivial(p.start())).is_err());
    }

    #[test]
    fn simplify_rules() {
        let g = fixtures::path2();
        let v = g.vertex_by_name("v").unwrap();
        let x = fixtures::signed_set(&g, &[("v", P)]);
        let s = simplify(&g, &x, &SignedVertexSet::new());
        // rule (a): the --signed edge e2 at v goes
        assert_eq!(s.report.deleted_edges, vec![g.edge_by_name("e2").unwrap()]);

        let x = fixtures::signed_set(&g, &[("v", P), ("v", M)]);
        let s = simplify(&g, &x, &SignedVertexSet::new());
        assert_eq!(s.report.resigned, vec![v]);
        assert_eq!(s.x, fixtures::signed_set(&g, &[("v", P)]));
        assert!(s.graph.incident(v).iter().all(|&e| s.graph.sign(v, e) == P));

        let y = fixtures::signed_set(&g, &[("v", M)]);
        let s = simplify(&g, &fixtures::signed_set(&g, &[("v", P)]), &y);
        assert_eq!(s.report.isolated, vec![v]);
        assert!(s.graph.incident(v).is_empty());
    }

    #[test]
    fn separator_transfer_rules() {
        let (g, x, y) = fixtures::fig6();
        let red = build_hat(&g, &x, &y);
        let x1 = g.vertex_by_name("x1").unwrap();
        let s = transfer_separator(&red, &g, &[red.internal[x1.0]]);
        assert_eq!(s, [x1].into_iter().collect());
        let sv = SignedVertex::new(x1, P);
        let s = transfer_separator(&red, &g, &[red.attach_x[&sv]]);
        assert_eq!(s, [x1].into_iter().collect());
    }

    #[test]
    fn fig6_keeps_start_vertex() {
        let (g, x, y) = fixtures::fig6();
        let p1 = walk(&g, "x1", &["x1y2"]);
        match vertex_menger(&g, &x, &y, &[p1.clone()]).unwrap() {
            VertexMengerOutcome::Paths(ps) => {
                assert_eq!(ps.len(), 2);
                assert_eq!(ps[0].start(), p1.start());
                assert_eq!(ps[0].signed_start(&g).unwrap().sign, M);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn grid_is_rejected() {
        let (g, x, y) = gen_grid(2).unwrap();
        assert!(matches!(
            vertex_menger(&g, &x, &y, &[]),
            Err(Error::Precondition { witness: Some(_), .. })
        ));
    }

    #[test]
    fn trivial_path_is_added() {
        let g = fixtures::path2();
        let x = fixtures::signed_set(&g, &[("v", P)]);
        let y = fixtures::signed_set(&g, &[("v", M)]);
        match vertex_menger(&g, &x, &y, &[]).unwrap() {
            VertexMengerOutcome::Paths(ps) => assert!(ps[0].is_trivial()),
            o => panic!("{o:?}"),
        }
        let t = Walk::trivial(g.vertex_by_name("v").unwrap());
        assert!(matches!(
            vertex_menger(&g, &x, &y, &[t]).unwrap(),
            VertexMengerOutcome::Separator(s) if s.len() == 1
        ));
    }

    #[test]
    fn relax_adds_pendants() {
        let g = fixtures::path2();
        let x = fixtures::signed_set(&g, &[("v", P)]);
        let (g2, x2, y2) = relax_endpoints(&g, &x, &SignedVertexSet::new());
        assert_eq!(g2.vertex_count(), 4);
        assert_eq!((x2.len(), y2.len()), (1, 0));
        let n = x2.iter().next().unwrap().vertex;
        let e = g2.incident(n)[0];
        assert_eq!(g2.sign(n, e), P);
        assert_eq!(g2.sign(g.vertex_by_name("v").unwrap(), e), M);
    }
}

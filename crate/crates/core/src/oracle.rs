//! Exhaustive reference implementations. Nothing here calls the matching or
//! line-graph machinery, so these can be used to test it.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{support, BidirectedGraph, DirectedGraph, EdgeId, EdgeSet, Sign, SignedVertex, SignedVertexSet, VertexId};
use crate::walk::{classify_set_walk, Path, Trail, Walk};

/// Default vertex bound for path enumeration.
pub const DEFAULT_BOUND: usize = 10;
/// Subsets of at most this many edges are enumerated by `brute_appendage`.
pub const APPENDAGE_EDGE_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub mode: Mode,
    pub max_disjoint: usize,
    pub min_separator: usize,
    pub paths: Vec<Path>,
    /// Vertex ids in vertex mode, edge ids in edge mode.
    pub separator: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Control {
    Extend,
    Prune,
    Stop,
}

fn check_bound(graph: &BidirectedGraph, bound: usize) -> Result<()> {
    if graph.vertex_count() > bound {
        return Err(Error::BoundExceeded(format!(
            "{} vertices, bound {bound}",
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// Depth-first search over walks from `start` whose first sign is in
/// `first`, never reusing an edge and, if `simple`, never revisiting a
/// vertex. `visit` sees every nontrivial walk reached. Returns `false` if
/// stopped early.
fn search(
    graph: &BidirectedGraph,
    allowed: Option<&EdgeSet>,
    start: VertexId,
    first: &[Sign],
    simple: bool,
    visit: &mut dyn FnMut(&Walk) -> Control,
) -> bool {
    fn go(
        graph: &BidirectedGraph,
        allowed: Option<&EdgeSet>,
        first: &[Sign],
        simple: bool,
        w: &mut Walk,
        visit: &mut dyn FnMut(&Walk) -> Control,
    ) -> bool {
        let cur = w.end();
        for &e in graph.incident(cur) {
            if allowed.is_some_and(|a| !a.contains(e)) || w.edges.contains(&e) {
                continue;
            }
            let s = graph.sign(cur, e);
            let ok = match w.edges.last() {
                None => first.contains(&s),
                Some(&prev) => graph.sign(cur, prev) != s,
            };
            if !ok {
                continue;
            }
            let next = graph.edge(e).other(cur);
            if simple && w.vertices.contains(&next) {
                continue;
            }
            w.edges.push(e);
            w.vertices.push(next);
            let c = visit(w);
            let keep_going = match c {
                Control::Stop => false,
                Control::Prune => true,
                Control::Extend => go(graph, allowed, first, simple, w, visit),
            };
            w.edges.pop();
            w.vertices.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut w = Walk::trivial(start);
    go(graph, allowed, first, simple, &mut w, visit)
}

/// All `X`–`Y` paths, trivial ones included.
pub fn enum_xy_paths(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    bound: usize,
) -> Result<Vec<Path>> {
    check_bound(graph, bound)?;
    let terminals: BTreeSet<VertexId> = support(x).union(&support(y)).copied().collect();
    let mut out = Vec::new();
    for v in support(x) {
        let t = Walk::trivial(v);
        if classify_set_walk(graph, x, y, &t) {
            out.push(t);
        }
    }
    for sv in x {
        search(graph, None, sv.vertex, &[sv.sign], true, &mut |w| {
            if terminals.contains(&w.end()) {
                if classify_set_walk(graph, x, y, w) {
                    out.push(w.clone());
                }
                Control::Prune
            } else {
                Control::Extend
            }
        });
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Some `X`–`Y` path, stopping at the first one found.
pub fn find_xy_path_brute(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    bound: usize,
) -> Result<Option<Path>> {
    check_bound(graph, bound)?;
    for v in support(x) {
        let t = Walk::trivial(v);
        if classify_set_walk(graph, x, y, &t) {
            return Ok(Some(t));
        }
    }
    let terminals: BTreeSet<VertexId> = support(x).union(&support(y)).copied().collect();
    let mut found = None;
    for sv in x {
        search(graph, None, sv.vertex, &[sv.sign], true, &mut |w| {
            if !terminals.contains(&w.end()) {
                return Control::Extend;
            }
            if classify_set_walk(graph, x, y, w) {
                found = Some(w.clone());
                return Control::Stop;
            }
            Control::Prune
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

/// All `x`–`y` paths.
pub fn enum_paths(graph: &BidirectedGraph, x: VertexId, y: VertexId, bound: usize) -> Result<Vec<Path>> {
    check_bound(graph, bound)?;
    let mut out = Vec::new();
    search(graph, None, x, &Sign::BOTH, true, &mut |w| {
        if w.end() == y {
            out.push(w.clone());
            Control::Prune
        } else {
            Control::Extend
        }
    });
    Ok(out)
}

/// All nontrivial trails of the graph, each listed once per direction.
pub fn enum_trails(graph: &BidirectedGraph, bound: usize) -> Result<Vec<Trail>> {
    check_bound(graph, bound)?;
    let mut out = Vec::new();
    for v in graph.vertices() {
        search(graph, None, v, &Sign::BOTH, false, &mut |w| {
            out.push(w.clone());
            Control::Extend
        });
    }
    Ok(out)
}

/// Whether a `from`–`to` path exists, with `from.sign` the first sign and
/// `to.sign` the last.
pub fn signed_path_exists(graph: &BidirectedGraph, from: SignedVertex, to: SignedVertex) -> bool {
    let mut found = false;
    search(graph, None, from.vertex, &[from.sign], true, &mut |w| {
        if w.end() == to.vertex {
            if graph.sign(to.vertex, *w.edges.last().unwrap()) == to.sign {
                found = true;
                return Control::Stop;
            }
            return Control::Prune;
        }
        Control::Extend
    });
    found
}

/// A trail inside `allowed` from some member of `from` to some member of
/// `to`, by exhaustive search.
pub fn find_trail_brute(
    graph: &BidirectedGraph,
    allowed: &EdgeSet,
    from: &SignedVertexSet,
    to: &SignedVertexSet,
) -> Option<Trail> {
    let mut found = None;
    for sv in from {
        search(graph, Some(allowed), sv.vertex, &[sv.sign], false, &mut |w| {
            let last = *w.edges.last().unwrap();
            if to.contains(&SignedVertex::new(w.end(), graph.sign(w.end(), last))) {
                found = Some(w.clone());
                return Control::Stop;
            }
            Control::Extend
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// A nontrivial closed trail at `x`, by exhaustive search.
pub fn closed_trail_brute(graph: &BidirectedGraph, x: VertexId) -> Option<Trail> {
    let both: SignedVertexSet = Sign::BOTH.iter().map(|&s| SignedVertex::new(x, s)).collect();
    find_trail_brute(graph, &graph.all_edges(), &both, &both)
}

/// Whether every orientation of every edge of `a` begins a trail to `x`
/// inside `a ∪ E(p)`, by exhaustive search.
pub fn is_admissible_brute(graph: &BidirectedGraph, a: &EdgeSet, p: &Path, x: VertexId) -> bool {
    let within = a.union(&p.edge_set(graph.edge_count()));
    a.iter().all(|e| {
        let ed = graph.edge(e);
        [ed.u, ed.v].into_iter().all(|head| {
            if head == x {
                return true;
            }
            let mut rest = within.clone();
            rest.remove(e);
            let mut ok = false;
            search(graph, Some(&rest), head, &[-graph.sign(head, e)], false, &mut |w| {
                if w.end() == x {
                    ok = true;
                    Control::Stop
                } else {
                    Control::Extend
                }
            });
            ok
        })
    })
}

/// Union of all admissible subsets of `E(B)`.
pub fn brute_appendage(graph: &BidirectedGraph, p: &Path, x: VertexId) -> Result<EdgeSet> {
    let m = graph.edge_count();
    if m > APPENDAGE_EDGE_BOUND {
        return Err(Error::BoundExceeded(format!("{m} edges, bound {APPENDAGE_EDGE_BOUND}")));
    }
    if p.start() != x || !p.is_path(graph) {
        return Err(Error::contract("anchor must start the base path"));
    }
    let mut union = EdgeSet::empty(m);
    for mask in 1u32..(1 << m) {
        let a = EdgeSet::from_edges(m, (0..m).filter(|i| mask >> i & 1 == 1).map(EdgeId));
        if a.is_subset(&union) {
            continue;
        }
        if is_admissible_brute(graph, &a, p, x) {
            union.union_with(&a);
        }
    }
    Ok(union)
}

fn max_packing(masks: &[u128]) -> Vec<usize> {
    fn go(masks: &[u128], i: usize, used: u128, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if i == masks.len() || cur.len() + (masks.len() - i) <= best.len() {
            return;
        }
        if masks[i] & used == 0 {
            cur.push(i);
            go(masks, i + 1, used | masks[i], cur, best);
            cur.pop();
        }
        go(masks, i + 1, used, cur, best);
    }
    let mut best = Vec::new();
    go(masks, 0, 0, &mut Vec::new(), &mut best);
    best
}

fn min_hitting_set(masks: &[u128]) -> Vec<usize> {
    fn go(masks: &[u128], budget: usize, chosen: u128) -> Option<u128> {
        let Some(&open) = masks.iter().find(|&&m| m & chosen == 0) else {
            return Some(chosen);
        };
        if budget == 0 {
            return None;
        }
        (0..128)
            .filter(|b| open >> b & 1 == 1)
            .find_map(|b| go(masks, budget - 1, chosen | 1 << b))
    }
    let s = (0..)
        .find_map(|budget| go(masks, budget, 0))
        .expect("every path has an element");
    (0..128).filter(|b| s >> b & 1 == 1).collect()
}

fn report(mode: Mode, paths: Vec<Path>, masks: Vec<u128>) -> OracleReport {
    let pack = max_packing(&masks);
    let sep = min_hitting_set(&masks);
    OracleReport {
        mode,
        max_disjoint: pack.len(),
        min_separator: sep.len(),
        paths: pack.into_iter().map(|i| paths[i].clone()).collect(),
        separator: sep,
    }
}

/// Maximum number of vertex-disjoint `X`–`Y` paths and minimum size of a
/// vertex set meeting all of them.
pub fn brute_menger_vertex(
    graph: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    bound: usize,
) -> Result<OracleReport> {
    if graph.vertex_count() > 128 {
        return Err(Error::BoundExceeded("more than 128 vertices".into()));
    }
    let paths = enum_xy_paths(graph, x, y, bound)?;
    let masks = paths
        .iter()
        .map(|p| p.vertices.iter().fold(0u128, |m, v| m | 1 << v.0))
        .collect();
    Ok(report(Mode::Vertex, paths, masks))
}

/// Maximum number of edge-disjoint `x`–`y` paths and minimum size of an edge
/// set meeting all of them.
pub fn brute_menger_edge(graph: &BidirectedGraph, x: VertexId, y: VertexId, bound: usize) -> Result<OracleReport> {
    if graph.edge_count() > 128 {
        return Err(Error::BoundExceeded("more than 128 edges".into()));
    }
    let paths = enum_paths(graph, x, y, bound)?;
    let masks = paths
        .iter()
        .map(|p| p.edges.iter().fold(0u128, |m, e| m | 1 << e.0))
        .collect();
    Ok(report(Mode::Edge, paths, masks))
}

/// Edmonds–Karp on a dense unit-capacity network.
fn max_flow(cap: &mut [Vec<i64>], s: usize, t: usize) -> usize {
    let n = cap.len();
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for v in 0..n {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    q.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Maximum number of vertex-disjoint directed paths from `xs` to `ys` that
/// meet `xs ∪ ys` only at their ends; a vertex in both counts as a path.
pub fn directed_vertex_disjoint(d: &DirectedGraph, xs: &BTreeSet<usize>, ys: &BTreeSet<usize>) -> usize {
    let n = d.vertices.len();
    let both = xs.intersection(ys).count();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut cap = vec![vec![0i64; 2 * n + 2]; 2 * n + 2];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = 1;
    }
    for &v in xs.difference(ys) {
        cap[s][2 * v] = 1;
    }
    for &v in ys.difference(xs) {
        cap[2 * v + 1][t] = 1;
    }
    for (_, a, b) in &d.arcs {
        if ys.contains(a) || xs.contains(b) {
            continue;
        }
        cap[2 * a + 1][2 * b] = 1;
    }
    both + max_flow(&mut cap, s, t)
}

/// Maximum number of arc-disjoint directed `x`–`y` paths.
pub fn directed_edge_disjoint(d: &DirectedGraph, x: usize, y: usize) -> usize {
    let n = d.vertices.len();
    let mut cap = vec![vec![0i64; n]; n];
    for (_, a, b) in &d.arcs {
        cap[*a][*b] += 1;
    }
    max_flow(&mut cap, x, y)
}

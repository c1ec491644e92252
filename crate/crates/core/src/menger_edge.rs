//! Edge-disjoint Menger augmentation: given `k` edge-disjoint `x`–`y` paths,
//! find `k + 1` of them with the same first edges, or `k` edges separating
//! `x` from `y`.

use std::collections::{BTreeMap, HashMap};

use crate::appendage::compute_appendage;
use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, EdgeId, EdgeSet, GraphBuilder, OrientedEdge, Sign, SignedVertex, VertexId};
use crate::pathfinder::{closed_trail_at, find_path, find_path_within};
use crate::walk::{Path, Walk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeMengerOutcome {
    Separator(Vec<EdgeId>),
    Paths(Vec<Path>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeMengerOptions {
    /// Reject inputs where `x` lies on a closed trail.
    pub check_precondition: bool,
}

impl Default for EdgeMengerOptions {
    fn default() -> Self {
        Self {
            check_precondition: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMengerReport {
    pub outcome: EdgeMengerOutcome,
    pub recursion_depth: usize,
}

/// Where an edge of the auxiliary graph comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuxOrigin {
    Original(EdgeId),
    /// `ê`, standing in for the shared edge.
    Hat,
    /// `e_a`, from `x` to the apex.
    Apex,
    /// `e(P)` for an `x`–`(z, α)` path `P` inside `A_side`.
    Shortcut { path: Path, side: usize },
}

#[derive(Debug, Clone)]
pub struct AuxEdgeGraph {
    pub graph: BidirectedGraph,
    pub new_edge_hat: EdgeId,
    pub apex: VertexId,
    pub apex_edge: EdgeId,
    pub origin: Vec<AuxOrigin>,
    /// Source edge to auxiliary edge, for the edges that survive.
    pub to_aux: Vec<Option<EdgeId>>,
}

impl AuxEdgeGraph {
    pub fn shortcut_edges(&self) -> impl Iterator<Item = (EdgeId, &Path, usize)> + '_ {
        self.origin.iter().enumerate().filter_map(|(i, o)| match o {
            AuxOrigin::Shortcut { path, side } => Some((EdgeId(i), path, *side)),
            _ => None,
        })
    }
}

/// Builds `B̂`: drop `e` and `A₁ ∪ A₂`, add `ê = x w`, an apex `a` with
/// `e_a = x a`, and one edge `a z` per signed vertex `(z, α)` reachable from
/// `x` by a nontrivial path inside some `A_i`. All signs at `x` must be `-`.
pub fn build_aux_edge(
    graph: &BidirectedGraph,
    x: VertexId,
    e: OrientedEdge,
    a1: &EdgeSet,
    a2: &EdgeSet,
) -> Result<AuxEdgeGraph> {
    let m = graph.edge_count();
    if graph.incident(x).iter().any(|&f| graph.sign(x, f) != Sign::Minus) {
        return Err(Error::contract("signs at x must all be -"));
    }
    if a1.capacity() != m || a2.capacity() != m {
        return Err(Error::contract("edge set capacity mismatch"));
    }
    let mut removed = a1.union(a2);
    removed.insert(e.edge);

    let mut b = GraphBuilder::new();
    for v in graph.vertices() {
        b.add_vertex(graph.vertex_name(v))?;
    }
    let mut origin = Vec::new();
    let mut to_aux = vec![None; m];
    for f in graph.edge_ids() {
        if removed.contains(f) {
            continue;
        }
        let ed = graph.edge(f);
        let id = b.add_edge(graph.edge_name(f), ed.u, ed.sign_u, ed.v, ed.sign_v)?;
        origin.push(AuxOrigin::Original(f));
        to_aux[f.0] = Some(id);
    }
    let w = e.head;
    let hat_name = format!("{}^", graph.edge_name(e.edge));
    let new_edge_hat = b.add_fresh_edge(&hat_name, x, Sign::Minus, w, graph.sign(w, e.edge))?;
    origin.push(AuxOrigin::Hat);
    let apex = b.add_fresh_vertex("a");
    let apex_edge = b.add_fresh_edge("e_a", x, Sign::Minus, apex, Sign::Plus)?;
    origin.push(AuxOrigin::Apex);

    let mut seen = std::collections::BTreeSet::new();
    for (side, a) in [(1, a1), (2, a2)] {
        let mut zs: Vec<VertexId> = a
            .iter()
            .flat_map(|f| [graph.edge(f).u, graph.edge(f).v])
            .filter(|&z| z != x)
            .collect();
        zs.sort();
        zs.dedup();
        for z in zs {
            for alpha in Sign::BOTH {
                let target = SignedVertex::new(z, alpha);
                if seen.contains(&target) {
                    continue;
                }
                if let Some(p) = find_path_within(graph, a, x, &Sign::BOTH, z, &[alpha])? {
                    seen.insert(target);
                    let name = format!("e({}{})", graph.vertex_name(z), alpha);
                    b.add_fresh_edge(&name, apex, Sign::Minus, z, alpha)?;
                    origin.push(AuxOrigin::Shortcut { path: p, side });
                }
            }
        }
    }
    Ok(AuxEdgeGraph {
        graph: b.build_relaxed(),
        new_edge_hat,
        apex,
        apex_edge,
        origin,
        to_aux,
    })
}

/// Joins an `x`–`(z, α)` path `q` and a `(z, -α)`–`y` path `r` into an
/// `x`–`y` path inside their union, cutting at the first vertex of `q` on `r`.
pub fn stitch(graph: &BidirectedGraph, q: &Path, r: &Path) -> Result<Path> {
    if q.end() != r.start() {
        return Err(Error::contract("stitched paths must meet at z"));
    }
    let rpos: HashMap<VertexId, usize> = r
        .vertices
        .iter()
        .enumerate()
        .map(|(j, &v)| (v, j))
        .collect();
    for (i, &a) in q.vertices.iter().enumerate() {
        let Some(&j) = rpos.get(&a) else { continue };
        if i == 0 {
            return Ok(r.suffix(j));
        }
        if i == q.len() {
            return Ok(q.join(r));
        }
        if j == r.len() {
            return Ok(q.prefix(i));
        }
        let e = q.edges[i - 1];
        let f = r.edges[j];
        if graph.sign(a, e) != graph.sign(a, f) {
            return Ok(q.prefix(i).join(&r.suffix(j)));
        }
        return Err(Error::internal(format!(
            "stitch meets {} with equal signs",
            graph.vertex_name(a)
        )));
    }
    Err(Error::internal("stitched paths do not meet"))
}

fn check_input(graph: &BidirectedGraph, x: VertexId, y: VertexId, paths: &[Path]) -> Result<()> {
    for v in [x, y] {
        if !graph.has_vertex(v) {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
    }
    if x == y {
        return Err(Error::contract("x and y must differ"));
    }
    let mut used = EdgeSet::empty(graph.edge_count());
    for p in paths {
        if p.vertices.iter().any(|&v| !graph.has_vertex(v)) || p.edges.iter().any(|&e| !graph.has_edge(e)) {
            return Err(Error::contract("input path references unknown ids"));
        }
        if !p.is_path(graph) || p.start() != x || p.end() != y {
            return Err(Error::contract(format!("`{}` is not an x-y path", p.display(graph))));
        }
        for &e in &p.edges {
            if used.contains(e) {
                return Err(Error::contract("input paths are not edge-disjoint"));
            }
            used.insert(e);
        }
    }
    Ok(())
}

/// Checks an outcome against the instance; used after every top-level run.
pub fn verify_outcome(
    graph: &BidirectedGraph,
    x: VertexId,
    y: VertexId,
    paths: &[Path],
    outcome: &EdgeMengerOutcome,
) -> Result<()> {
    let k = paths.len();
    match outcome {
        EdgeMengerOutcome::Separator(s) => {
            if s.len() != k {
                return Err(Error::internal("separator has the wrong size"));
            }
            let forbidden = EdgeSet::from_edges(graph.edge_count(), s.iter().copied());
            if find_path(graph, x, y, &forbidden)?.is_some() {
                return Err(Error::internal("separator leaves an x-y path"));
            }
        }
        EdgeMengerOutcome::Paths(out) => {
            if out.len() != k + 1 {
                return Err(Error::internal("wrong number of paths"));
            }
            check_input(graph, x, y, out).map_err(|e| Error::internal(format!("output paths: {e}")))?;
            for (p, q) in paths.iter().zip(out) {
                if p.edges[0] != q.edges[0] {
                    return Err(Error::internal("first edge not preserved"));
                }
            }
        }
    }
    Ok(())
}

pub fn edge_menger(
    graph: &BidirectedGraph,
    x: VertexId,
    y: VertexId,
    paths: &[Path],
) -> Result<EdgeMengerOutcome> {
    edge_menger_with(graph, x, y, paths, EdgeMengerOptions::default()).map(|r| r.outcome)
}

pub fn edge_menger_with(
    graph: &BidirectedGraph,
    x: VertexId,
    y: VertexId,
    paths: &[Path],
    options: EdgeMengerOptions,
) -> Result<EdgeMengerReport> {
    check_input(graph, x, y, paths)?;
    if options.check_precondition {
        if let Some(t) = closed_trail_at(graph, x)? {
            return Err(Error::Precondition {
                message: format!("{} lies on a closed trail", graph.vertex_name(x)),
                witness: Some(t),
            });
        }
    }
    let normalized = graph.with_signs_at_vertex(x, Sign::Minus);
    let mut depth = 0;
    let outcome = recurse(&normalized, x, y, paths.to_vec(), 0, &mut depth)?;
    verify_outcome(graph, x, y, paths, &outcome)?;
    Ok(EdgeMengerReport {
        outcome,
        recursion_depth: depth,
    })
}

fn total_len(paths: &[Path]) -> usize {
    paths.iter().map(Walk::len).sum()
}

fn recurse(
    g: &BidirectedGraph,
    x: VertexId,
    y: VertexId,
    paths: Vec<Path>,
    level: usize,
    depth: &mut usize,
) -> Result<EdgeMengerOutcome> {
    *depth = (*depth).max(level);
    let m = g.edge_count();
    let k = paths.len();
    let firsts: Vec<EdgeId> = paths.iter().map(|p| p.edges[0]).collect();
    let forbidden = EdgeSet::from_edges(m, firsts.iter().copied());
    let Some(new) = find_path(g, x, y, &forbidden)? else {
        return Ok(EdgeMengerOutcome::Separator(firsts));
    };
    let mut owner: BTreeMap<EdgeId, (usize, usize)> = BTreeMap::new();
    for (i, p) in paths.iter().enumerate() {
        for (pos, &e) in p.edges.iter().enumerate() {
            owner.insert(e, (i, pos));
        }
    }
    let hit = new
        .edges
        .iter()
        .enumerate()
        .find(|(_, e)| owner.contains_key(e))
        .map(|(i, &e)| (i, e));
    let Some((pos_new, e)) = hit else {
        let mut out = paths;
        out.push(new);
        return Ok(EdgeMengerOutcome::Paths(out));
    };
    let (j, pos_k) = owner[&e];
    let mut order: Vec<usize> = (0..k).collect();
    order.swap(j, k - 1);
    let ps: Vec<Path> = order.iter().map(|&i| paths[i].clone()).collect();
    let pk = &ps[k - 1];
    let v = pk.vertices[pos_k];
    let w = pk.vertices[pos_k + 1];
    if new.vertices[pos_new] != v {
        return Err(Error::internal("shared edge traversed in opposite directions"));
    }
    let r1 = pk.prefix(pos_k);
    let r2 = new.prefix(pos_new);
    let a1 = compute_appendage(g, &r1, x)?.with_path(m);
    let a2 = compute_appendage(g, &r2, x)?.with_path(m);
    if !a1.is_disjoint(&a2) {
        return Err(Error::internal("appendages of R1 and R2 intersect"));
    }
    let oe = g.orient(e, v);
    let aux = build_aux_edge(g, x, oe, &a1, &a2)?;

    let to_aux = |p: &Walk| -> Result<Walk> {
        let edges = p
            .edges
            .iter()
            .map(|&f| aux.to_aux[f.0].ok_or_else(|| Error::internal("path edge removed from B^")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Walk {
            vertices: p.vertices.clone(),
            edges,
        })
    };
    let mut hat_paths = Vec::with_capacity(k);
    for p in &ps[..k - 1] {
        hat_paths.push(to_aux(p)?);
    }
    let tail = to_aux(&pk.suffix(pos_k + 1))?;
    let head = Walk {
        vertices: vec![x, w],
        edges: vec![aux.new_edge_hat],
    };
    hat_paths.push(head.join(&tail));
    if total_len(&hat_paths) >= total_len(&ps) {
        return Err(Error::internal("recursion does not shorten the paths"));
    }

    let sub = recurse(&aux.graph, x, y, hat_paths, level + 1, depth)?;
    let back = |p: &Walk| -> Result<Walk> {
        if p.vertices.contains(&aux.apex) {
            return Err(Error::internal("apex on a translated path"));
        }
        let edges = p
            .edges
            .iter()
            .map(|&f| match aux.origin[f.0] {
                AuxOrigin::Original(o) => Ok(o),
                _ => Err(Error::internal("auxiliary edge on a translated path")),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Walk {
            vertices: p.vertices.clone(),
            edges,
        })
    };
    match sub {
        EdgeMengerOutcome::Separator(s) => {
            let s = s
                .into_iter()
                .map(|f| match aux.origin[f.0] {
                    AuxOrigin::Original(o) => Ok(o),
                    AuxOrigin::Hat => Ok(e),
                    _ => Err(Error::internal("apex edge in separator")),
                })
                .collect::<Result<Vec<_>>>()?;
            let mut out = vec![EdgeId(0); k];
            for (i, &f) in s.iter().enumerate() {
                out[order[i]] = f;
            }
            Ok(EdgeMengerOutcome::Separator(out))
        }
        EdgeMengerOutcome::Paths(hp) => {
            let mut res = Vec::with_capacity(k + 1);
            for p in &hp[..k - 1] {
                res.push(back(p)?);
            }
            let pk_hat = &hp[k - 1];
            if pk_hat.edges[0] != aux.new_edge_hat {
                return Err(Error::internal("recursive P_k lost its first edge"));
            }
            let rest_k = back(&pk_hat.suffix(1))?;
            let through_e = |r: &Walk| {
                let mut q = r.clone();
                q.push(g, e);
                q
            };
            let pn = &hp[k];
            let (pk_out, pn_out) = if pn.edges[0] != aux.apex_edge {
                (stitch(g, &through_e(&r1), &rest_k)?, back(pn)?)
            } else {
                let AuxOrigin::Shortcut { path, side } = &aux.origin[pn.edges[1].0] else {
                    return Err(Error::internal("apex path without a shortcut"));
                };
                let rest = back(&pn.suffix(2))?;
                match side {
                    2 => (stitch(g, &through_e(&r1), &rest_k)?, stitch(g, path, &rest)?),
                    _ => (stitch(g, path, &rest)?, stitch(g, &through_e(&r2), &rest_k)?),
                }
            };
            res.push(pk_out);
            res.push(pn_out);
            let mut out = vec![Walk::trivial(x); k + 1];
            for (i, p) in res.into_iter().enumerate() {
                let slot = if i < k { order[i] } else { k };
                out[slot] = p;
            }
            Ok(EdgeMengerOutcome::Paths(out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generators::gen_edge_counterexample;
    use crate::graph::GraphBuilder;
    use Sign::{Minus as M, Plus as P};

    fn walk(g: &BidirectedGraph, start: &str, edges: &[&str]) -> Walk {
        let es: Vec<_> = edges.iter().map(|e| g.edge_by_name(e).unwrap()).collect();
        Walk::from_edges(g, g.vertex_by_name(start).unwrap(), &es).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = fixtures::edge();
        let (u, w) = (g.vertex_by_name("u").unwrap(), g.vertex_by_name("w").unwrap());
        match edge_menger(&g, u, w, &[]).unwrap() {
            EdgeMengerOutcome::Paths(ps) => assert_eq!(ps[0].display(&g), "u e w"),
            o => panic!("{o:?}"),
        }
        let p = walk(&g, "u", &["e"]);
        assert_eq!(
            edge_menger(&g, u, w, &[p]).unwrap(),
            EdgeMengerOutcome::Separator(vec![EdgeId(0)])
        );
    }

    #[test]
    fn counterexample_is_rejected() {
        let (g, x, y) = gen_edge_counterexample(1).unwrap();
        let p = find_path(&g, x, y, &EdgeSet::empty(g.edge_count())).unwrap().unwrap();
        match edge_menger(&g, x, y, &[p]) {
            Err(Error::Precondition { witness: Some(t), .. }) => {
                assert_eq!(t.start(), x);
                assert_eq!(t.end(), x);
            }
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        let g = fixtures::path2();
        let (u, w) = (g.vertex_by_name("u").unwrap(), g.vertex_by_name("w").unwrap());
        assert!(matches!(edge_menger(&g, u, u, &[]), Err(Error::Contract(_))));
        let p = walk(&g, "u", &["e1"]);
        assert!(matches!(edge_menger(&g, u, w, &[p]), Err(Error::Contract(_))));
        let p = walk(&g, "u", &["e1", "e2"]);
        assert!(matches!(
            edge_menger(&g, u, w, &[p.clone(), p]),
            Err(Error::Contract(_))
        ));
    }

    /// Two x-y routes whose naive second path reuses the first one's middle.
    fn crossing() -> BidirectedGraph {
        let mut b = GraphBuilder::new();
        for v in ["x", "p", "q", "r", "y"] {
            b.add_vertex(v).unwrap();
        }
        b.add_edge_by_name("xp", "x", M, "p", P).unwrap();
        b.add_edge_by_name("pq", "p", M, "q", P).unwrap();
        b.add_edge_by_name("qy", "q", M, "y", P).unwrap();
        b.add_edge_by_name("xr", "x", M, "r", P).unwrap();
        b.add_edge_by_name("rq", "r", M, "q", P).unwrap();
        b.add_edge_by_name("py", "p", M, "y", P).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn crossing_is_rerouted() {
        let g = crossing();
        let x = g.vertex_by_name("x").unwrap();
        let y = g.vertex_by_name("y").unwrap();
        let p1 = walk(&g, "x", &["xp", "pq", "qy"]);
        match edge_menger(&g, x, y, &[p1.clone()]).unwrap() {
            EdgeMengerOutcome::Paths(ps) => {
                assert_eq!(ps.len(), 2);
                assert_eq!(ps[0].edges[0], p1.edges[0]);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn aux_graph_of_crossing() {
        let g = crossing();
        let x = g.vertex_by_name("x").unwrap();
        let pq = g.edge_by_name("pq").unwrap();
        let p = g.vertex_by_name("p").unwrap();
        let m = g.edge_count();
        let a1 = EdgeSet::from_edges(m, [g.edge_by_name("xp").unwrap()]);
        let a2 = EdgeSet::empty(m);
        let aux = build_aux_edge(&g, x, g.orient(pq, p), &a1, &a2).unwrap();
        let apex_plus = aux
            .graph
            .incident(aux.apex)
            .iter()
            .filter(|&&f| aux.graph.sign(aux.apex, f) == P)
            .count();
        assert_eq!(apex_plus, 1);
        let shortcuts: Vec<_> = aux.shortcut_edges().collect();
        assert_eq!(shortcuts.len(), 1);
        assert_eq!(shortcuts[0].2, 1);
        assert_eq!(aux.to_aux[pq.0], None);
        let hat = aux.graph.edge(aux.new_edge_hat);
        assert_eq!(hat.sign_at(x), M);
        assert_eq!(hat.sign_at(g.vertex_by_name("q").unwrap()), P);
    }

    #[test]
    fn stitch_cases() {
        let g = fixtures::path2();
        let q = walk(&g, "u", &["e1"]);
        let r = walk(&g, "v", &["e2"]);
        assert_eq!(stitch(&g, &q, &r).unwrap().display(&g), "u e1 v e2 w");
        let g = crossing();
        let q = walk(&g, "x", &["xr"]);
        let r = walk(&g, "r", &["xr", "xp", "py"]);
        assert_eq!(stitch(&g, &q, &r).unwrap().display(&g), "x xp p py y");
    }
}

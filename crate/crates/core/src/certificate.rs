//! JSON certificates and a checker that re-validates them against the input
//! document using walk validation and plain backtracking only.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::format::Document;
use crate::menger_edge::{EdgeMengerOutcome, EdgeMengerReport};
use crate::menger_vertex::{VertexMengerOutcome, VertexMengerReport};
use crate::graph::{support, BidirectedGraph, EdgeId, Sign, SignedVertex, SignedVertexSet, VertexId};
use crate::walk::{classify_set_walk, classify_walk, Walk, WalkClass};

/// A walk as names, with the sign left and the sign arrived at per step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkCert {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub signs: Vec<String>,
}

impl WalkCert {
    pub fn new(graph: &BidirectedGraph, w: &Walk) -> Self {
        WalkCert {
            vertices: w.vertices.iter().map(|&v| graph.vertex_name(v).to_string()).collect(),
            edges: w.edges.iter().map(|&e| graph.edge_name(e).to_string()).collect(),
            signs: w
                .oriented_edges()
                .map(|oe| format!("{}{}", graph.sign(oe.tail, oe.edge), graph.sign(oe.head, oe.edge)))
                .collect(),
        }
    }

    /// Resolves the names and checks the recorded signs.
    pub fn resolve(&self, graph: &BidirectedGraph) -> Result<Walk, String> {
        if self.vertices.len() != self.edges.len() + 1 || self.signs.len() != self.edges.len() {
            return Err("walk has inconsistent lengths".into());
        }
        let vertices = self
            .vertices
            .iter()
            .map(|n| graph.vertex_by_name(n).ok_or(format!("unknown vertex `{n}`")))
            .collect::<Result<Vec<_>, _>>()?;
        let edges = self
            .edges
            .iter()
            .map(|n| graph.edge_by_name(n).ok_or(format!("unknown edge `{n}`")))
            .collect::<Result<Vec<_>, _>>()?;
        let w = Walk { vertices, edges };
        if classify_walk(graph, &w).map_err(|e| e.to_string())? == WalkClass::Invalid {
            return Err(format!("`{}` is not a walk", self.vertices.join(" ")));
        }
        if WalkCert::new(graph, &w).signs != self.signs {
            return Err("recorded signs disagree with the graph".into());
        }
        Ok(w)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recursion_depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    /// `paths`, `trail`, `clean`, `edge-clean`, `connectivity`, `appendage`,
    /// `menger-edge` or `menger-vertex`.
    pub command: String,
    /// `paths`, `separator`, `found`, `none`, `true`, `false` or `appendage`.
    pub outcome: String,
    /// Set names for set problems, vertex names otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    /// Signed endpoints as `name:sign`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub given: Vec<WalkCert>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub paths: Vec<WalkCert>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub separator: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub flags: BTreeMap<String, bool>,
    pub provenance: Provenance,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }
}

/// Certificate for a vertex-Menger run between the sets named `x` and `y`.
pub fn vertex_menger_certificate(
    graph: &BidirectedGraph,
    x: &str,
    y: &str,
    given: &[Walk],
    report: &VertexMengerReport,
) -> Certificate {
    let mut cert = Certificate {
        command: "menger-vertex".into(),
        x: Some(x.into()),
        y: Some(y.into()),
        given: given.iter().map(|w| WalkCert::new(graph, w)).collect(),
        provenance: Provenance {
            algorithm: "vertex-split reduction to edge augmentation".into(),
            recursion_depth: Some(report.recursion_depth),
            timings_ms: None,
        },
        ..Default::default()
    };
    match &report.outcome {
        VertexMengerOutcome::Paths(ps) => {
            cert.outcome = "paths".into();
            cert.paths = ps.iter().map(|w| WalkCert::new(graph, w)).collect();
        }
        VertexMengerOutcome::Separator(s) => {
            cert.outcome = "separator".into();
            let mut names: Vec<String> = s.iter().map(|&v| graph.vertex_name(v).to_string()).collect();
            names.sort();
            cert.separator = names;
        }
    }
    cert
}

/// Certificate for an edge-Menger run between vertices `x` and `y`.
pub fn edge_menger_certificate(
    graph: &BidirectedGraph,
    x: VertexId,
    y: VertexId,
    given: &[Walk],
    report: &EdgeMengerReport,
) -> Certificate {
    let mut cert = Certificate {
        command: "menger-edge".into(),
        x: Some(graph.vertex_name(x).into()),
        y: Some(graph.vertex_name(y).into()),
        given: given.iter().map(|w| WalkCert::new(graph, w)).collect(),
        provenance: Provenance {
            algorithm: "appendage augmentation".into(),
            recursion_depth: Some(report.recursion_depth),
            timings_ms: None,
        },
        ..Default::default()
    };
    match &report.outcome {
        EdgeMengerOutcome::Paths(ps) => {
            cert.outcome = "paths".into();
            cert.paths = ps.iter().map(|w| WalkCert::new(graph, w)).collect();
        }
        EdgeMengerOutcome::Separator(s) => {
            cert.outcome = "separator".into();
            let mut names: Vec<String> = s.iter().map(|&e| graph.edge_name(e).to_string()).collect();
            names.sort();
            cert.separator = names;
        }
    }
    cert
}

pub fn parse_signed(graph: &BidirectedGraph, s: &str) -> Result<SignedVertex, String> {
    let (name, sign) = s.rsplit_once(':').ok_or(format!("expected `vertex:sign`, got `{s}`"))?;
    let v = graph.vertex_by_name(name).ok_or(format!("unknown vertex `{name}`"))?;
    let mut cs = sign.chars();
    match (cs.next().and_then(Sign::from_char), cs.next()) {
        (Some(s), None) => Ok(SignedVertex::new(v, s)),
        _ => Err(format!("bad sign in `{s}`")),
    }
}

/// Backtracking search for a path from one of `starts`, extended only
/// through vertices outside `stop`, and accepted by `done` when it reaches
/// a vertex of `stop`. Branches that cannot reach `stop` even by a walk are
/// cut.
fn search_path(
    graph: &BidirectedGraph,
    deleted: &BTreeSet<EdgeId>,
    starts: &SignedVertexSet,
    stop: &BTreeSet<VertexId>,
    done: &dyn Fn(&Walk) -> bool,
) -> Option<Walk> {
    fn reachable(
        graph: &BidirectedGraph,
        deleted: &BTreeSet<EdgeId>,
        stop: &BTreeSet<VertexId>,
        used: &BTreeSet<VertexId>,
        at: VertexId,
        forbidden_sign: Option<Sign>,
    ) -> bool {
        let mut seen = BTreeSet::new();
        let mut q = VecDeque::from([(at, forbidden_sign)]);
        while let Some((v, bad)) = q.pop_front() {
            for &e in graph.incident(v) {
                if deleted.contains(&e) || Some(graph.sign(v, e)) == bad {
                    continue;
                }
                let w = graph.edge(e).other(v);
                if used.contains(&w) {
                    continue;
                }
                if stop.contains(&w) {
                    return true;
                }
                let state = (w, graph.sign(w, e));
                if seen.insert(state) {
                    q.push_back((w, Some(state.1)));
                }
            }
        }
        false
    }
    fn go(
        graph: &BidirectedGraph,
        deleted: &BTreeSet<EdgeId>,
        stop: &BTreeSet<VertexId>,
        done: &dyn Fn(&Walk) -> bool,
        w: &mut Walk,
        used: &mut BTreeSet<VertexId>,
        first: Sign,
    ) -> Option<Walk> {
        let cur = w.end();
        let bad = match w.edges.last() {
            Some(&e) => Some(graph.sign(cur, e)),
            None => Some(-first),
        };
        if !reachable(graph, deleted, stop, used, cur, bad) {
            return None;
        }
        for &e in graph.incident(cur) {
            if deleted.contains(&e) || Some(graph.sign(cur, e)) == bad {
                continue;
            }
            let next = graph.edge(e).other(cur);
            if used.contains(&next) {
                continue;
            }
            w.edges.push(e);
            w.vertices.push(next);
            if stop.contains(&next) {
                if done(w) {
                    return Some(w.clone());
                }
            } else {
                used.insert(next);
                if let Some(found) = go(graph, deleted, stop, done, w, used, first) {
                    return Some(found);
                }
                used.remove(&next);
            }
            w.edges.pop();
            w.vertices.pop();
        }
        None
    }
    for sv in starts {
        let mut w = Walk::trivial(sv.vertex);
        let mut used = BTreeSet::from([sv.vertex]);
        if let Some(found) = go(graph, deleted, stop, done, &mut w, &mut used, sv.sign) {
            return Some(found);
        }
    }
    None
}

fn xy_path_exists(graph: &BidirectedGraph, x: &SignedVertexSet, y: &SignedVertexSet, gone: &BTreeSet<VertexId>) -> bool {
    let x: SignedVertexSet = x.iter().filter(|s| !gone.contains(&s.vertex)).copied().collect();
    let y: SignedVertexSet = y.iter().filter(|s| !gone.contains(&s.vertex)).copied().collect();
    if support(&x)
        .iter()
        .any(|&v| Sign::BOTH.iter().any(|&a| x.contains(&SignedVertex::new(v, a)) && y.contains(&SignedVertex::new(v, -a))))
    {
        return true;
    }
    let deleted: BTreeSet<EdgeId> = graph
        .edge_ids()
        .filter(|&e| gone.contains(&graph.edge(e).u) || gone.contains(&graph.edge(e).v))
        .collect();
    let stop: BTreeSet<VertexId> = support(&x).union(&support(&y)).copied().collect();
    search_path(graph, &deleted, &x, &stop, &|w| classify_set_walk(graph, &x, &y, w)).is_some()
}

fn edge_path_exists(graph: &BidirectedGraph, x: VertexId, y: VertexId, deleted: &BTreeSet<EdgeId>) -> bool {
    let starts = Sign::BOTH.iter().map(|&s| SignedVertex::new(x, s)).collect();
    let stop = BTreeSet::from([y]);
    search_path(graph, deleted, &starts, &stop, &|_| true).is_some()
}

/// Closed trails at `x`, by backtracking over unused edges.
fn closed_trail_exists(graph: &BidirectedGraph, x: VertexId) -> bool {
    fn go(graph: &BidirectedGraph, x: VertexId, cur: VertexId, bad: Option<Sign>, used: &mut Vec<EdgeId>) -> bool {
        for &e in graph.incident(cur) {
            if used.contains(&e) || Some(graph.sign(cur, e)) == bad {
                continue;
            }
            let next = graph.edge(e).other(cur);
            if next == x {
                return true;
            }
            used.push(e);
            if go(graph, x, next, Some(graph.sign(next, e)), used) {
                return true;
            }
            used.pop();
        }
        false
    }
    go(graph, x, x, None, &mut Vec::new())
}

fn resolve_all(graph: &BidirectedGraph, ws: &[WalkCert]) -> Result<Vec<Walk>, String> {
    ws.iter().map(|w| w.resolve(graph)).collect()
}

fn vertex(graph: &BidirectedGraph, name: &Option<String>) -> Result<VertexId, String> {
    let n = name.as_ref().ok_or("missing vertex name")?;
    graph.vertex_by_name(n).ok_or(format!("unknown vertex `{n}`"))
}

fn set<'a>(doc: &'a Document, name: &Option<String>) -> Result<&'a SignedVertexSet, String> {
    let n = name.as_ref().ok_or("missing set name")?;
    doc.sets.get(n).ok_or(format!("no set named `{n}`"))
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// Re-validates `cert` against `doc`.
pub fn check(doc: &Document, cert: &Certificate) -> Result<(), String> {
    let g = &doc.graph;
    if cert.outcome == "precondition" {
        return check_precondition(doc, cert);
    }
    match cert.command.as_str() {
        "menger-vertex" => {
            let (x, y) = (set(doc, &cert.x)?, set(doc, &cert.y)?);
            let given = resolve_all(g, &cert.given)?;
            check_vertex_family(g, x, y, &given, "given")?;
            let k = given.len();
            match cert.outcome.as_str() {
                "paths" => {
                    let out = resolve_all(g, &cert.paths)?;
                    ensure(out.len() == k + 1, "expected k+1 paths")?;
                    check_vertex_family(g, x, y, &out, "output")?;
                    for (p, q) in given.iter().zip(&out) {
                        ensure(p.start() == q.start(), "start vertex not preserved")?;
                    }
                    Ok(())
                }
                "separator" => {
                    let s = cert
                        .separator
                        .iter()
                        .map(|n| g.vertex_by_name(n).ok_or(format!("unknown vertex `{n}`")))
                        .collect::<Result<BTreeSet<_>, _>>()?;
                    ensure(s.len() == k, "separator must have exactly k vertices")?;
                    ensure(!xy_path_exists(g, x, y, &s), "an X-Y path survives the separator")
                }
                o => Err(format!("unknown outcome `{o}`")),
            }
        }
        "menger-edge" => {
            let (x, y) = (vertex(g, &cert.x)?, vertex(g, &cert.y)?);
            let given = resolve_all(g, &cert.given)?;
            check_edge_family(g, x, y, &given, "given")?;
            let k = given.len();
            match cert.outcome.as_str() {
                "paths" => {
                    let out = resolve_all(g, &cert.paths)?;
                    ensure(out.len() == k + 1, "expected k+1 paths")?;
                    check_edge_family(g, x, y, &out, "output")?;
                    for (p, q) in given.iter().zip(&out) {
                        ensure(p.edges[0] == q.edges[0], "first edge not preserved")?;
                    }
                    Ok(())
                }
                "separator" => {
                    let s = cert
                        .separator
                        .iter()
                        .map(|n| g.edge_by_name(n).ok_or(format!("unknown edge `{n}`")))
                        .collect::<Result<BTreeSet<_>, _>>()?;
                    ensure(s.len() == k, "separator must have exactly k edges")?;
                    ensure(!edge_path_exists(g, x, y, &s), "an x-y path survives the separator")
                }
                o => Err(format!("unknown outcome `{o}`")),
            }
        }
        "paths" | "trail" => {
            let from = parse_signed(g, cert.from.as_deref().ok_or("missing from")?)?;
            let to = parse_signed(g, cert.to.as_deref().ok_or("missing to")?)?;
            let want_path = cert.command == "paths";
            match cert.outcome.as_str() {
                "found" => {
                    let [w] = resolve_all(g, &cert.paths)?.try_into().map_err(|_| "expected one walk")?;
                    let class = classify_walk(g, &w).map_err(|e| e.to_string())?;
                    let ok = if want_path { class == WalkClass::Path } else { class != WalkClass::Walk };
                    ensure(ok && !w.is_trivial(), "witness has the wrong class")?;
                    ensure(
                        w.signed_start(g) == Some(from) && w.signed_end(g) == Some(to),
                        "witness has the wrong signed endpoints",
                    )
                }
                "none" if want_path => {
                    let stop = BTreeSet::from([to.vertex]);
                    let found = search_path(g, &BTreeSet::new(), &[from].into_iter().collect(), &stop, &|w| {
                        w.signed_end(g) == Some(to)
                    });
                    ensure(found.is_none(), "a path exists")
                }
                "none" => ensure(!trail_exists(g, from, to), "a trail exists"),
                o => Err(format!("unknown outcome `{o}`")),
            }
        }
        "clean" => {
            let x = set(doc, &cert.x)?;
            match cert.outcome.as_str() {
                "false" => {
                    let [w] = resolve_all(g, &cert.paths)?.try_into().map_err(|_| "expected one witness")?;
                    ensure(w.is_path(g) && !w.is_trivial(), "witness is not a nontrivial path")?;
                    ensure(
                        x.contains(&w.signed_start(g).unwrap()) && x.contains(&w.signed_end(g).unwrap()),
                        "witness does not start and end in the set",
                    )
                }
                "true" => {
                    let stop = support(x);
                    let found = search_path(g, &BTreeSet::new(), x, &stop, &|w| x.contains(&w.signed_end(g).unwrap()));
                    ensure(found.is_none(), "a path starts and ends in the set")
                }
                o => Err(format!("unknown outcome `{o}`")),
            }
        }
        "edge-clean" => {
            let x = vertex(g, &cert.x)?;
            match cert.outcome.as_str() {
                "false" => {
                    let [w] = resolve_all(g, &cert.paths)?.try_into().map_err(|_| "expected one witness")?;
                    ensure(
                        w.is_trail(g) && !w.is_trivial() && w.start() == x && w.end() == x,
                        "witness is not a closed trail at x",
                    )
                }
                "true" => ensure(!closed_trail_exists(g, x), "a closed trail exists"),
                o => Err(format!("unknown outcome `{o}`")),
            }
        }
        "appendage" => {
            let [p] = resolve_all(g, &cert.given)?.try_into().map_err(|_| "expected one base path")?;
            ensure(p.is_path(g), "base is not a path")?;
            let x = vertex(g, &cert.x)?;
            ensure(p.start() == x, "anchor does not start the base path")?;
            let a = cert
                .edges
                .iter()
                .map(|n| g.edge_by_name(n).ok_or(format!("unknown edge `{n}`")))
                .collect::<Result<BTreeSet<_>, _>>()?;
            let within: BTreeSet<EdgeId> = a.iter().chain(&p.edges).copied().collect();
            for &e in &a {
                let ed = g.edge(e);
                for head in [ed.u, ed.v] {
                    if head == x {
                        continue;
                    }
                    let mut rest = within.clone();
                    rest.remove(&e);
                    ensure(
                        trail_to_vertex(g, &rest, head, -g.sign(head, e), x),
                        "an edge has no trail back to the anchor",
                    )?;
                }
            }
            Ok(())
        }
        "connectivity" => {
            // recomputed by brute force on small inputs only
            let strong = cert.flags.get("strongly-connected").copied().ok_or("missing flag")?;
            let circular = cert.flags.get("circularly-connected").copied().ok_or("missing flag")?;
            ensure(strong == brute_strong(g), "strong connectivity flag is wrong")?;
            ensure(circular == brute_circular(g), "circular connectivity flag is wrong")
        }
        c => Err(format!("unknown command `{c}`")),
    }
}

/// A precondition refusal: `X` is not clean (vertex Menger) or `x` lies on
/// a closed trail (edge Menger, appendage).
fn check_precondition(doc: &Document, cert: &Certificate) -> Result<(), String> {
    let g = &doc.graph;
    let [w] = resolve_all(g, &cert.paths)?.try_into().map_err(|_| "expected one witness")?;
    match cert.command.as_str() {
        "menger-vertex" => {
            let x = set(doc, &cert.x)?;
            ensure(w.is_path(g) && !w.is_trivial(), "witness is not a nontrivial path")?;
            ensure(
                x.contains(&w.signed_start(g).unwrap()) && x.contains(&w.signed_end(g).unwrap()),
                "witness does not start and end in X",
            )
        }
        "menger-edge" | "appendage" => {
            let x = vertex(g, &cert.x)?;
            ensure(
                w.is_trail(g) && !w.is_trivial() && w.start() == x && w.end() == x,
                "witness is not a closed trail at x",
            )
        }
        c => Err(format!("command `{c}` has no precondition")),
    }
}

fn check_vertex_family(
    g: &BidirectedGraph,
    x: &SignedVertexSet,
    y: &SignedVertexSet,
    ps: &[Walk],
    what: &str,
) -> Result<(), String> {
    let mut used = BTreeSet::new();
    for p in ps {
        ensure(p.is_path(g) && classify_set_walk(g, x, y, p), &format!("{what}: not an X-Y path"))?;
        for &v in &p.vertices {
            ensure(used.insert(v), &format!("{what}: paths share a vertex"))?;
        }
    }
    Ok(())
}

fn check_edge_family(g: &BidirectedGraph, x: VertexId, y: VertexId, ps: &[Walk], what: &str) -> Result<(), String> {
    let mut used = BTreeSet::new();
    for p in ps {
        ensure(
            p.is_path(g) && p.start() == x && p.end() == y && !p.is_trivial(),
            &format!("{what}: not an x-y path"),
        )?;
        for &e in &p.edges {
            ensure(used.insert(e), &format!("{what}: paths share an edge"))?;
        }
    }
    Ok(())
}

fn trail_search(
    g: &BidirectedGraph,
    allowed: Option<&BTreeSet<EdgeId>>,
    start: VertexId,
    first: Sign,
    accept: &dyn Fn(VertexId, Sign) -> bool,
) -> bool {
    fn go(
        g: &BidirectedGraph,
        allowed: Option<&BTreeSet<EdgeId>>,
        cur: VertexId,
        bad: Sign,
        used: &mut Vec<EdgeId>,
        accept: &dyn Fn(VertexId, Sign) -> bool,
    ) -> bool {
        for &e in g.incident(cur) {
            if used.contains(&e) || g.sign(cur, e) == bad || allowed.is_some_and(|a| !a.contains(&e)) {
                continue;
            }
            let next = g.edge(e).other(cur);
            let arrive = g.sign(next, e);
            if accept(next, arrive) {
                return true;
            }
            used.push(e);
            if go(g, allowed, next, arrive, used, accept) {
                return true;
            }
            used.pop();
        }
        false
    }
    go(g, allowed, start, -first, &mut Vec::new(), accept)
}

fn trail_exists(g: &BidirectedGraph, from: SignedVertex, to: SignedVertex) -> bool {
    trail_search(g, None, from.vertex, from.sign, &|v, s| v == to.vertex && s == to.sign)
}

fn trail_to_vertex(g: &BidirectedGraph, allowed: &BTreeSet<EdgeId>, start: VertexId, first: Sign, x: VertexId) -> bool {
    trail_search(g, Some(allowed), start, first, &|v, _| v == x)
}

fn signed_path(g: &BidirectedGraph, from: SignedVertex, to: SignedVertex, deleted: &BTreeSet<EdgeId>) -> bool {
    let stop = BTreeSet::from([to.vertex]);
    search_path(g, deleted, &[from].into_iter().collect(), &stop, &|w| w.signed_end(g) == Some(to)).is_some()
}

fn brute_strong(g: &BidirectedGraph) -> bool {
    let none = BTreeSet::new();
    let vs: Vec<_> = g.vertices().collect();
    vs.iter().enumerate().all(|(i, &v)| {
        vs[i + 1..].iter().all(|&w| {
            Sign::BOTH.iter().any(|&a| {
                Sign::BOTH.iter().any(|&b| {
                    signed_path(g, SignedVertex::new(v, a), SignedVertex::new(w, b), &none)
                        && signed_path(g, SignedVertex::new(v, -a), SignedVertex::new(w, -b), &none)
                })
            })
        })
    })
}

fn brute_circular(g: &BidirectedGraph) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for e in g.edge_ids() {
        let ed = g.edge(e);
        let deleted = BTreeSet::from([e]);
        if signed_path(
            g,
            SignedVertex::new(ed.v, -ed.sign_v),
            SignedVertex::new(ed.u, -ed.sign_u),
            &deleted,
        ) {
            let (a, b) = (find(&mut parent, ed.u.0), find(&mut parent, ed.v.0));
            parent[a] = b;
        }
    }
    (0..n).map(|i| find(&mut parent, i)).collect::<BTreeSet<_>>().len() <= 1
}

//! The `bgf 1` text format.
//!
//! ```text
//! bgf 1
//! # comment
//! v u
//! v w
//! e e1 u - w +
//! set X u:-
//! path u e1 w
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, GraphBuilder, Sign, SignedVertex, SignedVertexSet};
use crate::walk::Walk;

#[derive(Debug, Clone)]
pub struct Document {
    pub graph: BidirectedGraph,
    pub sets: BTreeMap<String, SignedVertexSet>,
    pub paths: Vec<Walk>,
}

impl Document {
    pub fn new(graph: BidirectedGraph) -> Self {
        Document {
            graph,
            sets: BTreeMap::new(),
            paths: Vec::new(),
        }
    }

    pub fn set(&self, name: &str) -> Result<&SignedVertexSet> {
        self.sets
            .get(name)
            .ok_or_else(|| Error::contract(format!("no set named `{name}`")))
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain([(line.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn sign(t: &Token, line: usize) -> Result<Sign> {
    let mut cs = t.text.chars();
    match (cs.next().and_then(Sign::from_char), cs.next()) {
        (Some(s), None) => Ok(s),
        _ => Err(err(line, t.column, format!("expected `+` or `-`, found `{}`", t.text))),
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let lines: Vec<(usize, Vec<Token>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty() && !t[0].text.starts_with('#'))
        .collect();
    let Some((first, header)) = lines.first() else {
        return Err(err(1, 1, "missing `bgf 1` header"));
    };
    if header.len() != 2 || header[0].text != "bgf" || header[1].text != "1" {
        return Err(err(*first, 1, "expected header `bgf 1`"));
    }
    let body = &lines[1..];
    let arity = |line: usize, toks: &[Token], n: usize| -> Result<()> {
        if toks.len() != n {
            let col = toks.get(n).map_or(toks[0].column, |t| t.column);
            return Err(err(line, col, format!("`{}` takes {} fields", toks[0].text, n - 1)));
        }
        Ok(())
    };

    let mut b = GraphBuilder::new();
    for (line, toks) in body {
        match toks[0].text {
            "v" => {
                arity(*line, toks, 2)?;
                b.add_vertex(toks[1].text)
                    .map_err(|_| err(*line, toks[1].column, format!("duplicate id `{}`", toks[1].text)))?;
            }
            "e" | "set" | "path" => {}
            other => return Err(err(*line, toks[0].column, format!("unknown record `{other}`"))),
        }
    }
    let vertex = |b: &GraphBuilder, line: usize, t: &Token| {
        b.vertex(t.text)
            .ok_or_else(|| err(line, t.column, format!("unknown vertex `{}`", t.text)))
    };
    let mut edge_line = HashMap::new();
    for (line, toks) in body.iter().filter(|(_, t)| t[0].text == "e") {
        arity(*line, toks, 6)?;
        let u = vertex(&b, *line, &toks[2])?;
        let su = sign(&toks[3], *line)?;
        let v = vertex(&b, *line, &toks[4])?;
        let sv = sign(&toks[5], *line)?;
        b.add_edge(toks[1].text, u, su, v, sv).map_err(|e| match e {
            Error::Loop(_) => err(*line, toks[4].column, format!("edge `{}` is a loop", toks[1].text)),
            _ => err(*line, toks[1].column, format!("duplicate id `{}`", toks[1].text)),
        })?;
        edge_line.insert(toks[1].text.to_string(), (*line, toks[1].column));
    }
    let graph = b.build().map_err(|e| match e {
        Error::DuplicateSignature(a, c) => {
            let (line, col) = edge_line[&c];
            err(line, col, format!("edges `{a}` and `{c}` have the same endpoints and signs"))
        }
        other => other,
    })?;

    let mut sets = BTreeMap::new();
    let mut paths = Vec::new();
    for (line, toks) in body {
        match toks[0].text {
            "set" => {
                if toks.len() < 2 {
                    return Err(err(*line, toks[0].column, "`set` needs a name"));
                }
                let mut set = SignedVertexSet::new();
                for t in &toks[2..] {
                    let Some((name, s)) = t.text.rsplit_once(':') else {
                        return Err(err(*line, t.column, format!("expected `vertex:sign`, found `{}`", t.text)));
                    };
                    let v = graph
                        .vertex_by_name(name)
                        .ok_or_else(|| err(*line, t.column, format!("unknown vertex `{name}`")))?;
                    let s = sign(
                        &Token {
                            text: s,
                            column: t.column + name.chars().count() + 1,
                        },
                        *line,
                    )?;
                    set.insert(SignedVertex::new(v, s));
                }
                if sets.insert(toks[1].text.to_string(), set).is_some() {
                    return Err(err(*line, toks[1].column, format!("duplicate set `{}`", toks[1].text)));
                }
            }
            "path" => paths.push(path_line(&graph, *line, toks)?),
            _ => {}
        }
    }
    Ok(Document { graph, sets, paths })
}

fn path_line(graph: &BidirectedGraph, line: usize, toks: &[Token]) -> Result<Walk> {
    if toks.len() % 2 != 0 {
        return Err(err(line, toks[0].column, "`path` alternates vertices and edges"));
    }
    let mut w = Walk::trivial(vertex_in(graph, line, &toks[1])?);
    for pair in toks[2..].chunks(2) {
        let e = graph
            .edge_by_name(pair[0].text)
            .ok_or_else(|| err(line, pair[0].column, format!("unknown edge `{}`", pair[0].text)))?;
        let v = vertex_in(graph, line, &pair[1])?;
        let ed = graph.edge(e);
        let cur = w.end();
        if !(ed.is_incident(cur) && ed.other(cur) == v) {
            return Err(err(line, pair[0].column, format!("edge `{}` does not join these vertices", pair[0].text)));
        }
        w.edges.push(e);
        w.vertices.push(v);
    }
    Ok(w)
}

/// The `path` lines of `text`, resolved against `graph`. Header, vertex,
/// edge and set lines are skipped, so a full document is accepted too.
pub fn parse_paths(graph: &BidirectedGraph, text: &str) -> Result<Vec<Walk>> {
    let mut out = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let toks = tokens(l);
        match toks.first().map(|t| t.text) {
            None => {}
            Some(t) if t.starts_with('#') => {}
            Some("bgf" | "v" | "e" | "set") => {}
            Some("path") => out.push(path_line(graph, i + 1, &toks)?),
            Some(other) => return Err(err(i + 1, toks[0].column, format!("unknown record `{other}`"))),
        }
    }
    Ok(out)
}

fn vertex_in(graph: &BidirectedGraph, line: usize, t: &Token) -> Result<crate::graph::VertexId> {
    graph
        .vertex_by_name(t.text)
        .ok_or_else(|| err(line, t.column, format!("unknown vertex `{}`", t.text)))
}

/// A `path` line body: alternating vertex and edge names.
pub fn walk_tokens(graph: &BidirectedGraph, w: &Walk) -> String {
    w.display(graph)
}

/// Canonical text: vertices, edges and sets sorted by name, then paths in
/// order.
pub fn serialize(doc: &Document) -> String {
    let g = &doc.graph;
    let mut out = String::from("bgf 1\n");
    let mut vs: Vec<&str> = g.vertices().map(|v| g.vertex_name(v)).collect();
    vs.sort_unstable();
    for v in vs {
        writeln!(out, "v {v}").unwrap();
    }
    let mut es: Vec<_> = g.edge_ids().collect();
    es.sort_by(|a, b| g.edge_name(*a).cmp(g.edge_name(*b)));
    for e in es {
        let ed = g.edge(e);
        writeln!(
            out,
            "e {} {} {} {} {}",
            g.edge_name(e),
            g.vertex_name(ed.u),
            ed.sign_u,
            g.vertex_name(ed.v),
            ed.sign_v
        )
        .unwrap();
    }
    for (name, set) in &doc.sets {
        let mut items: Vec<String> = set.iter().map(|s| g.signed_name(*s)).collect();
        items.sort();
        out.push_str("set ");
        out.push_str(name);
        for i in items {
            out.push(' ');
            out.push_str(&i);
        }
        out.push('\n');
    }
    for p in &doc.paths {
        writeln!(out, "path {}", walk_tokens(g, p)).unwrap();
    }
    out
}

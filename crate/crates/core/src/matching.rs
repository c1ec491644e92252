//! Perfect matchings in general graphs via Edmonds' blossom algorithm.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
    pairs: HashSet<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        UndirectedGraph {
            adj: vec![Vec::new(); n],
            pairs: HashSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    /// Adds `{u, v}`. Returns `false` if the pair was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::contract(format!("loop at {u}")));
        }
        if u >= self.adj.len() || v >= self.adj.len() {
            return Err(Error::contract(format!("edge {{{u}, {v}}} out of range")));
        }
        if !self.pairs.insert((u.min(v), u.max(v))) {
            return Ok(false);
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(true)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

/// A matching stored as a mate vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Matching::empty(n);
        for &(u, v) in pairs {
            if u >= n || v >= n || u == v {
                return Err(Error::contract(format!("bad matching pair ({u}, {v})")));
            }
            if m.mate[u].is_some() || m.mate[v].is_some() {
                return Err(Error::contract("matching pairs are not disjoint"));
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        Ok(m)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    pub fn exposed(&self) -> Vec<usize> {
        (0..self.mate.len())
            .filter(|&v| self.mate[v].is_none())
            .collect()
    }

    /// Matched pairs `(u, v)` with `u < v`, in increasing order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.pairs().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct Blossom<'a> {
    g: &'a UndirectedGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a UndirectedGraph, initial: &Matching) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: initial.mate.iter().map(|m| m.unwrap_or(NONE)).collect(),
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from the exposed vertex `root`; returns its
    /// other end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.adj[v].len() {
                let to = self.g.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Matching {
        for root in 0..self.g.vertex_count() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        Matching {
            mate: self
                .mate
                .into_iter()
                .map(|m| if m == NONE { None } else { Some(m) })
                .collect(),
        }
    }
}

/// Maximum matching grown from `initial` by augmenting from every exposed
/// vertex in index order.
pub fn maximum_matching_from(g: &UndirectedGraph, initial: &Matching) -> Result<Matching> {
    if initial.vertex_count() != g.vertex_count() {
        return Err(Error::contract("matching and graph sizes differ"));
    }
    for (u, v) in initial.pairs() {
        if !g.has_edge(u, v) {
            return Err(Error::contract(format!(
                "initial matching uses non-edge {{{u}, {v}}}"
            )));
        }
    }
    Ok(Blossom::new(g, initial).run())
}

pub fn maximum_matching(g: &UndirectedGraph) -> Matching {
    Blossom::new(g, &Matching::empty(g.vertex_count())).run()
}

/// A perfect matching of `g`, or `None` if there is none.
pub fn perfect_matching(g: &UndirectedGraph) -> Option<Matching> {
    let m = maximum_matching(g);
    check_matching(g, &m);
    m.is_perfect().then_some(m)
}

/// Like [`perfect_matching`] but warm-started from a matching of `g`.
pub fn perfect_matching_from(g: &UndirectedGraph, initial: &Matching) -> Result<Option<Matching>> {
    let m = maximum_matching_from(g, initial)?;
    check_matching(g, &m);
    Ok(m.is_perfect().then_some(m))
}

fn check_matching(g: &UndirectedGraph, m: &Matching) {
    for (u, mu) in m.mate.iter().enumerate() {
        if let Some(v) = *mu {
            assert_eq!(m.mate[v], Some(u), "mate vector is not symmetric");
            assert!(g.has_edge(u, v), "matching uses a non-edge");
        }
    }
}

/// Follows the component of `m ∪ m_prime` that contains `start`, where `m`
/// misses exactly `start` and one other vertex and `m_prime` is perfect.
pub fn alternating_component_path(
    g: &UndirectedGraph,
    m: &Matching,
    m_prime: &Matching,
    start: usize,
) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if m.vertex_count() != n || m_prime.vertex_count() != n {
        return Err(Error::contract("matching sizes differ from graph"));
    }
    if !m_prime.is_perfect() {
        return Err(Error::contract("second matching is not perfect"));
    }
    let exposed = m.exposed();
    if exposed.len() != 2 || !exposed.contains(&start) {
        return Err(Error::contract(
            "first matching must miss exactly the start vertex and one other",
        ));
    }
    for (u, v) in m.pairs().into_iter().chain(m_prime.pairs()) {
        if !g.has_edge(u, v) {
            return Err(Error::contract(format!("matching uses non-edge {{{u}, {v}}}")));
        }
    }
    let mut path = vec![start];
    let mut cur = start;
    loop {
        let next = m_prime.mate(cur).expect("perfect");
        path.push(next);
        match m.mate(next) {
            None => return Ok(path),
            Some(after) => {
                if m_prime.mate(after) == Some(next) || path.len() > n {
                    return Err(Error::contract("component is not a path"));
                }
                path.push(after);
                cur = after;
            }
        }
    }
}

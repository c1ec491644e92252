//! Counterexample families and random instance generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{
    BidirectedGraph, DirectedGraph, GraphBuilder, Sign, SignedVertex, SignedVertexSet, VertexId,
};
use crate::menger_vertex::build_hat;
use crate::walk::Walk;

fn grid_name(i: usize, j: usize) -> String {
    format!("x{i}_{j}")
}

/// The grid family: vertices `x{i}_{j}` with `1 <= i + j <= 2k + 1`, upward
/// vertical and rightward horizontal edges, and a diagonal with sign `-` at
/// both ends on the outer boundary. `X` is the left column, `Y` the bottom
/// row, each with the sign of its incident half-edges.
pub fn gen_grid(k: usize) -> Result<(BidirectedGraph, SignedVertexSet, SignedVertexSet)> {
    if k < 1 {
        return Err(Error::contract("grid size must be at least 1"));
    }
    let top = 2 * k + 1;
    let mut b = GraphBuilder::new();
    for s in 1..=top {
        for i in 0..=s {
            b.add_vertex(&grid_name(i, s - i))?;
        }
    }
    for i in 1..=2 * k {
        for j in 0..=2 * k - i {
            b.add_edge_by_name(
                &format!("v{i}_{j}"),
                &grid_name(i, j),
                Sign::Minus,
                &grid_name(i, j + 1),
                Sign::Plus,
            )?;
        }
    }
    for j in 1..=2 * k {
        for i in 0..=2 * k - j {
            b.add_edge_by_name(
                &format!("h{i}_{j}"),
                &grid_name(i, j),
                Sign::Minus,
                &grid_name(i + 1, j),
                Sign::Plus,
            )?;
        }
    }
    for i in 0..=2 * k {
        b.add_edge_by_name(
            &format!("d{i}"),
            &grid_name(i, top - i),
            Sign::Minus,
            &grid_name(i + 1, 2 * k - i),
            Sign::Minus,
        )?;
    }
    let g = b.build()?;
    let x = (1..=top)
        .map(|j| SignedVertex::new(g.vertex_by_name(&grid_name(0, j)).unwrap(), Sign::Minus))
        .collect();
    let y = (1..=top)
        .map(|i| SignedVertex::new(g.vertex_by_name(&grid_name(i, 0)).unwrap(), Sign::Minus))
        .collect();
    Ok((g, x, y))
}

/// The paths `P_1 .. P_{2k+1}` of the grid: right along row `i`, across the
/// diagonal, then down column `2k + 2 - i`.
pub fn grid_proof_paths(graph: &BidirectedGraph, k: usize) -> Vec<Walk> {
    let top = 2 * k + 1;
    let v = |i: usize, j: usize| graph.vertex_by_name(&grid_name(i, j)).expect("grid vertex");
    let e = |name: String| graph.edge_by_name(&name).expect("grid edge");
    (1..=top)
        .map(|i| {
            let mut edges = Vec::new();
            for c in 0..top - i {
                edges.push(e(format!("h{c}_{i}")));
            }
            edges.push(e(format!("d{}", top - i)));
            let col = top + 1 - i;
            for j in (0..i - 1).rev() {
                edges.push(e(format!("v{col}_{j}")));
            }
            Walk::from_edges(graph, v(0, i), &edges).expect("grid path")
        })
        .collect()
}

/// The vertex-split graph of `gen_grid(k)` with its two terminals.
pub fn gen_edge_counterexample(k: usize) -> Result<(BidirectedGraph, VertexId, VertexId)> {
    let (g, x, y) = gen_grid(k)?;
    let red = build_hat(&g, &x, &y);
    Ok((red.hat, red.x, red.y))
}

/// `m` random edges on `n` vertices `v0..`; duplicate signatures are skipped,
/// so the result may have fewer edges.
pub fn random_bidirected<R: Rng>(rng: &mut R, n: usize, m: usize) -> BidirectedGraph {
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.add_vertex(&format!("v{i}")).expect("unique");
    }
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    if n >= 2 {
        for _ in 0..m {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            let su = random_sign(rng);
            let sv = random_sign(rng);
            let key = if u < v { (u, su, v, sv) } else { (v, sv, u, su) };
            if seen.insert(key) {
                b.add_edge(&format!("e{count}"), VertexId(u), su, VertexId(v), sv)
                    .expect("valid");
                count += 1;
            }
        }
    }
    b.build().expect("signatures are unique")
}

pub fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Random loop-free digraph where each ordered pair is an arc with
/// probability `p`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> DirectedGraph {
    let mut d = DirectedGraph::new(n);
    for t in 0..n {
        for h in 0..n {
            if t != h && rng.gen_bool(p) {
                d.add_arc(t, h);
            }
        }
    }
    d
}

/// A random set of `size` signed vertices drawn from `candidates`.
pub fn random_signed_set<R: Rng>(
    rng: &mut R,
    candidates: &[VertexId],
    size: usize,
) -> SignedVertexSet {
    let mut all: Vec<SignedVertex> = candidates
        .iter()
        .flat_map(|&v| Sign::BOTH.map(|s| SignedVertex::new(v, s)))
        .collect();
    all.shuffle(rng);
    all.into_iter().take(size).collect()
}

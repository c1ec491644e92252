#![allow(dead_code)]

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use bimenger::generators::{random_bidirected, random_signed_set};
use bimenger::oracle::{closed_trail_brute, enum_paths};
use bimenger::{BidirectedGraph, Path, SignedVertexSet, VertexId};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random graph on `1..=max_n` vertices with up to `max_m` edges.
pub fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = BidirectedGraph> {
    (1..=max_n, 0..=max_m, any::<u64>()).prop_map(|(n, m, s)| random_bidirected(&mut rng(s), n, m))
}

/// Graph with two random signed sets.
pub fn graph_with_sets(
    max_n: usize,
    max_m: usize,
) -> impl Strategy<Value = (BidirectedGraph, SignedVertexSet, SignedVertexSet)> {
    (2..=max_n, 1..=max_m, 1..=3usize, 1..=3usize, any::<u64>()).prop_map(|(n, m, kx, ky, s)| {
        let mut r = rng(s);
        let g = random_bidirected(&mut r, n, m);
        let vs: Vec<VertexId> = g.vertices().collect();
        let x = random_signed_set(&mut r, &vs, kx);
        let y = random_signed_set(&mut r, &vs, ky);
        (g, x, y)
    })
}

/// An edge-clean vertex `x` together with a random path starting at it.
pub fn edge_clean_instance(seed: u64, max_n: usize, max_m: usize) -> (BidirectedGraph, VertexId, Path) {
    let mut r = rng(seed);
    loop {
        let n = r.gen_range(2..=max_n);
        let m = r.gen_range(1..=max_m);
        let g = random_bidirected(&mut r, n, m);
        let x = VertexId(r.gen_range(0..n));
        if closed_trail_brute(&g, x).is_some() {
            continue;
        }
        let mut paths = Vec::new();
        for y in g.vertices().filter(|&y| y != x) {
            paths.extend(enum_paths(&g, x, y, 16).unwrap());
        }
        if let Some(p) = paths.choose(&mut r) {
            return (g, x, p.clone());
        }
    }
}

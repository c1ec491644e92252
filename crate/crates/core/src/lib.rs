//! Constructive connectivity algorithms for bidirected graphs.
//!
//! The crate covers signed path and trail search, appendages of paths, the
//! edge- and vertex-disjoint Menger augmentation algorithms, connectivity
//! tests, counterexample generators and brute-force oracles used to check
//! all of the above.

pub mod appendage;
pub mod certificate;
pub mod connectivity;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod menger_edge;
pub mod menger_vertex;
pub mod oracle;
pub mod pathfinder;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{
    BidirectedGraph, DirectedGraph, Edge, EdgeId, EdgeSet, GraphBuilder, OrientedEdge, Sign,
    SignedVertex, SignedVertexSet, VertexId,
};
pub use walk::{Path, Trail, Walk, WalkClass};

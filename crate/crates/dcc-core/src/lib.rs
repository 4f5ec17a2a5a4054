//! Dual clique cover (DCC) graph representations.
//!
//! A DCC represents an undirected graph as a pair `(C, L)`: a family of
//! cliques `C` covering every edge, and its incidence dual `L` mapping each
//! vertex to the clique labels containing it. This crate provides
//! constructors for compact covers, graph algorithms that run directly on the
//! pair in time proportional to its size, a gap+varbyte on-disk encoding, and
//! a benchmarking harness comparing against adjacency-list baselines.

pub mod algo;
pub mod bench;
pub mod construct;
pub mod cover;
pub mod degeneracy;
pub mod encoding;
pub mod error;
pub mod generate;
pub mod graph;
pub mod minimality;

pub use cover::{CliqueCover, CoverStats, DccRepresentation, IncidenceDual};
pub use degeneracy::{degeneracy_ordering, DegeneracyOrdering};
pub use error::{Error, Result};
pub use graph::{Graph, GraphStats};

//! Graph algorithms that run directly on a clique cover or a full DCC pair,
//! plus adjacency-list baselines with the same contracts. The vertex universe
//! of every cover-side algorithm is the union of the cliques; vertices absent
//! from every clique are left out of the results.

pub mod baseline;
mod bfs;
mod coloring;
mod components;
mod dfs;
mod kcore;
mod matching;
mod maxclique;
mod mis;

pub use bfs::{bfs, bfs_forest, eccentricity_sweep, BfsForest, BfsResult, Eccentricities};
pub use coloring::{ff_complement_coloring_dcc, first_fit_coloring};
pub use components::{
    connected_components, connected_components_encoded, ComponentLabels, UnionFind,
};
pub use dfs::dfs_forest;
pub use kcore::{densest_subgraph_2approx, k_core_decomposition, CorenessResult, DensestSubgraph};
pub use matching::{maximal_matching, maximal_matching_encoded, Matching};
pub use maxclique::maximal_clique;
pub use mis::maximal_independent_set;

/// Sentinel distance for unreachable (or uncovered) vertices. Never used in
/// arithmetic.
pub const INFINITY: u32 = u32::MAX;

//! Core decomposition over a DCC. Degrees come from clique scans deduplicated
//! by timestamp; the peel extracts from degree buckets, decrementing a
//! neighbor only while its counter exceeds the degree being peeled, which
//! keeps recorded values equal to the true core numbers.

use std::collections::BTreeSet;
use std::collections::HashSet;

use crate::cover::DccRepresentation;
use crate::error::{Error, Result};

/// Core number per vertex (0 for uncovered vertices), the maximum over them,
/// and the peel order; reversing the peel order yields a degeneracy ordering
/// of the covered subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorenessResult {
    pub core: Vec<u32>,
    pub degeneracy: u32,
    pub peel_order: Vec<u32>,
}

pub fn k_core_decomposition(dcc: &DccRepresentation) -> CorenessResult {
    let n = dcc.n();
    let universe = dcc.cover.universe();
    let mut deg = vec![0u32; n];
    let mut seen = vec![0u32; n];
    let mut t = 0u32;

    for &v in &universe {
        t += 1;
        for &l in dcc.dual.labels(v) {
            for &u in dcc.cover.clique(l as usize) {
                if u != v && seen[u as usize] != t {
                    seen[u as usize] = t;
                    deg[v as usize] += 1;
                }
            }
        }
    }

    let mut buckets: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n.max(1)];
    for &v in &universe {
        buckets[deg[v as usize] as usize].insert(v);
    }
    let mut core = vec![0u32; n];
    let mut active = vec![false; n];
    for &v in &universe {
        active[v as usize] = true;
    }
    let mut peel_order = Vec::with_capacity(universe.len());
    let mut cur = 0usize;
    let mut degeneracy = 0u32;
    for _ in 0..universe.len() {
        while buckets[cur].is_empty() {
            cur += 1;
        }
        let v = *buckets[cur].first().unwrap();
        buckets[cur].remove(&v);
        active[v as usize] = false;
        core[v as usize] = cur as u32;
        degeneracy = degeneracy.max(cur as u32);
        peel_order.push(v);
        t += 1;
        for &l in dcc.dual.labels(v) {
            for &u in dcc.cover.clique(l as usize) {
                let ui = u as usize;
                if u == v || !active[ui] || seen[ui] == t {
                    continue;
                }
                seen[ui] = t;
                if deg[ui] as usize > cur {
                    buckets[deg[ui] as usize].remove(&u);
                    deg[ui] -= 1;
                    buckets[deg[ui] as usize].insert(u);
                }
            }
        }
    }
    CorenessResult {
        core,
        degeneracy,
        peel_order,
    }
}

/// The densest-subgraph 2-approximation read off the decomposition: the
/// maximum-core vertices induce a subgraph of density at least half the
/// optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct DensestSubgraph {
    pub vertices: Vec<u32>,
    pub density: f64,
}

pub fn densest_subgraph_2approx(dcc: &DccRepresentation) -> Result<DensestSubgraph> {
    let universe = dcc.cover.universe();
    if universe.is_empty() {
        return Err(Error::EmptyCover);
    }
    let decomp = k_core_decomposition(dcc);
    let d = decomp.degeneracy;
    let vertices: Vec<u32> = universe
        .iter()
        .copied()
        .filter(|&v| decomp.core[v as usize] == d)
        .collect();
    let inside: Vec<bool> = {
        let mut b = vec![false; dcc.n()];
        for &v in &vertices {
            b[v as usize] = true;
        }
        b
    };
    // Distinct edges induced inside the core, deduplicated across cliques.
    let mut edges: HashSet<(u32, u32)> = HashSet::new();
    for clique in dcc.cover.cliques() {
        let members: Vec<u32> = clique
            .iter()
            .copied()
            .filter(|&v| inside[v as usize])
            .collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.insert((u, v));
            }
        }
    }
    Ok(DensestSubgraph {
        density: edges.len() as f64 / vertices.len() as f64,
        vertices,
    })
}

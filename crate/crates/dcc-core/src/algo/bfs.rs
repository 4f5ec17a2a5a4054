//! Breadth-first search over a DCC: each clique is scanned at most once per
//! source (a scanned flag per clique), so a full traversal costs time
//! proportional to the representation size rather than the edge count.

use std::collections::VecDeque;

use super::INFINITY;
use crate::cover::DccRepresentation;
use crate::error::{Error, Result};

/// Hop distances and shortest-path-tree parents. `dist` is [`INFINITY`] for
/// vertices unreachable from the source or absent from the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsResult {
    pub dist: Vec<u32>,
    pub parent: Vec<Option<u32>>,
}

pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    parent: Vec<Option<u32>>,
    discovered: Vec<bool>,
    scanned: Vec<bool>,
    queue: VecDeque<u32>,
}

impl BfsScratch {
    pub(crate) fn new(dcc: &DccRepresentation) -> BfsScratch {
        BfsScratch {
            dist: vec![INFINITY; dcc.n()],
            parent: vec![None; dcc.n()],
            discovered: vec![false; dcc.n()],
            scanned: vec![false; dcc.cover.num_cliques()],
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        self.dist.fill(INFINITY);
        self.parent.fill(None);
        self.discovered.fill(false);
        self.scanned.fill(false);
        self.queue.clear();
    }

    /// One source; assumes freshly reset state.
    fn run(&mut self, dcc: &DccRepresentation, s: u32) {
        self.dist[s as usize] = 0;
        self.discovered[s as usize] = true;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            for &l in dcc.dual.labels(v) {
                if self.scanned[l as usize] {
                    continue;
                }
                self.scanned[l as usize] = true;
                for &u in dcc.cover.clique(l as usize) {
                    if !self.discovered[u as usize] {
                        self.discovered[u as usize] = true;
                        self.dist[u as usize] = self.dist[v as usize] + 1;
                        self.parent[u as usize] = Some(v);
                        self.queue.push_back(u);
                    }
                }
            }
        }
    }
}

/// Single-source shortest paths from `s`, which must appear in some clique.
pub fn bfs(dcc: &DccRepresentation, s: u32) -> Result<BfsResult> {
    if s as usize >= dcc.n() {
        return Err(Error::VertexOutOfRange { v: s, n: dcc.n() });
    }
    if dcc.dual.labels(s).is_empty() {
        return Err(Error::NotInUniverse { v: s });
    }
    let mut scratch = BfsScratch::new(dcc);
    scratch.run(dcc, s);
    Ok(BfsResult {
        dist: scratch.dist,
        parent: scratch.parent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsForest {
    pub parent: Vec<Option<u32>>,
    pub roots: Vec<u32>,
}

/// Restarts the search from each undiscovered covered vertex in ascending
/// order. Scanned flags persist across restarts; every clique is still
/// scanned at most once overall.
pub fn bfs_forest(dcc: &DccRepresentation) -> BfsForest {
    let mut scratch = BfsScratch::new(dcc);
    let mut roots = Vec::new();
    for v in dcc.cover.universe() {
        if !scratch.discovered[v as usize] {
            roots.push(v);
            scratch.run(dcc, v);
        }
    }
    BfsForest {
        parent: scratch.parent,
        roots,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eccentricities {
    pub diameter: u32,
    pub radius: u32,
    pub center: Vec<u32>,
}

/// Sweeps one BFS per covered vertex, reusing a single scratch allocation.
/// Errors if the covered universe is not connected, naming two vertices with
/// no path between them.
pub fn eccentricity_sweep(dcc: &DccRepresentation) -> Result<Eccentricities> {
    let universe = dcc.cover.universe();
    if universe.is_empty() {
        return Err(Error::EmptyCover);
    }
    let mut scratch = BfsScratch::new(dcc);
    let mut diameter = 0;
    let mut radius = u32::MAX;
    let mut ecc = vec![0u32; dcc.n()];
    for (i, &s) in universe.iter().enumerate() {
        if i > 0 {
            scratch.reset();
        }
        scratch.run(dcc, s);
        let mut far = 0;
        for &v in &universe {
            let d = scratch.dist[v as usize];
            if d == INFINITY {
                return Err(Error::Disconnected { u: s, v });
            }
            far = far.max(d);
        }
        ecc[s as usize] = far;
        diameter = diameter.max(far);
        radius = radius.min(far);
    }
    let center = universe
        .into_iter()
        .filter(|&v| ecc[v as usize] == radius)
        .collect();
    Ok(Eccentricities {
        diameter,
        radius,
        center,
    })
}

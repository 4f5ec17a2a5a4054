//! Degeneracy orderings and coreness via min-degree peeling.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A degeneracy ordering together with the per-vertex core numbers computed by
/// the same peel. `order[0]` is the vertex removed last; every vertex has at
/// most `degeneracy` neighbors earlier in `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<u32>,
    pub position: Vec<u32>,
    pub coreness: Vec<u32>,
    pub degeneracy: u32,
}

/// Min-degree peel over the adjacency lists. Ties go to the smallest id, so
/// the ordering is reproducible. Buckets are keyed by current degree; a
/// neighbor's degree is only decremented while it exceeds the degree being
/// peeled, which keeps the recorded values equal to the core numbers.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n.max(1)];
    for v in 0..n {
        buckets[deg[v]].insert(v as u32);
    }

    let mut removal = Vec::with_capacity(n);
    let mut coreness = vec![0u32; n];
    let mut removed = vec![false; n];
    let mut cur = 0usize;
    let mut degeneracy = 0u32;
    for _ in 0..n {
        while buckets[cur].is_empty() {
            cur += 1;
        }
        let v = *buckets[cur].first().unwrap();
        buckets[cur].remove(&v);
        coreness[v as usize] = cur as u32;
        degeneracy = degeneracy.max(cur as u32);
        removed[v as usize] = true;
        removal.push(v);
        for &u in g.neighbors(v) {
            let u = u as usize;
            if !removed[u] && deg[u] > cur {
                buckets[deg[u]].remove(&(u as u32));
                deg[u] -= 1;
                buckets[deg[u]].insert(u as u32);
            }
        }
    }

    let order: Vec<u32> = removal.into_iter().rev().collect();
    let mut position = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        position[v as usize] = i as u32;
    }
    DegeneracyOrdering {
        order,
        position,
        coreness,
        degeneracy,
    }
}

/// `N^<(v)`: neighbors of `v` that come before it in the ordering, ascending
/// by id. Each set has at most `degeneracy` elements.
pub fn backward_neighborhoods(g: &Graph, ord: &DegeneracyOrdering) -> Result<Vec<Vec<u32>>> {
    if ord.order.len() != g.n() || ord.position.len() != g.n() {
        return Err(Error::Mismatch(format!(
            "ordering is over {} vertices, graph has {}",
            ord.order.len(),
            g.n()
        )));
    }
    let mut out = Vec::with_capacity(g.n());
    for v in g.vertices() {
        out.push(
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| ord.position[u as usize] < ord.position[v as usize])
                .collect(),
        );
    }
    Ok(out)
}

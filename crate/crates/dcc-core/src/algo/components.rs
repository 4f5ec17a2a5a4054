//! Connected components from the clique side only: one union-find pass where
//! each clique stars its members onto its first vertex. The incidence dual is
//! never touched, so this also runs streaming over an encoded cover.

use crate::cover::CliqueCover;
use crate::encoding::EncodedCover;
use crate::error::Result;

/// Union-find with union by rank and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Returns true if the two sets were distinct and got merged.
    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra as usize] >= self.rank[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo as usize] = hi;
        if self.rank[hi as usize] == self.rank[lo as usize] {
            self.rank[hi as usize] += 1;
        }
        self.parent[lo as usize] = hi;
        true
    }
}

/// Labels are `None` for vertices outside the cover universe; covered
/// components are numbered `0..count` in order of first appearance by id.
/// `forest` holds one recorded edge per successful union and spans each
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabels {
    pub label: Vec<Option<u32>>,
    pub count: usize,
    pub forest: Vec<(u32, u32)>,
}

fn components_impl(n: usize, source: impl FnMut(&mut dyn FnMut(&[u32])) -> Result<()>) -> Result<ComponentLabels> {
    let mut source = source;
    let mut uf = UnionFind::new(n);
    let mut present = vec![false; n];
    let mut forest = Vec::new();
    source(&mut |clique: &[u32]| {
        let Some(&head) = clique.first() else {
            return;
        };
        present[head as usize] = true;
        for &u in &clique[1..] {
            present[u as usize] = true;
            if uf.find(u) != uf.find(head) {
                uf.union(u, head);
                forest.push((head.min(u), head.max(u)));
            }
        }
    })?;

    let mut label = vec![None; n];
    let mut next = 0u32;
    let mut root_label = vec![u32::MAX; n];
    for v in 0..n as u32 {
        if !present[v as usize] {
            continue;
        }
        let root = uf.find(v) as usize;
        if root_label[root] == u32::MAX {
            root_label[root] = next;
            next += 1;
        }
        label[v as usize] = Some(root_label[root]);
    }
    Ok(ComponentLabels {
        label,
        count: next as usize,
        forest,
    })
}

pub fn connected_components(cover: &CliqueCover) -> ComponentLabels {
    components_impl(cover.n(), |f| {
        for clique in cover.cliques() {
            f(clique);
        }
        Ok(())
    })
    .expect("in-memory cover cannot fail")
}

/// Streaming variant: cliques are decoded one at a time into a reusable
/// buffer; the payload is never fully materialized.
pub fn connected_components_encoded(enc: &EncodedCover) -> Result<ComponentLabels> {
    let mut buf = Vec::new();
    components_impl(enc.n(), |f| {
        for i in 0..enc.num_cliques() {
            enc.decode_clique(i, &mut buf)?;
            f(&buf);
        }
        Ok(())
    })
}

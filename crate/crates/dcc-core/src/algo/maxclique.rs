//! Maximal clique over a DCC: seed with a largest cover clique, then grow
//! through the candidate set of common neighbors, testing adjacency via label
//! intersection.

use crate::cover::{adjacency_query, DccRepresentation};
use crate::error::{Error, Result};

/// Returns a clique no proper superset of which is a clique. Seeds from the
/// first largest clique in the cover; candidates and growth picks follow
/// ascending id order.
pub fn maximal_clique(dcc: &DccRepresentation) -> Result<Vec<u32>> {
    let cover = &dcc.cover;
    if cover.num_cliques() == 0 {
        return Err(Error::EmptyCover);
    }
    let seed_idx = (0..cover.num_cliques())
        .max_by_key(|&i| (cover.clique(i).len(), usize::MAX - i))
        .unwrap();
    let mut clique: Vec<u32> = cover.clique(seed_idx).to_vec();

    let anchor = clique[0];
    let mut in_clique = vec![false; dcc.n()];
    for &v in &clique {
        in_clique[v as usize] = true;
    }
    let mut candidates: Vec<u32> = {
        let mut c: Vec<u32> = dcc
            .dual
            .labels(anchor)
            .iter()
            .flat_map(|&l| cover.clique(l as usize).iter().copied())
            .filter(|&u| !in_clique[u as usize])
            .collect();
        c.sort_unstable();
        c.dedup();
        c
    };
    for &v in &clique {
        candidates.retain(|&u| adjacency_query(&dcc.dual, u, v).unwrap_or(false));
    }
    while let Some(&v) = candidates.first() {
        candidates.remove(0);
        clique.push(v);
        candidates.retain(|&u| adjacency_query(&dcc.dual, u, v).unwrap_or(false));
    }
    clique.sort_unstable();
    Ok(clique)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{CliqueCover, DccRepresentation};
    use crate::graph::Graph;

    fn dcc(n: usize, cliques: &[&[u32]]) -> DccRepresentation {
        DccRepresentation::from_cover(
            CliqueCover::from_cliques(n, cliques.iter().map(|c| c.to_vec()).collect()).unwrap(),
        )
    }

    #[test]
    fn near_complete_seeded_from_largest() {
        // K4 minus {2,3} covered by {0,1,2} and {0,1,3}: candidate 3 is
        // filtered by non-adjacency to 2.
        let d = dcc(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(maximal_clique(&d).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn complete_graph_full_set() {
        let g = Graph::complete(6);
        let d = crate::construct::succinct_peeling(&g);
        assert_eq!(maximal_clique(&d).unwrap(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn empty_cover_rejected() {
        assert!(matches!(maximal_clique(&dcc(3, &[])), Err(Error::EmptyCover)));
    }

    pub(crate) fn check_maximal_clique(g: &Graph, clique: &[u32]) {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                assert!(g.has_edge(u, v), "({u}, {v}) missing inside the clique");
            }
        }
        let inside: Vec<bool> = {
            let mut b = vec![false; g.n()];
            for &v in clique {
                b[v as usize] = true;
            }
            b
        };
        for v in g.vertices() {
            if !inside[v as usize] {
                let adjacent_to_all = clique.iter().all(|&u| g.has_edge(u, v));
                assert!(!adjacent_to_all, "vertex {v} extends the clique");
            }
        }
    }

    #[test]
    fn random_graphs_give_maximal_cliques() {
        for seed in [5u64, 23] {
            let g = crate::generate::gen_er(60, 0.3, seed).unwrap();
            if g.m() == 0 {
                continue;
            }
            let d = crate::construct::global_admissibility(&g);
            let clique = maximal_clique(&d).unwrap();
            check_maximal_clique(&g, &clique);
        }
    }
}

//! Peeling construction whose output is composition-minimal with size at most
//! `2m` and clique count at most `2σ`, where `σ` is one plus the number of
//! non-edges.

use std::collections::{BTreeSet, HashSet};

use super::{ascending_order, earlier_touched_classes, ff_complement_color_classes};
use crate::cover::{CliqueCover, DccRepresentation};
use crate::degeneracy::{backward_neighborhoods, degeneracy_ordering};
use crate::graph::Graph;

/// Color classes of the complement seed the cover; every clique is then grown
/// maximal with respect to *uncovered* edges whose endpoints see the whole
/// clique. A second phase covers the leftovers class-by-class. The
/// uncovered-edge rule is what keeps the total size linear in `m`.
pub fn succinct_peeling(g: &Graph) -> DccRepresentation {
    let n = g.n();
    let mut uncovered: Vec<HashSet<u32>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let classes = ff_complement_color_classes(g, &ascending_order(n));
    let ordering = degeneracy_ordering(g);
    let backward = backward_neighborhoods(g, &ordering).expect("ordering from same graph");

    // Phase 1: non-singleton classes enter the cover; their internal edges
    // are covered before any extension happens.
    let mut cliques: Vec<Vec<u32>> = Vec::new();
    for class in classes.classes.iter().filter(|f| f.len() >= 2) {
        mark_covered(&mut uncovered, class);
        cliques.push(class.clone());
    }
    for slot in cliques.iter_mut() {
        let base = std::mem::take(slot);
        let (pu, pv) = (base[0], base[1]);
        *slot = extend(g, &backward, &mut uncovered, base, pu, pv);
    }

    // Phase 2: one clique per (vertex, earlier class) pair that still has
    // uncovered edges into that class.
    let touched = earlier_touched_classes(g, &classes);
    for v in g.vertices() {
        for &l in &touched[v as usize] {
            let base: Vec<u32> = classes.classes[l as usize]
                .iter()
                .copied()
                .filter(|u| uncovered[v as usize].contains(u))
                .collect();
            if base.is_empty() {
                continue;
            }
            let mut clique = base;
            clique.push(v);
            clique.sort_unstable();
            mark_covered(&mut uncovered, &clique);
            let pu = *clique.iter().find(|&&x| x != v).unwrap();
            let extended = extend(g, &backward, &mut uncovered, clique, pu, v);
            cliques.push(extended);
        }
    }

    DccRepresentation::from_cover(CliqueCover::from_sorted_cliques(n, cliques))
}

fn mark_covered(uncovered: &mut [HashSet<u32>], clique: &[u32]) {
    for &x in clique {
        for &y in clique {
            if x != y {
                uncovered[x as usize].remove(&y);
            }
        }
    }
}

fn in_closed_neighborhood(g: &Graph, w: u32, v: u32) -> bool {
    w == v || g.has_edge(w, v)
}

/// Grows `clique` maximal with respect to uncovered edges `{x, y}` whose
/// endpoints are adjacent to the entire current clique. Candidates are the
/// common closed neighbors of the pivot edge; candidate edges are enumerated
/// once through the backward neighborhoods and re-checked against the
/// shrinking candidate set as the clique grows.
fn extend(
    g: &Graph,
    backward: &[Vec<u32>],
    uncovered: &mut [HashSet<u32>],
    clique: Vec<u32>,
    pivot_u: u32,
    pivot_v: u32,
) -> Vec<u32> {
    let mut candidates: HashSet<u32> = {
        let mut closed: Vec<u32> = g.neighbors(pivot_u).to_vec();
        closed.push(pivot_u);
        closed
            .into_iter()
            .filter(|&w| in_closed_neighborhood(g, w, pivot_v))
            .filter(|&w| clique.iter().all(|&c| in_closed_neighborhood(g, w, c)))
            .collect()
    };

    let mut sorted_candidates: Vec<u32> = candidates.iter().copied().collect();
    sorted_candidates.sort_unstable();
    let mut candidate_edges: Vec<(u32, u32)> = Vec::new();
    for &y in &sorted_candidates {
        for &x in &backward[y as usize] {
            if candidates.contains(&x) && uncovered[y as usize].contains(&x) {
                candidate_edges.push((x, y));
            }
        }
    }

    let mut members: BTreeSet<u32> = clique.into_iter().collect();
    for (x, y) in candidate_edges {
        if !uncovered[y as usize].contains(&x) {
            continue;
        }
        if !candidates.contains(&x) || !candidates.contains(&y) {
            continue;
        }
        members.insert(x);
        members.insert(y);
        for &z in &members {
            uncovered[z as usize].remove(&x);
            uncovered[z as usize].remove(&y);
            uncovered[x as usize].remove(&z);
            uncovered[y as usize].remove(&z);
        }
        candidates
            .retain(|&w| in_closed_neighborhood(g, w, x) && in_closed_neighborhood(g, w, y));
    }
    members.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;
    use crate::graph::clique_distance;
    use crate::minimality::is_composition_minimal;

    #[test]
    fn complete_graph_single_clique() {
        let dcc = succinct_peeling(&Graph::complete(5));
        assert_eq!(dcc.cover.cliques(), &[vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn near_complete_graph_two_cliques() {
        // K4 minus {2,3}: classes {0,1,2} and {3}; phase 2 grows {0,1,3}.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let dcc = succinct_peeling(&g);
        assert_eq!(dcc.cover.cliques(), &[vec![0, 1, 2], vec![0, 1, 3]]);
        assert!(validate_cover(&g, &dcc.cover).unwrap().is_valid());
        assert_eq!(is_composition_minimal(&g, &dcc.cover).unwrap(), None);
    }

    #[test]
    fn matched_cliques_canonical_cover() {
        let n = 64;
        let g = crate::generate::gen_matched_cliques(n);
        let dcc = succinct_peeling(&g);
        assert_eq!(dcc.cover.num_cliques(), n + 2);
        assert_eq!(dcc.cover.size(), 4 * n);
        assert!(validate_cover(&g, &dcc.cover).unwrap().is_valid());
        assert_eq!(is_composition_minimal(&g, &dcc.cover).unwrap(), None);
    }

    #[test]
    fn abu_family_gets_the_linear_cover() {
        // Extension absorbs all U-B edges into the class seeded by B, so the
        // output is the two-clique cover that peeling alone misses.
        let n = 5;
        let g = crate::generate::gen_abu_family(n);
        let dcc = succinct_peeling(&g);
        let a_u: Vec<u32> = (0..n as u32).chain(2 * n as u32..3 * n as u32).collect();
        let b_u: Vec<u32> = (n as u32..3 * n as u32).collect();
        assert_eq!(dcc.cover.cliques(), &[a_u, b_u]);
        assert_eq!(dcc.cover.size(), 4 * n);
        let lp = crate::construct::lovasz_peeling(&g).cover;
        assert!(lp.size() > dcc.cover.size());
    }

    #[test]
    fn clique_count_obeys_sigma_bound() {
        for seed in 0..6 {
            let g = crate::generate::gen_er(40, 0.8, seed).unwrap();
            let dcc = succinct_peeling(&g);
            let sigma = clique_distance(g.n(), g.m());
            assert!(
                (dcc.cover.num_cliques() as u64) <= 2 * sigma,
                "{} cliques vs sigma {sigma}",
                dcc.cover.num_cliques()
            );
            assert!(validate_cover(&g, &dcc.cover).unwrap().is_valid());
        }
    }

    #[test]
    fn random_graphs_composition_minimal_and_small() {
        for seed in [2, 9] {
            let g = crate::generate::gen_er(60, 0.4, seed).unwrap();
            let dcc = succinct_peeling(&g);
            assert!(validate_cover(&g, &dcc.cover).unwrap().is_valid());
            assert_eq!(is_composition_minimal(&g, &dcc.cover).unwrap(), None);
            assert!(dcc.cover.size() <= 2 * g.m());
            for v in g.vertices() {
                assert!(dcc.dual.labels(v).len() <= g.degree(v).max(1));
            }
        }
    }
}

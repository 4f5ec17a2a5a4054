//! Greedy colorings over a DCC. Both variants scan, per processed vertex, the
//! cliques containing it; timestamps make per-color state reusable across
//! vertices without clearing.

use crate::cover::DccRepresentation;

/// First-fit proper coloring of the represented graph under `order` (a
/// permutation of the covered vertices). Colors are 1-based; vertices outside
/// `order` stay 0. Identical to first-fit over adjacency lists under the same
/// order, because the cliques of `v` enumerate exactly its colored neighbors.
#[allow(clippy::explicit_counter_loop)] // t is a timestamp, not an index
pub fn first_fit_coloring(dcc: &DccRepresentation, order: &[u32]) -> Vec<u32> {
    let n = dcc.n();
    let mut color = vec![0u32; n];
    let mut forbidden = vec![0u32; n + 2]; // stamp per color
    let mut t = 1u32;
    let mut used = 0u32;
    for &v in order {
        for &l in dcc.dual.labels(v) {
            for &u in dcc.cover.clique(l as usize) {
                let cu = color[u as usize];
                if cu > 0 {
                    forbidden[cu as usize] = t;
                }
            }
        }
        let mut p = 1u32;
        while p <= used && forbidden[p as usize] == t {
            p += 1;
        }
        if p > used {
            used += 1;
        }
        color[v as usize] = p;
        t += 1;
    }
    color
}

/// First-fit coloring of the *complement* of the represented graph under
/// `order`, without building the complement. A color is feasible for `v` iff
/// `v` is adjacent to every already-colored vertex of that color; the scan
/// counts down a lazily reset per-color counter over the distinct colored
/// vertices sharing a clique with `v`.
pub fn ff_complement_coloring_dcc(dcc: &DccRepresentation, order: &[u32]) -> Vec<u32> {
    let n = dcc.n();
    let mut color = vec![0u32; n];
    let mut seen = vec![0u32; n];
    let mut class_size = vec![0u32; n + 2]; // tsize
    let mut remaining = vec![0u32; n + 2]; // rsize
    let mut stamp = vec![0u32; n + 2]; // flag
    let mut used = 0u32;
    let mut t = 1u32;
    for &v in order {
        let mut pick = used + 1;
        for &l in dcc.dual.labels(v) {
            for &u in dcc.cover.clique(l as usize) {
                let cu = color[u as usize];
                if cu == 0 || seen[u as usize] == t {
                    continue;
                }
                seen[u as usize] = t;
                if stamp[cu as usize] < t {
                    remaining[cu as usize] = class_size[cu as usize];
                    stamp[cu as usize] = t;
                }
                remaining[cu as usize] -= 1;
                if remaining[cu as usize] == 0 {
                    pick = pick.min(cu);
                }
            }
        }
        if pick == used + 1 {
            used += 1;
        }
        color[v as usize] = pick;
        class_size[pick as usize] += 1;
        t += 1;
    }
    color
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::baseline::baseline_first_fit;
    use crate::cover::{CliqueCover, DccRepresentation};

    fn dcc(n: usize, cliques: &[&[u32]]) -> DccRepresentation {
        DccRepresentation::from_cover(
            CliqueCover::from_cliques(n, cliques.iter().map(|c| c.to_vec()).collect()).unwrap(),
        )
    }

    #[test]
    fn triangle_three_colors() {
        let d = dcc(3, &[&[0, 1, 2]]);
        assert_eq!(first_fit_coloring(&d, &[0, 1, 2]), vec![1, 2, 3]);
    }

    #[test]
    fn path_two_colors() {
        let d = dcc(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(first_fit_coloring(&d, &[0, 1, 2]), vec![1, 2, 1]);
    }

    #[test]
    fn equals_adjacency_first_fit_with_shared_order() {
        let g = crate::generate::gen_er(90, 0.2, 31).unwrap();
        let d = crate::construct::succinct_peeling(&g);
        let order = d.cover.universe();
        let got = first_fit_coloring(&d, &order);
        let want = baseline_first_fit(&g, &order);
        for &v in &order {
            assert_eq!(got[v as usize], want[v as usize], "vertex {v}");
        }
        // Random-ish alternative order.
        let mut rev: Vec<u32> = order.iter().rev().copied().collect();
        let third = rev.len() / 3;
        rev.rotate_left(third);
        let got = first_fit_coloring(&d, &rev);
        let want = baseline_first_fit(&g, &rev);
        for &v in &rev {
            assert_eq!(got[v as usize], want[v as usize]);
        }
    }

    #[test]
    fn complement_coloring_on_complete_graph() {
        let d = dcc(4, &[&[0, 1, 2, 3]]);
        assert_eq!(ff_complement_coloring_dcc(&d, &[0, 1, 2, 3]), vec![1; 4]);
    }

    #[test]
    fn complement_coloring_near_complete() {
        // K4 minus {2,3}: complement is one edge, colored 1,1,1,2.
        let g = crate::graph::Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let d = crate::construct::succinct_peeling(&g);
        assert_eq!(ff_complement_coloring_dcc(&d, &[0, 1, 2, 3]), vec![1, 1, 1, 2]);
    }

    #[test]
    fn complement_coloring_matches_explicit_complement() {
        for seed in [3u64, 12] {
            let g = crate::generate::gen_er(80, 0.5, seed).unwrap();
            let d = crate::construct::global_admissibility(&g);
            let universe = d.cover.universe();
            if universe.len() != g.n() {
                continue;
            }
            let got = ff_complement_coloring_dcc(&d, &universe);
            let want = baseline_first_fit(&g.complement(), &universe);
            assert_eq!(got, want);
        }
    }
}

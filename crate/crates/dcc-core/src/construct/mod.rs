//! DCC construction algorithms. Five constructors share this module:
//!
//! | name                   | composition-minimal output |
//! |------------------------|----------------------------|
//! | `lovasz_peeling`       | no                         |
//! | `succinct_peeling`     | yes, with `|C| = O(σ)`     |
//! | `global_admissibility` | yes                        |
//! | `local_admissibility`  | yes                        |
//! | `local_peeling`        | no                         |
//!
//! All are deterministic: vertex order defaults to ascending id, edge order to
//! lexicographic, and label choices take the smallest candidate.

mod global;
mod local;
mod lovasz;
mod succinct;

pub use global::{global_admissibility, global_admissibility_checked};
pub use local::{local_admissibility, local_peeling};
pub use lovasz::lovasz_peeling;
pub use succinct::succinct_peeling;

use crate::graph::Graph;

/// Color classes of a greedy coloring, in creation order. `color[v]` indexes
/// into `classes`; every class is a clique of the graph whose complement was
/// colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClasses {
    pub classes: Vec<Vec<u32>>,
    pub color: Vec<u32>,
}

/// First-fit coloring of the complement of `g` under `order`, computed without
/// materializing the complement. A color is feasible for `v` exactly when
/// every already-colored vertex of that color is a neighbor of `v`, which is
/// detected by decrementing a lazily reset per-color counter over `N(v)`.
///
/// `order` must be a permutation of all vertices.
pub fn ff_complement_color_classes(g: &Graph, order: &[u32]) -> ColorClasses {
    let n = g.n();
    assert_eq!(order.len(), n, "order must be a permutation");
    {
        let mut seen = vec![false; n];
        for &v in order {
            assert!(!seen[v as usize], "order must be a permutation");
            seen[v as usize] = true;
        }
    }

    let mut color = vec![0u32; n]; // 1-based while coloring, 0 = uncolored
    let mut class_size = vec![0u32; n + 1]; // tsize
    let mut remaining = vec![0u32; n + 1]; // rsize
    let mut stamp = vec![0u32; n + 1]; // flag
    let mut used = 0u32; // q
    let mut t = 1u32;
    for &v in order {
        let mut pick = used + 1;
        for &u in g.neighbors(v) {
            let cu = color[u as usize];
            if cu == 0 {
                continue;
            }
            if stamp[cu as usize] < t {
                remaining[cu as usize] = class_size[cu as usize];
                stamp[cu as usize] = t;
            }
            remaining[cu as usize] -= 1;
            if remaining[cu as usize] == 0 {
                pick = pick.min(cu);
            }
        }
        if pick == used + 1 {
            used += 1;
        }
        color[v as usize] = pick;
        class_size[pick as usize] += 1;
        t += 1;
    }

    let mut classes = vec![Vec::new(); used as usize];
    for v in 0..n as u32 {
        classes[color[v as usize] as usize - 1].push(v);
    }
    let color = color.iter().map(|&c| c - 1).collect();
    ColorClasses { classes, color }
}

/// `T_v` for every vertex: the classes earlier than the vertex's own that
/// intersect its neighborhood, ascending.
pub(crate) fn earlier_touched_classes(g: &Graph, classes: &ColorClasses) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut out = vec![Vec::new(); n];
    let mut mark = vec![u32::MAX; classes.classes.len()];
    for v in 0..n as u32 {
        let own = classes.color[v as usize];
        for &u in g.neighbors(v) {
            let cu = classes.color[u as usize];
            if cu < own && mark[cu as usize] != v {
                mark[cu as usize] = v;
                out[v as usize].push(cu);
            }
        }
        out[v as usize].sort_unstable();
    }
    out
}

pub(crate) fn ascending_order(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::baseline;

    /// Oracle: color the explicitly built complement with the plain first-fit
    /// rule.
    fn oracle_classes(g: &Graph, order: &[u32]) -> ColorClasses {
        let comp = g.complement();
        let colors = baseline::baseline_first_fit(&comp, order);
        let used = colors.iter().copied().max().unwrap_or(0) as usize;
        let mut classes = vec![Vec::new(); used];
        for v in 0..g.n() as u32 {
            classes[colors[v as usize] as usize - 1].push(v);
        }
        ColorClasses {
            classes,
            color: colors.iter().map(|&c| c - 1).collect(),
        }
    }

    #[test]
    fn near_complete_graph_two_classes() {
        // K4 minus the edge {2,3}.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let cc = ff_complement_color_classes(&g, &ascending_order(4));
        assert_eq!(cc.classes, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(cc, oracle_classes(&g, &ascending_order(4)));
    }

    #[test]
    fn complete_graph_single_class() {
        let g = Graph::complete(6);
        let cc = ff_complement_color_classes(&g, &ascending_order(6));
        assert_eq!(cc.classes.len(), 1);
        assert_eq!(cc.classes[0].len(), 6);
    }

    #[test]
    fn edgeless_graph_singleton_classes() {
        let g = Graph::empty(5);
        let cc = ff_complement_color_classes(&g, &ascending_order(5));
        assert_eq!(cc.classes.len(), 5);
        assert!(cc.classes.iter().all(|c| c.len() == 1));
        assert_eq!(cc, oracle_classes(&g, &ascending_order(5)));
    }

    #[test]
    fn matches_explicit_complement_on_random_graphs() {
        for seed in 0..8 {
            let g = crate::generate::gen_er(100 + seed as usize, 0.3, seed).unwrap();
            let order = ascending_order(g.n());
            assert_eq!(
                ff_complement_color_classes(&g, &order),
                oracle_classes(&g, &order),
                "seed {seed}"
            );
            // A reversed order exercises non-trivial permutations.
            let rev: Vec<u32> = order.iter().rev().copied().collect();
            assert_eq!(
                ff_complement_color_classes(&g, &rev),
                oracle_classes(&g, &rev),
                "reversed, seed {seed}"
            );
        }
    }

    #[test]
    fn abu_family_first_class_joins_a_and_u() {
        let n = 2;
        let g = crate::generate::gen_abu_family(n);
        let cc = ff_complement_color_classes(&g, &ascending_order(g.n()));
        // A = {0,1}, U = {4,5} share the first class; B = {2,3} is second.
        assert_eq!(cc.classes[0], vec![0, 1, 4, 5]);
        assert_eq!(cc.classes[1], vec![2, 3]);
    }
}

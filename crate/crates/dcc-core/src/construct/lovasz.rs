//! Peeling-style construction with no succinctness guarantee: color classes of
//! the complement become base cliques, and every vertex additionally spawns
//! one clique per earlier class touching its neighborhood.

use super::{ascending_order, earlier_touched_classes, ff_complement_color_classes};
use crate::cover::{CliqueCover, DccRepresentation};
use crate::graph::Graph;

/// For each vertex `v` in class `k` and each class `l < k` intersecting
/// `N(v)`, emits `(F_l ∩ N(v)) ∪ {v}`, plus every class of size at least two.
/// Linear time, but the output can be Θ(n²) on graphs whose composition-
/// minimal covers are Θ(n).
pub fn lovasz_peeling(g: &Graph) -> DccRepresentation {
    let order = ascending_order(g.n());
    let classes = ff_complement_color_classes(g, &order);
    let touched = earlier_touched_classes(g, &classes);

    let mut cliques: Vec<Vec<u32>> = classes
        .classes
        .iter()
        .filter(|f| f.len() >= 2)
        .cloned()
        .collect();
    let mut in_class = vec![u32::MAX; g.n()];
    for (l, class) in classes.classes.iter().enumerate() {
        for &v in class {
            in_class[v as usize] = l as u32;
        }
    }
    for v in g.vertices() {
        for &l in &touched[v as usize] {
            let mut clique: Vec<u32> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| in_class[u as usize] == l)
                .collect();
            clique.push(v);
            clique.sort_unstable();
            cliques.push(clique);
        }
    }
    DccRepresentation::from_cover(CliqueCover::from_sorted_cliques(g.n(), cliques))
}

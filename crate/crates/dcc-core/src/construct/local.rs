//! Space-lean construction: vertices are processed in reverse degeneracy
//! order, each iteration covers the still-uncovered edges at the current
//! vertex with a local complement coloring, and (optionally) extends those
//! fresh cliques using admissibility data rebuilt only on a small local
//! vertex set, then discarded.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::cover::{CliqueCover, DccRepresentation};
use crate::degeneracy::{backward_neighborhoods, degeneracy_ordering};
use crate::graph::Graph;

/// Local coloring plus the augmentation step; output is composition-minimal
/// with size at most `2m`, using working space linear in `m`.
pub fn local_admissibility(g: &Graph) -> DccRepresentation {
    run(g, true)
}

/// The same loop without augmentation. Valid cover, roughly a factor `d`
/// faster, but pairs of cliques from different iterations may be mergeable.
pub fn local_peeling(g: &Graph) -> DccRepresentation {
    run(g, false)
}

fn run(g: &Graph, augment: bool) -> DccRepresentation {
    let n = g.n();
    let mut uncovered: Vec<HashSet<u32>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let ordering = degeneracy_ordering(g);
    let backward = backward_neighborhoods(g, &ordering).expect("ordering from same graph");

    let mut cliques: Vec<Vec<u32>> = Vec::new();
    for i in (1..n).rev() {
        let v = ordering.order[i];
        if uncovered[v as usize].is_empty() {
            continue;
        }
        // The local vertex set must be captured before the new cliques start
        // clearing uncovered sets.
        let local = if augment {
            Some(local_vertex_set(g, &backward, &uncovered, v))
        } else {
            None
        };

        let mut pending: Vec<u32> = uncovered[v as usize].iter().copied().collect();
        pending.sort_unstable();
        let mut fresh: Vec<BTreeSet<u32>> = Vec::new();
        for class in color_complement_induced(g, &pending) {
            let mut clique: BTreeSet<u32> = class.into_iter().collect();
            clique.insert(v);
            for &x in &clique {
                for &y in &clique {
                    if x != y {
                        uncovered[x as usize].remove(&y);
                    }
                }
            }
            fresh.push(clique);
        }
        if let Some(local) = local {
            augment_local(g, &mut uncovered, &local, &mut fresh);
        }
        cliques.extend(fresh.into_iter().map(|c| c.into_iter().collect::<Vec<u32>>()));
    }

    DccRepresentation::from_cover(CliqueCover::from_sorted_cliques(n, cliques))
}

/// `S_i`: the vertex itself plus every backward neighbor that still has an
/// uncovered edge into the backward neighborhood (or to the vertex).
fn local_vertex_set(
    g: &Graph,
    backward: &[Vec<u32>],
    uncovered: &[HashSet<u32>],
    v: u32,
) -> Vec<u32> {
    let _ = g;
    let mut scope: HashSet<u32> = backward[v as usize].iter().copied().collect();
    scope.insert(v);
    let mut out: Vec<u32> = vec![v];
    for &u in &backward[v as usize] {
        let mu = &uncovered[u as usize];
        let hit = if mu.len() <= scope.len() {
            mu.iter().any(|x| scope.contains(x))
        } else {
            scope.iter().any(|x| mu.contains(x))
        };
        if hit {
            out.push(u);
        }
    }
    out.sort_unstable();
    out
}

/// First-fit coloring of the complement of the induced subgraph on `verts`
/// (ascending order): each vertex joins the first class it is fully adjacent
/// to in `g`, so every class is a clique.
fn color_complement_induced(g: &Graph, verts: &[u32]) -> Vec<Vec<u32>> {
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for &v in verts {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&u| g.has_edge(u, v)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

/// Builds admissibility sets restricted to the fresh cliques and the local
/// vertex set, then reuses labels to cover remaining local uncovered edges.
fn augment_local(
    g: &Graph,
    uncovered: &mut [HashSet<u32>],
    local: &[u32],
    fresh: &mut [BTreeSet<u32>],
) {
    let mut vertices_for: Vec<HashSet<u32>> = Vec::with_capacity(fresh.len());
    let mut labels_for: HashMap<u32, BTreeSet<u32>> =
        local.iter().map(|&u| (u, BTreeSet::new())).collect();
    for (l, clique) in fresh.iter().enumerate() {
        let mut dl: HashSet<u32> = clique.iter().copied().collect();
        for &u in local {
            if !clique.contains(&u) && clique.iter().all(|&w| g.has_edge(u, w)) {
                dl.insert(u);
            }
        }
        for &u in &dl {
            labels_for.get_mut(&u).unwrap().insert(l as u32);
        }
        vertices_for.push(dl);
    }

    for (a, &u) in local.iter().enumerate() {
        for &w in &local[a + 1..] {
            if !g.has_edge(u, w) || !uncovered[u as usize].contains(&w) {
                continue;
            }
            let l = match labels_for[&u].intersection(&labels_for[&w]).next() {
                Some(&l) => l as usize,
                None => continue, // the edge stays for a later iteration
            };
            fresh[l].insert(u);
            fresh[l].insert(w);
            let evicted: Vec<u32> = vertices_for[l]
                .iter()
                .copied()
                .filter(|&t| {
                    !fresh[l].contains(&t) && (!g.has_edge(u, t) || !g.has_edge(w, t))
                })
                .collect();
            for t in evicted {
                vertices_for[l].remove(&t);
                labels_for.get_mut(&t).unwrap().remove(&(l as u32));
            }
            for x in [u, w] {
                for &z in &fresh[l] {
                    uncovered[x as usize].remove(&z);
                    uncovered[z as usize].remove(&x);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;
    use crate::minimality::is_composition_minimal;

    #[test]
    fn triangle_single_clique_both_variants() {
        let g = Graph::complete(3);
        assert_eq!(local_admissibility(&g).cover.cliques(), &[vec![0, 1, 2]]);
        assert_eq!(local_peeling(&g).cover.cliques(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn path_two_cliques() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let mut got = local_peeling(&g).cover.cliques().to_vec();
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn matched_cliques_properties() {
        let g = crate::generate::gen_matched_cliques(8);
        let dcc = local_admissibility(&g);
        assert!(validate_cover(&g, &dcc.cover).unwrap().is_valid());
        assert_eq!(is_composition_minimal(&g, &dcc.cover).unwrap(), None);
        assert!(dcc.cover.size() <= 2 * g.m());
    }

    #[test]
    fn cycle_from_clique_minus_matching() {
        let g = crate::generate::gen_clique_minus_matching(2).unwrap();
        let dcc = local_admissibility(&g);
        assert!(validate_cover(&g, &dcc.cover).unwrap().is_valid());
        assert_eq!(is_composition_minimal(&g, &dcc.cover).unwrap(), None);
    }

    #[test]
    fn random_graphs_valid_both_variants() {
        for seed in [4, 13] {
            let g = crate::generate::gen_er(60, 0.4, seed).unwrap();
            let la = local_admissibility(&g);
            assert!(validate_cover(&g, &la.cover).unwrap().is_valid());
            assert_eq!(is_composition_minimal(&g, &la.cover).unwrap(), None);
            assert!(la.cover.size() <= 2 * g.m());
            let pl = local_peeling(&g);
            assert!(validate_cover(&g, &pl.cover).unwrap().is_valid());
        }
    }
}

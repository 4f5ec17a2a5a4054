//! Depth-first search over a DCC. Each clique keeps a single global cursor
//! that only moves forward, so all scans together cost the cover size; the
//! label lists contribute the dual size.

use crate::cover::DccRepresentation;

/// Per-vertex DFS-forest parent. Implemented with an explicit stack so long
/// paths cannot overflow the call stack; frames are `(vertex, label index)`
/// and a resumed frame continues the interrupted clique scan through the
/// shared cursor, which matches the recursive formulation exactly because
/// cursors never move backward.
pub fn dfs_forest(dcc: &DccRepresentation) -> Vec<Option<u32>> {
    let n = dcc.n();
    let mut parent: Vec<Option<u32>> = vec![None; n];
    let mut discovered = vec![false; n];
    let mut cursor: Vec<usize> = vec![0; dcc.cover.num_cliques()];
    let mut stack: Vec<(u32, usize)> = Vec::new();

    for root in dcc.cover.universe() {
        if discovered[root as usize] {
            continue;
        }
        discovered[root as usize] = true;
        stack.push((root, 0));
        while let Some((v, label_idx)) = stack.pop() {
            let labels = dcc.dual.labels(v);
            let mut resumed = false;
            for (i, &l) in labels.iter().enumerate().skip(label_idx) {
                let clique = dcc.cover.clique(l as usize);
                while cursor[l as usize] < clique.len() {
                    let u = clique[cursor[l as usize]];
                    cursor[l as usize] += 1;
                    if !discovered[u as usize] {
                        discovered[u as usize] = true;
                        parent[u as usize] = Some(v);
                        stack.push((v, i));
                        stack.push((u, 0));
                        resumed = true;
                        break;
                    }
                }
                if resumed {
                    break;
                }
            }
        }
    }
    parent
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
    fn triangle_gives_depth_first_chain() {
        // Cursor semantics: visiting 0 discovers 1 and recurses; 1 resumes the
        // same clique scan and discovers 2.
        let d = dcc(3, &[&[0, 1, 2]]);
        let parent = dfs_forest(&d);
        assert_eq!(parent, vec![None, Some(0), Some(1)]);
    }

    #[test]
    fn single_edge() {
        let d = dcc(2, &[&[0, 1]]);
        assert_eq!(dfs_forest(&d), vec![None, Some(0)]);
    }

    #[test]
    fn forest_spans_components_with_graph_edges() {
        let g = crate::generate::gen_er(80, 0.06, 21).unwrap();
        let d = crate::construct::local_admissibility(&g);
        let parent = dfs_forest(&d);
        check_forest(&g, &d, &parent);
    }

    /// Forest validity: parents are edges, no cycles, and the trees are
    /// exactly the connected components of the covered universe.
    fn check_forest(g: &Graph, d: &DccRepresentation, parent: &[Option<u32>]) {
        let universe = d.cover.universe();
        let mut root_of = vec![u32::MAX; g.n()];
        for &v in &universe {
            let mut x = v;
            let mut hops = 0;
            while let Some(p) = parent[x as usize] {
                assert!(g.has_edge(p, x), "parent edge ({p}, {x}) not in graph");
                x = p;
                hops += 1;
                assert!(hops <= g.n(), "cycle in parent pointers");
            }
            root_of[v as usize] = x;
        }
        let (labels, _) = crate::algo::baseline::baseline_components(g);
        for &u in &universe {
            for &v in &universe {
                assert_eq!(
                    root_of[u as usize] == root_of[v as usize],
                    labels[u as usize] == labels[v as usize],
                    "tree structure disagrees with components for ({u}, {v})"
                );
            }
        }
    }

    #[test]
    fn two_components_two_roots() {
        let d = dcc(5, &[&[0, 1], &[3, 4]]);
        let parent = dfs_forest(&d);
        assert_eq!(parent[0], None);
        assert_eq!(parent[3], None);
        assert_eq!(parent[1], Some(0));
        assert_eq!(parent[4], Some(3));
        assert_eq!(parent[2], None); // not covered
    }
}

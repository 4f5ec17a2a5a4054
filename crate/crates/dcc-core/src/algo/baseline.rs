//! Textbook adjacency-list implementations. They serve two roles: oracles for
//! the cover-side algorithms in tests, and the comparison arm of the
//! benchmark harness.

use std::collections::VecDeque;

use super::{BfsResult, CorenessResult, INFINITY};
use crate::degeneracy::degeneracy_ordering;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn baseline_bfs(g: &Graph, s: u32) -> Result<BfsResult> {
    if s as usize >= g.n() {
        return Err(Error::VertexOutOfRange { v: s, n: g.n() });
    }
    let mut dist = vec![INFINITY; g.n()];
    let mut parent = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[s as usize] = 0;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u as usize] == INFINITY {
                dist[u as usize] = dist[v as usize] + 1;
                parent[u as usize] = Some(v);
                queue.push_back(u);
            }
        }
    }
    Ok(BfsResult { dist, parent })
}

/// One BFS per unvisited vertex in ascending order; returns per-vertex parent
/// and the roots.
pub fn baseline_bfs_forest(g: &Graph) -> (Vec<Option<u32>>, Vec<u32>) {
    let mut parent = vec![None; g.n()];
    let mut visited = vec![false; g.n()];
    let mut roots = Vec::new();
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if visited[s as usize] {
            continue;
        }
        roots.push(s);
        visited[s as usize] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if !visited[u as usize] {
                    visited[u as usize] = true;
                    parent[u as usize] = Some(v);
                    queue.push_back(u);
                }
            }
        }
    }
    (parent, roots)
}

pub fn baseline_dfs_forest(g: &Graph) -> Vec<Option<u32>> {
    let mut parent = vec![None; g.n()];
    let mut visited = vec![false; g.n()];
    // Stack holds (vertex, next neighbor index).
    let mut stack: Vec<(u32, usize)> = Vec::new();
    for s in g.vertices() {
        if visited[s as usize] {
            continue;
        }
        visited[s as usize] = true;
        stack.push((s, 0));
        while let Some((v, idx)) = stack.pop() {
            if let Some(&u) = g.neighbors(v).get(idx) {
                stack.push((v, idx + 1));
                if !visited[u as usize] {
                    visited[u as usize] = true;
                    parent[u as usize] = Some(v);
                    stack.push((u, 0));
                }
            }
        }
    }
    parent
}

/// Component labels numbered 0.. in order of first appearance by vertex id.
pub fn baseline_components(g: &Graph) -> (Vec<u32>, usize) {
    let mut label = vec![u32::MAX; g.n()];
    let mut count = 0u32;
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if label[s as usize] != u32::MAX {
            continue;
        }
        label[s as usize] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if label[u as usize] == u32::MAX {
                    label[u as usize] = count;
                    queue.push_back(u);
                }
            }
        }
        count += 1;
    }
    (label, count as usize)
}

/// Greedy matching over lexicographic edges.
pub fn baseline_matching(g: &Graph) -> Vec<(u32, u32)> {
    let mut matched = vec![false; g.n()];
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u as usize] && !matched[v as usize] {
            matched[u as usize] = true;
            matched[v as usize] = true;
            out.push((u, v));
        }
    }
    out
}

/// Greedy independent set over ascending vertex ids.
pub fn baseline_mis(g: &Graph) -> Vec<u32> {
    let mut blocked = vec![false; g.n()];
    let mut out = Vec::new();
    for v in g.vertices() {
        if blocked[v as usize] {
            continue;
        }
        out.push(v);
        for &u in g.neighbors(v) {
            blocked[u as usize] = true;
        }
    }
    out
}

/// First-fit coloring under `order`; colors are 1-based, unvisited vertices
/// keep 0 (the order may cover a subset of vertices).
#[allow(clippy::explicit_counter_loop)] // t is a timestamp, not an index
pub fn baseline_first_fit(g: &Graph, order: &[u32]) -> Vec<u32> {
    let mut color = vec![0u32; g.n()];
    let mut stamp = vec![0u32; g.n() + 2];
    let mut t = 1u32;
    for &v in order {
        for &u in g.neighbors(v) {
            let cu = color[u as usize];
            if cu > 0 {
                stamp[cu as usize] = t;
            }
        }
        let mut p = 1u32;
        while stamp[p as usize] == t {
            p += 1;
        }
        color[v as usize] = p;
        t += 1;
    }
    color
}

/// Adjacency-list peeling; shares the bucket machinery with the degeneracy
/// ordering (the cover-side decomposition has its own, independent peel).
pub fn baseline_kcore(g: &Graph) -> CorenessResult {
    let ord = degeneracy_ordering(g);
    let peel_order: Vec<u32> = ord.order.iter().rev().copied().collect();
    CorenessResult {
        core: ord.coreness,
        degeneracy: ord.degeneracy,
        peel_order,
    }
}

/// All-pairs BFS sweep. Errors on the empty graph and on disconnected input,
/// naming two unconnected vertices.
pub fn baseline_eccentricities(g: &Graph) -> Result<(u32, u32, Vec<u32>)> {
    if g.n() == 0 {
        return Err(Error::InvalidParam("empty graph has no center".into()));
    }
    let mut diameter = 0;
    let mut radius = u32::MAX;
    let mut ecc = vec![0u32; g.n()];
    for s in g.vertices() {
        let res = baseline_bfs(g, s)?;
        let mut far = 0;
        for v in g.vertices() {
            let d = res.dist[v as usize];
            if d == INFINITY {
                return Err(Error::Disconnected { u: s, v });
            }
            far = far.max(d);
        }
        ecc[s as usize] = far;
        diameter = diameter.max(far);
        radius = radius.min(far);
    }
    let center = g.vertices().filter(|&v| ecc[v as usize] == radius).collect();
    Ok((diameter, radius, center))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfs_distances_on_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let r = baseline_bfs(&g, 0).unwrap();
        assert_eq!(r.dist, vec![0, 1, 2, 3]);
        assert_eq!(r.parent[3], Some(2));
    }

    #[test]
    fn components_of_two_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]);
        let (label, count) = baseline_components(&g);
        assert_eq!(count, 2);
        assert_eq!(label, vec![0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn first_fit_path_colors() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(baseline_first_fit(&g, &[0, 1, 2]), vec![1, 2, 1]);
    }

    #[test]
    fn eccentricities_of_path() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let (diam, rad, center) = baseline_eccentricities(&g).unwrap();
        assert_eq!((diam, rad), (2, 1));
        assert_eq!(center, vec![1]);
    }

    #[test]
    fn eccentricities_reject_disconnected() {
        let g = Graph::from_edges(3, [(0, 1)]);
        assert!(matches!(
            baseline_eccentricities(&g),
            Err(Error::Disconnected { .. })
        ));
    }
}

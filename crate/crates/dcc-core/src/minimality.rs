//! Minimality predicates over clique covers and the greedy assignment-minimal
//! post-processing pass. The predicates are verification oracles, not hot
//! paths; each first validates the cover against the graph.

use std::collections::HashMap;

use crate::cover::{validate_cover, CliqueCover};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Witness that a minimality property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityViolation {
    /// `cliques[inner] ⊆ cliques[outer]`.
    CliqueContained { inner: usize, outer: usize },
    /// Every edge of this clique is also covered elsewhere.
    NoPrivateEdge { clique: usize },
    /// The union of the two cliques induces a clique (no crossing non-edge).
    ComposablePair { first: usize, second: usize },
    /// The vertex can be dropped from the clique with no edge left uncovered.
    RemovableVertex { clique: usize, vertex: u32 },
}

fn require_valid(g: &Graph, cover: &CliqueCover) -> Result<()> {
    let report = validate_cover(g, cover)?;
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidCover(report.summary()))
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// No clique is contained in another. `Ok(None)` means the property holds.
pub fn is_inclusion_minimal(
    g: &Graph,
    cover: &CliqueCover,
) -> Result<Option<MinimalityViolation>> {
    require_valid(g, cover)?;
    let cliques = cover.cliques();
    for (i, a) in cliques.iter().enumerate() {
        for (j, b) in cliques.iter().enumerate() {
            if i != j && a.len() <= b.len() && is_subset(a, b) {
                return Ok(Some(MinimalityViolation::CliqueContained {
                    inner: i,
                    outer: j,
                }));
            }
        }
    }
    Ok(None)
}

/// How many cliques cover each edge, keyed by the ordered pair.
fn coverage_counts(cover: &CliqueCover) -> HashMap<(u32, u32), u32> {
    let mut counts = HashMap::new();
    for clique in cover.cliques() {
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                *counts.entry((u, v)).or_insert(0) += 1;
            }
        }
    }
    counts
}

/// Every clique covers at least one edge no other clique covers.
pub fn is_support_minimal(g: &Graph, cover: &CliqueCover) -> Result<Option<MinimalityViolation>> {
    require_valid(g, cover)?;
    let counts = coverage_counts(cover);
    for (i, clique) in cover.cliques().iter().enumerate() {
        let mut private = false;
        'scan: for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                if counts[&(u, v)] == 1 {
                    private = true;
                    break 'scan;
                }
            }
        }
        if !private {
            return Ok(Some(MinimalityViolation::NoPrivateEdge { clique: i }));
        }
    }
    Ok(None)
}

/// Every pair of distinct cliques is separated by a crossing non-edge, so no
/// subset of two or more cliques can be merged into one. Quadratic in the
/// number of cliques.
pub fn is_composition_minimal(
    g: &Graph,
    cover: &CliqueCover,
) -> Result<Option<MinimalityViolation>> {
    require_valid(g, cover)?;
    let cliques = cover.cliques();
    for i in 0..cliques.len() {
        'pair: for j in i + 1..cliques.len() {
            for &u in &cliques[i] {
                for &v in &cliques[j] {
                    if u != v && !g.has_edge(u, v) {
                        continue 'pair;
                    }
                }
            }
            return Ok(Some(MinimalityViolation::ComposablePair {
                first: i,
                second: j,
            }));
        }
    }
    Ok(None)
}

fn removable(
    counts: &HashMap<(u32, u32), u32>,
    clique: &[u32],
    v: u32,
) -> bool {
    clique.iter().all(|&u| {
        if u == v {
            return true;
        }
        let key = if u < v { (u, v) } else { (v, u) };
        counts[&key] >= 2
    })
}

/// No vertex can be dropped from any clique without uncovering an edge.
pub fn is_assignment_minimal(
    g: &Graph,
    cover: &CliqueCover,
) -> Result<Option<MinimalityViolation>> {
    require_valid(g, cover)?;
    let counts = coverage_counts(cover);
    for (i, clique) in cover.cliques().iter().enumerate() {
        for &v in clique {
            if removable(&counts, clique, v) {
                return Ok(Some(MinimalityViolation::RemovableVertex {
                    clique: i,
                    vertex: v,
                }));
            }
        }
    }
    Ok(None)
}

/// Greedily drops vertex-clique assignments while every edge stays covered:
/// cliques in ascending index order, vertices ascending within each clique.
/// Cliques that shrink below two vertices are deleted. Coverage counts only
/// ever decrease, so a single pass reaches a fixpoint.
pub fn make_assignment_minimal(g: &Graph, cover: &CliqueCover) -> Result<CliqueCover> {
    require_valid(g, cover)?;
    let mut counts = coverage_counts(cover);
    let mut cliques: Vec<Vec<u32>> = cover.cliques().to_vec();
    for clique in cliques.iter_mut() {
        let mut kept = Vec::with_capacity(clique.len());
        for idx in 0..clique.len() {
            let v = clique[idx];
            // Partners are the current members: already-kept ones plus the
            // not-yet-visited tail.
            let partners = kept.iter().chain(&clique[idx + 1..]);
            let can_drop = partners.clone().all(|&u| {
                let key = if u < v { (u, v) } else { (v, u) };
                counts[&key] >= 2
            });
            if can_drop {
                for &u in partners {
                    let key = if u < v { (u, v) } else { (v, u) };
                    *counts.get_mut(&key).unwrap() -= 1;
                }
            } else {
                kept.push(v);
            }
        }
        *clique = kept;
    }
    // Deleting a short clique removes no still-needed coverage: a singleton
    // covers nothing, and an empty clique even less.
    cliques.retain(|c| c.len() >= 2);
    Ok(CliqueCover::from_sorted_cliques(cover.n(), cliques))
}

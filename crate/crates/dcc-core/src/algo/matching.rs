//! Maximal matching from the clique side only: each clique pairs up its
//! currently unmatched members, leaving at most one unmatched per scan; no
//! graph edge can survive with both endpoints free.

use crate::cover::CliqueCover;
use crate::encoding::EncodedCover;
use crate::error::Result;

/// A maximal matching and the derived 2-approximate vertex cover (the sorted
/// matched endpoints, exactly `2 * edges.len()` of them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(u32, u32)>,
    pub vertex_cover: Vec<u32>,
}

fn matching_impl(
    n: usize,
    source: impl FnMut(&mut dyn FnMut(&[u32])) -> Result<()>,
) -> Result<Matching> {
    let mut source = source;
    let mut matched = vec![false; n];
    let mut edges = Vec::new();
    let mut free: Vec<u32> = Vec::new();
    source(&mut |clique: &[u32]| {
        free.clear();
        free.extend(clique.iter().copied().filter(|&v| !matched[v as usize]));
        // Pair consecutive free vertices in ascending order; odd one out stays
        // unmatched.
        for pair in free.chunks_exact(2) {
            matched[pair[0] as usize] = true;
            matched[pair[1] as usize] = true;
            edges.push((pair[0], pair[1]));
        }
    })?;
    let vertex_cover = (0..n as u32).filter(|&v| matched[v as usize]).collect();
    Ok(Matching {
        edges,
        vertex_cover,
    })
}

pub fn maximal_matching(cover: &CliqueCover) -> Matching {
    matching_impl(cover.n(), |f| {
        for clique in cover.cliques() {
            f(clique);
        }
        Ok(())
    })
    .expect("in-memory cover cannot fail")
}

/// Streaming variant over an encoded cover with a reusable decode buffer.
pub fn maximal_matching_encoded(enc: &EncodedCover) -> Result<Matching> {
    let mut buf = Vec::new();
    matching_impl(enc.n(), |f| {
        for i in 0..enc.num_cliques() {
            enc.decode_clique(i, &mut buf)?;
            f(&buf);
        }
        Ok(())
    })
}

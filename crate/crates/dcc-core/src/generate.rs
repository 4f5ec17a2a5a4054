//! Synthetic graph families: fixed constructions used as worst cases and
//! seeded random models (ER, BA, UA).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two cliques of order `n` joined by a perfect matching. Vertices `0..n` form
/// the first clique, `n..2n` the second, and `i` is matched with `n + i`.
pub fn gen_matched_cliques(n: usize) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            edges.push((i, j));
            edges.push((n as u32 + i, n as u32 + j));
        }
        edges.push((i, n as u32 + i));
    }
    Graph::from_edges(2 * n, edges)
}

/// Complete graph on `2k` vertices minus a perfect matching; the only
/// non-edges are `{i, k + i}`. Requires `k` to be a power of two, `k >= 2`.
pub fn gen_clique_minus_matching(k: usize) -> Result<Graph> {
    if k < 2 || !k.is_power_of_two() {
        return Err(Error::InvalidParam(format!(
            "k must be a power of two >= 2, got {k}"
        )));
    }
    let n = 2 * k;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if v != u + k as u32 {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Three disjoint cliques `A`, `B`, `U` of order `n` (ids `0..n`, `n..2n`,
/// `2n..3n`), with `U` complete to `A ∪ B` and no `A`–`B` edges.
pub fn gen_abu_family(n: usize) -> Graph {
    assert!(n >= 1);
    let n32 = n as u32;
    let mut edges = Vec::new();
    for i in 0..n32 {
        for j in i + 1..n32 {
            edges.push((i, j));
            edges.push((n32 + i, n32 + j));
            edges.push((2 * n32 + i, 2 * n32 + j));
        }
        for j in 0..n32 {
            edges.push((2 * n32 + i, j));
            edges.push((2 * n32 + i, n32 + j));
        }
    }
    Graph::from_edges(3 * n, edges)
}

/// Five cliques of order `n`: `A` and `B` joined by a perfect matching, `U`
/// complete to `A ∪ B`, `V` complete to `A`, and `W` complete to `B`. The
/// cheapest covers by clique count and by total assignments differ
/// polynomially on this family.
pub fn gen_separation_family(n: usize) -> Graph {
    assert!(n >= 1);
    let n32 = n as u32;
    let (a, b, u, v, w) = (0, n32, 2 * n32, 3 * n32, 4 * n32);
    let mut edges = Vec::new();
    for i in 0..n32 {
        for j in i + 1..n32 {
            for base in [a, b, u, v, w] {
                edges.push((base + i, base + j));
            }
        }
        edges.push((a + i, b + i));
        for j in 0..n32 {
            edges.push((u + i, a + j));
            edges.push((u + i, b + j));
            edges.push((v + i, a + j));
            edges.push((w + i, b + j));
        }
    }
    Graph::from_edges(5 * n, edges)
}

/// Erdős–Rényi `G(n, p)`. Deterministic for a fixed seed: per-pair Bernoulli
/// draws up to `n = 10^4`, geometric skipping over the pair sequence above
/// that.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParam(format!("p must be in [0, 1], got {p}")));
    }
    if p == 0.0 {
        return Ok(Graph::empty(n));
    }
    if p == 1.0 {
        return Ok(Graph::complete(n));
    }
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    if n <= 10_000 {
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
    } else {
        // Skip-based sampling: jump over pairs in lexicographic order with
        // geometrically distributed gaps.
        let total = n as u64 * (n as u64 - 1) / 2;
        let log_q = (1.0 - p).ln();
        let mut idx: u64 = 0;
        loop {
            let r: f64 = rng.random();
            let skip = ((1.0 - r).ln() / log_q).floor() as u64;
            idx = idx.saturating_add(skip);
            if idx >= total {
                break;
            }
            edges.push(pair_from_index(n as u64, idx));
            idx += 1;
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Inverse of the lexicographic pair enumeration (u, u+1), (u, u+2), ...
fn pair_from_index(n: u64, idx: u64) -> (u32, u32) {
    let mut u = 0u64;
    let mut remaining = idx;
    loop {
        let row = n - u - 1;
        if remaining < row {
            return (u as u32, (u + 1 + remaining) as u32);
        }
        remaining -= row;
        u += 1;
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Attachment {
    Preferential,
    Uniform,
}

/// Barabási–Albert preferential attachment from a `k`-clique seed: every new
/// vertex attaches to `k` distinct existing vertices sampled proportionally to
/// degree, without replacement.
pub fn gen_ba(n: usize, k: usize, seed: u64) -> Result<Graph> {
    gen_attachment(n, k, seed, Attachment::Preferential)
}

/// Uniform attachment: as `gen_ba` but targets are sampled uniformly.
pub fn gen_ua(n: usize, k: usize, seed: u64) -> Result<Graph> {
    gen_attachment(n, k, seed, Attachment::Uniform)
}

fn gen_attachment(n: usize, k: usize, seed: u64, mode: Attachment) -> Result<Graph> {
    if k < 1 || k >= n {
        return Err(Error::InvalidParam(format!(
            "attachment count k must satisfy 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let mut rng = rng_for(seed);
    let mut edges = Vec::with_capacity(k * (k - 1) / 2 + k * (n - k));
    // Each edge contributes both endpoints; sampling an entry uniformly is
    // degree-proportional sampling.
    let mut endpoint_pool: Vec<u32> = Vec::new();
    let add_edge = |edges: &mut Vec<(u32, u32)>, pool: &mut Vec<u32>, u: u32, v: u32| {
        edges.push((u, v));
        pool.push(u);
        pool.push(v);
    };
    for u in 0..k as u32 {
        for v in u + 1..k as u32 {
            add_edge(&mut edges, &mut endpoint_pool, u, v);
        }
    }
    let mut chosen: Vec<u32> = Vec::with_capacity(k);
    for v in k as u32..n as u32 {
        chosen.clear();
        while chosen.len() < k {
            let t = match mode {
                Attachment::Uniform => rng.random_range(0..v),
                Attachment::Preferential => {
                    if endpoint_pool.is_empty() {
                        rng.random_range(0..v)
                    } else {
                        endpoint_pool[rng.random_range(0..endpoint_pool.len())]
                    }
                }
            };
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            add_edge(&mut edges, &mut endpoint_pool, t, v);
        }
    }
    Ok(Graph::from_edges(n, edges))
}

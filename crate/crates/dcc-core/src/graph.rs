//! Simple undirected graphs with sorted adjacency lists, plus the text format
//! used on disk (`%` comments, a `n m` header line, then one `u v` line per
//! edge with 1-based ids).

use std::io::{BufRead, BufReader, BufWriter, Read, Write};

use crate::degeneracy::degeneracy_ordering;
use crate::error::{Error, Result};

/// Immutable simple undirected graph. Vertices are `0..n`, adjacency lists are
/// strictly ascending, and every edge appears in both endpoint lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops are dropped and duplicate
    /// edges are merged.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for n = {n}"
            );
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut half_edges = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            half_edges += list.len();
        }
        Graph {
            adj,
            m: half_edges / 2,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut adj = Vec::with_capacity(n);
        for v in 0..n as u32 {
            adj.push((0..n as u32).filter(|&u| u != v).collect());
        }
        Graph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.adj.len() as u32
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.adj.len();
        let mut adj = Vec::with_capacity(n);
        for v in 0..n as u32 {
            let mut list = Vec::with_capacity(n - 1 - self.degree(v));
            let mut it = self.adj[v as usize].iter().copied().peekable();
            for u in 0..n as u32 {
                if it.peek() == Some(&u) {
                    it.next();
                    continue;
                }
                if u != v {
                    list.push(u);
                }
            }
            adj.push(list);
        }
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Checks adjacency symmetry, strict sortedness, absence of loops, and the
    /// edge count. Used by tests and the loaders.
    pub fn check_invariants(&self) -> bool {
        let mut half_edges = 0;
        for (v, list) in self.adj.iter().enumerate() {
            half_edges += list.len();
            for (i, &u) in list.iter().enumerate() {
                if u as usize == v || (u as usize) >= self.adj.len() {
                    return false;
                }
                if i > 0 && list[i - 1] >= u {
                    return false;
                }
                if self.adj[u as usize].binary_search(&(v as u32)).is_err() {
                    return false;
                }
            }
        }
        half_edges == 2 * self.m
    }
}

/// Basic per-graph quantities. `clique_distance` is one plus the number of
/// non-edges; it is 1 exactly for complete graphs.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub degeneracy: u32,
    pub clique_distance: u64,
}

pub fn clique_distance(n: usize, m: usize) -> u64 {
    let pairs = n as u64 * (n as u64).saturating_sub(1) / 2;
    pairs - m as u64 + 1
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let ordering = degeneracy_ordering(g);
    GraphStats {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        degeneracy: ordering.degeneracy,
        clique_distance: clique_distance(g.n(), g.m()),
    }
}

/// Lines of a text stream with 1-based numbering, skipping comments (`%`) and
/// blank lines.
pub(crate) struct DataLines<R> {
    lines: std::iter::Enumerate<std::io::Lines<BufReader<R>>>,
}

impl<R: Read> DataLines<R> {
    pub(crate) fn new(reader: R) -> Self {
        DataLines {
            lines: BufReader::new(reader).lines().enumerate(),
        }
    }

    /// Next data line as `(line_number, content)`.
    pub(crate) fn next_data(&mut self) -> Result<Option<(usize, String)>> {
        for (idx, line) in self.lines.by_ref() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('%') {
                continue;
            }
            return Ok(Some((idx + 1, trimmed.to_string())));
        }
        Ok(None)
    }
}

pub(crate) fn parse_fields<const K: usize>(line: usize, text: &str) -> Result<[u64; K]> {
    let mut out = [0u64; K];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields
            .next()
            .ok_or_else(|| Error::parse(line, format!("expected {K} integer fields")))?;
        *slot = tok
            .parse::<u64>()
            .map_err(|_| Error::parse(line, format!("non-integer token '{tok}'")))?;
    }
    if fields.next().is_some() {
        return Err(Error::parse(line, format!("expected exactly {K} fields")));
    }
    Ok(out)
}

/// Reads a graph from the text format. Vertex ids in the file are 1-based;
/// in memory they become 0-based. Duplicate edges are merged and self-loops
/// dropped.
pub fn load_graph(reader: impl Read) -> Result<Graph> {
    let mut lines = DataLines::new(reader);
    let (hline, header) = lines
        .next_data()?
        .ok_or_else(|| Error::parse(0, "missing header line"))?;
    let [n, m] = parse_fields::<2>(hline, &header)?;
    let n = n as usize;
    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let (eline, text) = lines
            .next_data()?
            .ok_or_else(|| Error::parse(hline, format!("expected {m} edge lines")))?;
        let [u, v] = parse_fields::<2>(eline, &text)?;
        for id in [u, v] {
            if id < 1 || id > n as u64 {
                return Err(Error::parse(
                    eline,
                    format!("vertex id {id} out of range 1..={n}"),
                ));
            }
        }
        edges.push((u as u32 - 1, v as u32 - 1));
    }
    if let Some((eline, _)) = lines.next_data()? {
        return Err(Error::parse(eline, "unexpected data after last edge"));
    }
    Ok(Graph::from_edges(n, edges))
}

/// Writes the text format: `n m` header plus one `u v` line per edge,
/// lexicographic, 1-based.
pub fn save_graph(g: &Graph, writer: impl Write) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "{} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(w, "{} {}", u + 1, v + 1)?;
    }
    w.flush()?;
    Ok(())
}

pub fn load_graph_path(path: &std::path::Path) -> Result<Graph> {
    load_graph(std::fs::File::open(path)?)
}

pub fn save_graph_path(g: &Graph, path: &std::path::Path) -> Result<()> {
    save_graph(g, std::fs::File::create(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> &'static str {
        "3 3\n1 2\n1 3\n2 3\n"
    }

    #[test]
    fn load_triangle() {
        let g = load_graph(k3().as_bytes()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        assert!(g.check_invariants());
    }

    #[test]
    fn load_merges_duplicates() {
        let g = load_graph("2 2\n1 2\n1 2\n".as_bytes()).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn load_drops_self_loops() {
        // Oracle: distinct unordered pairs u != v among {1-2, 2-2} is just {1-2}.
        let g = load_graph("2 2\n1 2\n2 2\n".as_bytes()).unwrap();
        assert_eq!(g.m(), 1);
        assert!(!g.has_edge(1, 1));
    }

    #[test]
    fn load_rejects_bad_header() {
        let err = load_graph("3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn load_rejects_non_integer_token() {
        let err = load_graph("2 1\n1 x\n".as_bytes()).unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains('x'));
            }
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn load_rejects_out_of_range_id() {
        let err = load_graph("2 1\n1 3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn load_skips_comments() {
        let g = load_graph("% header comment\n2 1\n% between\n1 2\n".as_bytes()).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn save_triangle_format() {
        let g = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]);
        let mut out = Vec::new();
        save_graph(&g, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), k3());
    }

    #[test]
    fn save_empty_graph() {
        let mut out = Vec::new();
        save_graph(&Graph::empty(0), &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0 0\n");
    }

    #[test]
    fn roundtrip_er_graph() {
        let g = crate::generate::gen_er(50, 0.3, 11).unwrap();
        let mut out = Vec::new();
        save_graph(&g, &mut out).unwrap();
        let back = load_graph(out.as_slice()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn stats_complete_and_path() {
        let k5 = Graph::complete(5);
        assert_eq!(graph_stats(&k5).clique_distance, 1);
        // P3: 3 vertices, 2 edges.
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(graph_stats(&p3).clique_distance, 2);
    }

    #[test]
    fn stats_matched_cliques_7() {
        let g = crate::generate::gen_matched_cliques(7);
        let st = graph_stats(&g);
        assert_eq!(st.m, 49);
        assert_eq!(st.clique_distance, 14 * 13 / 2 - 49 + 1);
        assert_eq!(st.clique_distance, 43);
    }

    #[test]
    fn clique_distance_drops_by_one_per_edge() {
        let mut edges = vec![(0u32, 1u32), (1, 2)];
        let before = graph_stats(&Graph::from_edges(5, edges.clone())).clique_distance;
        edges.push((2, 3));
        let after = graph_stats(&Graph::from_edges(5, edges)).clique_distance;
        assert_eq!(after, before - 1);
    }

    #[test]
    fn complement_of_path() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let c = p3.complement();
        assert_eq!(c.m(), 1);
        assert!(c.has_edge(0, 2));
        assert!(c.check_invariants());
    }
}

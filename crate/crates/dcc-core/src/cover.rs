//! Clique covers, incidence duals, the combined DCC representation, the query
//! interface, and the cover text format (`n k s` header, then one line of
//! ascending 1-based vertex ids per clique).

use std::io::{BufWriter, Read, Write};

use crate::error::{Error, Result};
use crate::graph::{DataLines, Graph};

/// A labeled family of cliques over the vertex universe `0..n`. Each clique is
/// strictly ascending and duplicate-free; cliqueness against a concrete graph
/// is checked by [`validate_cover`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    n: usize,
    cliques: Vec<Vec<u32>>,
}

impl CliqueCover {
    /// Checks that every clique is strictly ascending with ids below `n`.
    pub fn from_cliques(n: usize, cliques: Vec<Vec<u32>>) -> Result<CliqueCover> {
        for (i, clique) in cliques.iter().enumerate() {
            for (j, &v) in clique.iter().enumerate() {
                if v as usize >= n {
                    return Err(Error::MalformedCover(format!(
                        "clique {i} contains vertex {v}, but n = {n}"
                    )));
                }
                if j > 0 && clique[j - 1] >= v {
                    return Err(Error::MalformedCover(format!(
                        "clique {i} is not strictly ascending"
                    )));
                }
            }
        }
        Ok(CliqueCover { n, cliques })
    }

    /// For constructor output that is sorted by construction.
    pub(crate) fn from_sorted_cliques(n: usize, cliques: Vec<Vec<u32>>) -> CliqueCover {
        debug_assert!(cliques
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1])
                && c.iter().all(|&v| (v as usize) < n)));
        CliqueCover { n, cliques }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_cliques(&self) -> usize {
        self.cliques.len()
    }

    pub fn cliques(&self) -> &[Vec<u32>] {
        &self.cliques
    }

    pub fn clique(&self, i: usize) -> &[u32] {
        &self.cliques[i]
    }

    /// Total number of vertex-clique assignments.
    pub fn size(&self) -> usize {
        self.cliques.iter().map(Vec::len).sum()
    }

    /// Sorted union of all cliques.
    pub fn universe(&self) -> Vec<u32> {
        let mut present = vec![false; self.n];
        for clique in &self.cliques {
            for &v in clique {
                present[v as usize] = true;
            }
        }
        (0..self.n as u32)
            .filter(|&v| present[v as usize])
            .collect()
    }
}

/// Per-vertex lists of clique labels; the query-side half of a DCC.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceDual {
    n: usize,
    num_cliques: usize,
    labels: Vec<Vec<u32>>,
}

impl IncidenceDual {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_cliques(&self) -> usize {
        self.num_cliques
    }

    pub fn labels(&self, v: u32) -> &[u32] {
        &self.labels[v as usize]
    }

    pub fn all_labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn from_labels(n: usize, num_cliques: usize, labels: Vec<Vec<u32>>) -> Result<Self> {
        if labels.len() != n {
            return Err(Error::Mismatch(format!(
                "{} label lists for n = {n}",
                labels.len()
            )));
        }
        for (v, list) in labels.iter().enumerate() {
            for (j, &l) in list.iter().enumerate() {
                if l as usize >= num_cliques {
                    return Err(Error::MalformedCover(format!(
                        "vertex {v} carries label {l}, but k = {num_cliques}"
                    )));
                }
                if j > 0 && list[j - 1] >= l {
                    return Err(Error::MalformedCover(format!(
                        "labels of vertex {v} are not strictly ascending"
                    )));
                }
            }
        }
        Ok(IncidenceDual {
            n,
            num_cliques,
            labels,
        })
    }
}

/// `L_v = { l | v ∈ C_l }`, ascending. Linear in the cover size.
pub fn dual_from_cover(cover: &CliqueCover) -> IncidenceDual {
    let mut labels = vec![Vec::new(); cover.n()];
    for (l, clique) in cover.cliques.iter().enumerate() {
        for &v in clique {
            labels[v as usize].push(l as u32);
        }
    }
    IncidenceDual {
        n: cover.n(),
        num_cliques: cover.num_cliques(),
        labels,
    }
}

/// `C_l = { v | l ∈ L_v }`, ascending. Inverse of [`dual_from_cover`].
pub fn cover_from_dual(dual: &IncidenceDual) -> CliqueCover {
    let mut cliques = vec![Vec::new(); dual.num_cliques];
    for v in 0..dual.n as u32 {
        for &l in &dual.labels[v as usize] {
            cliques[l as usize].push(v);
        }
    }
    CliqueCover {
        n: dual.n,
        cliques,
    }
}

/// A clique cover paired with its incidence dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DccRepresentation {
    pub cover: CliqueCover,
    pub dual: IncidenceDual,
}

impl DccRepresentation {
    pub fn from_cover(cover: CliqueCover) -> DccRepresentation {
        let dual = dual_from_cover(&cover);
        DccRepresentation { cover, dual }
    }

    /// `size(C) + size(L)`; the two halves always have equal size.
    pub fn size(&self) -> usize {
        self.cover.size() + self.dual.size()
    }

    pub fn n(&self) -> usize {
        self.cover.n()
    }

    /// Mutual consistency: `l ∈ L_v` exactly when `v ∈ C_l`.
    pub fn is_consistent(&self) -> bool {
        self.cover.n() == self.dual.n
            && self.cover.num_cliques() == self.dual.num_cliques
            && dual_from_cover(&self.cover) == self.dual
    }
}

/// `{u, v}` is an edge iff `L_u ∩ L_v` is nonempty. Probes the shorter list
/// against the longer via binary search.
pub fn adjacency_query(dual: &IncidenceDual, u: u32, v: u32) -> Result<bool> {
    for x in [u, v] {
        if x as usize >= dual.n {
            return Err(Error::VertexOutOfRange { v: x, n: dual.n });
        }
    }
    if u == v {
        return Ok(false);
    }
    let (short, long) = if dual.labels(u).len() <= dual.labels(v).len() {
        (dual.labels(u), dual.labels(v))
    } else {
        (dual.labels(v), dual.labels(u))
    };
    Ok(short.iter().any(|l| long.binary_search(l).is_ok()))
}

/// `N(v)` recovered as the deduplicated union of the cliques containing `v`.
pub fn neighborhood_query(dcc: &DccRepresentation, v: u32) -> Result<Vec<u32>> {
    if v as usize >= dcc.n() {
        return Err(Error::VertexOutOfRange { v, n: dcc.n() });
    }
    let mut out: Vec<u32> = dcc
        .dual
        .labels(v)
        .iter()
        .flat_map(|&l| dcc.cover.clique(l as usize).iter().copied())
        .filter(|&u| u != v)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Why a cover is not a valid clique cover of a graph: sets that are not
/// cliques (with a witness non-edge) and edges left uncovered.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub non_clique_witnesses: Vec<(usize, (u32, u32))>,
    pub uncovered_edges: Vec<(u32, u32)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.non_clique_witnesses.is_empty() && self.uncovered_edges.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            return "valid".to_string();
        }
        let mut parts = Vec::new();
        if let Some((i, (u, v))) = self.non_clique_witnesses.first() {
            parts.push(format!(
                "{} non-clique sets (first: clique {i} contains non-edge {{{u}, {v}}})",
                self.non_clique_witnesses.len()
            ));
        }
        if let Some((u, v)) = self.uncovered_edges.first() {
            parts.push(format!(
                "{} uncovered edges (first: {{{u}, {v}}})",
                self.uncovered_edges.len()
            ));
        }
        parts.join("; ")
    }
}

/// Checks that every set induces a clique and every edge is covered. An empty
/// report means the cover is valid; an empty cover is valid exactly for
/// edgeless graphs.
pub fn validate_cover(g: &Graph, cover: &CliqueCover) -> Result<ValidationReport> {
    if g.n() != cover.n() {
        return Err(Error::Mismatch(format!(
            "cover is over {} vertices, graph has {}",
            cover.n(),
            g.n()
        )));
    }
    let mut report = ValidationReport::default();
    let mut covered = EdgeSet::new(g);
    for (i, clique) in cover.cliques.iter().enumerate() {
        'witness: for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                if !g.has_edge(u, v) {
                    report.non_clique_witnesses.push((i, (u, v)));
                    break 'witness;
                }
            }
        }
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                covered.insert(g, u, v);
            }
        }
    }
    for (u, v) in g.edges() {
        if !covered.contains(g, u, v) {
            report.uncovered_edges.push((u, v));
        }
    }
    Ok(report)
}

/// Edge-indexed bitset keyed by position in the adjacency lists.
pub(crate) struct EdgeSet {
    offsets: Vec<usize>,
    bits: Vec<bool>,
}

impl EdgeSet {
    pub(crate) fn new(g: &Graph) -> EdgeSet {
        let mut offsets = Vec::with_capacity(g.n() + 1);
        offsets.push(0);
        let mut acc = 0;
        for v in g.vertices() {
            acc += g.degree(v);
            offsets.push(acc);
        }
        EdgeSet {
            offsets,
            bits: vec![false; acc],
        }
    }

    fn index(&self, g: &Graph, u: u32, v: u32) -> Option<usize> {
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        g.neighbors(lo)
            .binary_search(&hi)
            .ok()
            .map(|pos| self.offsets[lo as usize] + pos)
    }

    /// Ignores pairs that are not edges of `g`.
    pub(crate) fn insert(&mut self, g: &Graph, u: u32, v: u32) {
        if let Some(i) = self.index(g, u, v) {
            self.bits[i] = true;
        }
    }

    pub(crate) fn contains(&self, g: &Graph, u: u32, v: u32) -> bool {
        self.index(g, u, v).map(|i| self.bits[i]).unwrap_or(false)
    }
}

/// Cover quality numbers. `compression_ratio` is `2m / size(C)`; `ub_opt` is
/// `2m / Σ_v ceil(deg(v) / core(v))`, an upper bound on the ratio any valid
/// cover can achieve. `max_clique_size` is a lower bound on the clique number.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CoverStats {
    pub num_cliques: usize,
    pub assignments: usize,
    pub max_clique_size: usize,
    pub compression_ratio: f64,
    pub ub_opt: f64,
}

pub fn cover_stats(g: &Graph, cover: &CliqueCover, coreness: &[u32]) -> CoverStats {
    let assignments = cover.size();
    let two_m = 2.0 * g.m() as f64;
    let mut denom: u64 = 0;
    for v in g.vertices() {
        let core = coreness[v as usize] as u64;
        if core > 0 {
            denom += (g.degree(v) as u64).div_ceil(core);
        }
    }
    CoverStats {
        num_cliques: cover.num_cliques(),
        assignments,
        max_clique_size: cover.cliques.iter().map(Vec::len).max().unwrap_or(0),
        compression_ratio: if assignments > 0 {
            two_m / assignments as f64
        } else {
            0.0
        },
        ub_opt: if denom > 0 { two_m / denom as f64 } else { 0.0 },
    }
}

/// Reads the cover text format: `n k s` header, then `k` clique lines of
/// ascending 1-based vertex ids.
pub fn load_cover(reader: impl Read) -> Result<CliqueCover> {
    let mut lines = DataLines::new(reader);
    let (hline, header) = lines
        .next_data()?
        .ok_or_else(|| Error::parse(0, "missing header line"))?;
    let [n, k, s] = crate::graph::parse_fields::<3>(hline, &header)?;
    let n = n as usize;
    let mut cliques = Vec::with_capacity(k as usize);
    let mut assignments: u64 = 0;
    for _ in 0..k {
        let (cline, text) = lines
            .next_data()?
            .ok_or_else(|| Error::parse(hline, format!("expected {k} clique lines")))?;
        let mut clique = Vec::new();
        for tok in text.split_whitespace() {
            let id: u64 = tok
                .parse()
                .map_err(|_| Error::parse(cline, format!("non-integer token '{tok}'")))?;
            if id < 1 || id > n as u64 {
                return Err(Error::parse(
                    cline,
                    format!("vertex id {id} out of range 1..={n}"),
                ));
            }
            let v = (id - 1) as u32;
            if let Some(&last) = clique.last() {
                if last >= v {
                    return Err(Error::parse(cline, "vertex ids must be strictly ascending"));
                }
            }
            clique.push(v);
        }
        assignments += clique.len() as u64;
        cliques.push(clique);
    }
    if assignments != s {
        return Err(Error::parse(
            hline,
            format!("header declares {s} assignments, found {assignments}"),
        ));
    }
    if let Some((line, _)) = lines.next_data()? {
        return Err(Error::parse(line, "unexpected data after last clique"));
    }
    Ok(CliqueCover { n, cliques })
}

pub fn save_cover(cover: &CliqueCover, writer: impl Write) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(
        w,
        "{} {} {}",
        cover.n(),
        cover.num_cliques(),
        cover.size()
    )?;
    for clique in &cover.cliques {
        let mut first = true;
        for &v in clique {
            if !first {
                write!(w, " ")?;
            }
            write!(w, "{}", v + 1)?;
            first = false;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

pub fn load_cover_path(path: &std::path::Path) -> Result<CliqueCover> {
    load_cover(std::fs::File::open(path)?)
}

pub fn save_cover_path(cover: &CliqueCover, path: &std::path::Path) -> Result<()> {
    save_cover(cover, std::fs::File::create(path)?)
}

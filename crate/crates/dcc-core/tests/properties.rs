//! Property tests: structural invariants that hold for *all* inputs, checked
//! over generated instances. Heavier cross-checks against baselines live in
//! the acceptance suite.

use proptest::prelude::*;

use dcc_core::algo;
use dcc_core::construct;
use dcc_core::cover::{
    adjacency_query, cover_from_dual, dual_from_cover, load_cover, save_cover, validate_cover,
    CliqueCover,
};
use dcc_core::encoding::{encode_cover, EncodedCover};
use dcc_core::generate;
use dcc_core::graph::{load_graph, save_graph, Graph};
use dcc_core::minimality::{
    is_assignment_minimal, is_composition_minimal, is_inclusion_minimal, is_support_minimal,
};

/// Random simple graph as an edge list over `n` vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..max_n).prop_flat_map(|n| {
        let edges = proptest::collection::vec((0..n as u32, 0..n as u32), 0..4 * n);
        edges.prop_map(move |e| Graph::from_edges(n, e))
    })
}

/// Random structurally valid cover: sorted, deduplicated, in-range cliques.
fn arb_cover(max_n: usize) -> impl Strategy<Value = CliqueCover> {
    (1..max_n).prop_flat_map(|n| {
        let clique = proptest::collection::btree_set(0..n as u32, 1..(n.min(8) + 1));
        proptest::collection::vec(clique, 0..12).prop_map(move |cs| {
            CliqueCover::from_cliques(n, cs.into_iter().map(|c| c.into_iter().collect()).collect())
                .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn duality_roundtrip_and_equal_sizes(cover in arb_cover(40)) {
        let dual = dual_from_cover(&cover);
        prop_assert_eq!(dual.size(), cover.size());
        prop_assert_eq!(cover_from_dual(&dual), cover.clone());
        prop_assert_eq!(dual_from_cover(&cover_from_dual(&dual)), dual);
    }

    #[test]
    fn encode_decode_identity(cover in arb_cover(500)) {
        let enc = encode_cover(&cover);
        prop_assert_eq!(enc.decode_cover().unwrap(), cover.clone());
        // Random access agrees with the full decode.
        let mut buf = Vec::new();
        for i in 0..enc.num_cliques() {
            enc.decode_clique(i, &mut buf).unwrap();
            prop_assert_eq!(buf.as_slice(), cover.clique(i));
        }
        prop_assert!(enc.payload_len() <= 5 * cover.size());
        // Container bytes survive a read/write cycle bit-exactly.
        let mut bytes = Vec::new();
        enc.write_to(&mut bytes).unwrap();
        let reread = EncodedCover::read_from(bytes.as_slice()).unwrap();
        prop_assert_eq!(reread, enc);
    }

    #[test]
    fn graph_text_roundtrip(g in arb_graph(60)) {
        let mut out = Vec::new();
        save_graph(&g, &mut out).unwrap();
        prop_assert_eq!(load_graph(out.as_slice()).unwrap(), g);
    }

    #[test]
    fn cover_text_roundtrip(cover in arb_cover(60)) {
        let mut out = Vec::new();
        save_cover(&cover, &mut out).unwrap();
        prop_assert_eq!(load_cover(out.as_slice()).unwrap(), cover);
    }

    #[test]
    fn generated_graphs_are_well_formed(g in arb_graph(80)) {
        prop_assert!(g.check_invariants());
    }

    #[test]
    fn query_soundness_exhaustive(g in arb_graph(60)) {
        // Constructors rotate to vary the cover shape.
        let dcc = match g.m() % 3 {
            0 => construct::global_admissibility(&g),
            1 => construct::succinct_peeling(&g),
            _ => construct::local_admissibility(&g),
        };
        for u in g.vertices() {
            for v in u + 1..g.n() as u32 {
                prop_assert_eq!(
                    adjacency_query(&dcc.dual, u, v).unwrap(),
                    g.has_edge(u, v),
                    "pair ({}, {})", u, v
                );
            }
        }
    }

    #[test]
    fn constructors_meet_size_lower_bound(g in arb_graph(50)) {
        // Any valid cover needs at least ceil(deg/core) assignments per vertex.
        let ord = dcc_core::degeneracy::degeneracy_ordering(&g);
        let bound: u64 = g
            .vertices()
            .filter(|&v| ord.coreness[v as usize] > 0)
            .map(|v| (g.degree(v) as u64).div_ceil(u64::from(ord.coreness[v as usize])))
            .sum();
        for (_, construct) in CONSTRUCTORS {
            let cover = construct(&g).cover;
            prop_assert!(validate_cover(&g, &cover).unwrap().is_valid());
            prop_assert!(cover.size() as u64 >= bound);
        }
    }
}

type Constructor = fn(&Graph) -> dcc_core::cover::DccRepresentation;

const CONSTRUCTORS: [(&str, Constructor); 5] = [
    ("lp", construct::lovasz_peeling),
    ("sp", construct::succinct_peeling),
    ("ga", construct::global_admissibility),
    ("la", construct::local_admissibility),
    ("pl", construct::local_peeling),
];

/// Valid covers of varied minimality character for the implication checks.
fn cover_zoo(g: &Graph) -> Vec<CliqueCover> {
    let mut zoo = Vec::new();
    for (_, construct) in CONSTRUCTORS {
        zoo.push(construct(g).cover);
    }
    // Per-edge cover: assignment-minimal but typically not composition-minimal.
    zoo.push(
        CliqueCover::from_cliques(g.n(), g.edges().map(|(u, v)| vec![u, v]).collect()).unwrap(),
    );
    // Duplicated clique breaks inclusion-minimality while staying valid.
    if let Some(first) = zoo[0].cliques().first().cloned() {
        let mut cliques = zoo[0].cliques().to_vec();
        cliques.push(first);
        zoo.push(CliqueCover::from_cliques(g.n(), cliques).unwrap());
    }
    for (_, construct) in &CONSTRUCTORS[..2] {
        let c = construct(g).cover;
        zoo.push(dcc_core::minimality::make_assignment_minimal(g, &c).unwrap());
    }
    zoo
}

/// The partial order of minimality notions: assignment implies support
/// implies inclusion, and composition implies inclusion.
#[test]
fn minimality_partial_order_consistency() {
    for seed in 0..20u64 {
        let g = generate::gen_er(24, 0.3 + (seed % 4) as f64 * 0.15, 500 + seed).unwrap();
        if g.m() == 0 {
            continue;
        }
        for cover in cover_zoo(&g) {
            let assignment = is_assignment_minimal(&g, &cover).unwrap().is_none();
            let support = is_support_minimal(&g, &cover).unwrap().is_none();
            let inclusion = is_inclusion_minimal(&g, &cover).unwrap().is_none();
            let composition = is_composition_minimal(&g, &cover).unwrap().is_none();
            assert!(!assignment || support, "assignment-minimal must be support-minimal");
            assert!(!support || inclusion, "support-minimal must be inclusion-minimal");
            assert!(!composition || inclusion, "composition-minimal must be inclusion-minimal");
        }
    }
}

/// Instrumented BFS mirror: dequeues must be nondecreasing in distance and
/// each clique is scanned at most once per source.
#[test]
fn bfs_dequeue_order_and_scan_accounting() {
    use std::collections::VecDeque;
    for seed in 0..10u64 {
        let g = generate::gen_er(150, 0.03, 900 + seed).unwrap();
        let dcc = construct::global_admissibility(&g);
        let universe = dcc.cover.universe();
        let Some(&s) = universe.first() else { continue };

        let mut dist = vec![u32::MAX; g.n()];
        let mut discovered = vec![false; g.n()];
        let mut scanned = vec![false; dcc.cover.num_cliques()];
        let mut scan_flips = 0usize;
        let mut queue = VecDeque::new();
        let mut last_dequeued = 0u32;
        dist[s as usize] = 0;
        discovered[s as usize] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            assert!(
                dist[v as usize] >= last_dequeued,
                "dequeue order decreased in distance"
            );
            last_dequeued = dist[v as usize];
            for &l in dcc.dual.labels(v) {
                if scanned[l as usize] {
                    continue;
                }
                scanned[l as usize] = true;
                scan_flips += 1;
                for &u in dcc.cover.clique(l as usize) {
                    if !discovered[u as usize] {
                        discovered[u as usize] = true;
                        dist[u as usize] = dist[v as usize] + 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        assert!(scan_flips <= dcc.cover.num_cliques());

        // The instrumented run and the library agree.
        let lib = algo::bfs(&dcc, s).unwrap();
        assert_eq!(lib.dist, dist);
    }
}

/// Spanning forest from union-find components: acyclic, edges of the graph,
/// and exactly (covered vertices - components) of them.
#[test]
fn component_forest_properties() {
    for seed in 0..10u64 {
        let g = generate::gen_er(100, 0.02, 700 + seed).unwrap();
        let dcc = construct::local_peeling(&g);
        let res = algo::connected_components(&dcc.cover);
        let covered = dcc.cover.universe().len();
        assert_eq!(res.forest.len(), covered - res.count);
        let mut uf = algo::UnionFind::new(g.n());
        for &(u, v) in &res.forest {
            assert!(g.has_edge(u, v));
            assert!(uf.union(u, v), "cycle in spanning forest");
        }
    }
}

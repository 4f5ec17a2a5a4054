//! Drives the C ABI end to end from Rust: generate, save, reload, construct,
//! validate, query, and run algorithms through raw handles.

use std::ffi::CString;
use std::ptr;

use dcc_ffi::*;

fn c_path(path: &std::path::Path) -> CString {
    CString::new(path.to_str().unwrap()).unwrap()
}

fn last_error() -> String {
    let mut buf = vec![0u8; 256];
    let len = unsafe { dcc_last_error_message(buf.as_mut_ptr().cast(), buf.len()) };
    String::from_utf8_lossy(&buf[..len.min(255)]).into_owned()
}

#[test]
fn full_pipeline_through_the_c_abi() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.txt");
    let cover_path = dir.path().join("c.txt");
    let encoded_path = dir.path().join("c.dcc");

    unsafe {
        // Generate and persist a graph.
        let mut graph: *mut DccGraph = ptr::null_mut();
        assert_eq!(
            dcc_graph_gen_matched_cliques(16, &mut graph),
            DccStatus::Ok
        );
        assert_eq!(dcc_graph_n(graph), 32);
        assert_eq!(dcc_graph_m(graph), 16 * 15 + 16);
        assert_eq!(dcc_graph_degeneracy(graph), 16);
        assert_eq!(dcc_graph_save(graph, c_path(&graph_path).as_ptr()), DccStatus::Ok);

        // Reload and make sure the counts survive the round trip.
        let mut reloaded: *mut DccGraph = ptr::null_mut();
        assert_eq!(
            dcc_graph_load(c_path(&graph_path).as_ptr(), &mut reloaded),
            DccStatus::Ok
        );
        assert_eq!(dcc_graph_m(reloaded), dcc_graph_m(graph));

        // Construct a cover, validate it, and check the canonical numbers.
        let mut cover: *mut DccCover = ptr::null_mut();
        assert_eq!(
            dcc_cover_construct(
                reloaded,
                DccConstructor::SuccinctPeeling,
                false,
                &mut cover
            ),
            DccStatus::Ok
        );
        assert_eq!(dcc_cover_num_cliques(cover), 18);
        assert_eq!(dcc_cover_size(cover), 64);
        assert_eq!(dcc_cover_validate(reloaded, cover), DccStatus::Ok);
        let mut ratio = 0.0;
        assert_eq!(
            dcc_cover_compression_ratio(reloaded, cover, &mut ratio),
            DccStatus::Ok
        );
        assert!((ratio - 8.0).abs() < 1e-12, "ratio {ratio}");

        // Both on-disk formats load back.
        assert_eq!(
            dcc_cover_save(cover, c_path(&cover_path).as_ptr(), false),
            DccStatus::Ok
        );
        assert_eq!(
            dcc_cover_save(cover, c_path(&encoded_path).as_ptr(), true),
            DccStatus::Ok
        );
        for path in [&cover_path, &encoded_path] {
            let mut back: *mut DccCover = ptr::null_mut();
            assert_eq!(
                dcc_cover_load(c_path(path).as_ptr(), &mut back),
                DccStatus::Ok
            );
            assert_eq!(dcc_cover_size(back), 64);
            dcc_cover_free(back);
        }

        // Query-side algorithms.
        let mut rep: *mut DccRep = ptr::null_mut();
        assert_eq!(dcc_rep_build(cover, &mut rep), DccStatus::Ok);
        assert_eq!(dcc_rep_size(rep), 128);
        let mut adj = -1;
        assert_eq!(dcc_rep_adjacent(rep, 0, 1, &mut adj), DccStatus::Ok);
        assert_eq!(adj, 1);
        assert_eq!(dcc_rep_adjacent(rep, 0, 17, &mut adj), DccStatus::Ok);
        assert_eq!(adj, 0);

        let n = dcc_cover_n(cover);
        let mut dist = vec![0u32; n];
        assert_eq!(dcc_rep_bfs(rep, 0, dist.as_mut_ptr(), n), DccStatus::Ok);
        assert_eq!(dist[0], 0);
        assert_eq!(dist[1], 1); // same side of the matching
        assert_eq!(dist[16], 1); // matched partner
        assert_eq!(dist[17], 2); // partner's side

        let mut labels = vec![0i64; n];
        let mut count = 0usize;
        assert_eq!(
            dcc_cover_components(cover, labels.as_mut_ptr(), n, &mut count),
            DccStatus::Ok
        );
        assert_eq!(count, 1);
        assert!(labels.iter().all(|&l| l == 0));

        dcc_rep_free(rep);
        dcc_cover_free(cover);
        dcc_graph_free(reloaded);
        dcc_graph_free(graph);
    }
}

#[test]
fn errors_surface_through_status_and_message() {
    unsafe {
        let mut graph: *mut DccGraph = ptr::null_mut();
        let missing = CString::new("/nonexistent/g.txt").unwrap();
        assert_eq!(
            dcc_graph_load(missing.as_ptr(), &mut graph),
            DccStatus::Io
        );
        assert!(!last_error().is_empty());

        assert_eq!(
            dcc_graph_gen_er(10, 1.5, 0, &mut graph),
            DccStatus::InvalidArgument
        );
        assert!(last_error().contains("p must be"));

        // Null handling.
        assert_eq!(dcc_graph_load(missing.as_ptr(), ptr::null_mut()), DccStatus::NullPointer);
        assert_eq!(dcc_graph_n(ptr::null()), 0);
        dcc_graph_free(ptr::null_mut()); // no-op

        // An invalid cover is reported as a domain error with a witness.
        let mut g: *mut DccGraph = ptr::null_mut();
        assert_eq!(dcc_graph_gen_er(6, 0.0, 1, &mut g), DccStatus::Ok);
        let dir = tempfile::tempdir().unwrap();
        let bad_cover = dir.path().join("bad.txt");
        std::fs::write(&bad_cover, "6 1 2\n1 2\n").unwrap();
        let mut cov: *mut DccCover = ptr::null_mut();
        assert_eq!(
            dcc_cover_load(c_path(&bad_cover).as_ptr(), &mut cov),
            DccStatus::Ok
        );
        assert_eq!(dcc_cover_validate(g, cov), DccStatus::Domain);
        assert!(last_error().contains("non-clique"));
        dcc_cover_free(cov);
        dcc_graph_free(g);
    }
}

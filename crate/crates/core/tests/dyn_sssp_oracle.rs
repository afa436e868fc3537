mod common;

use common::*;
use dynbc::compute_extended_sssp;
use dynbc::dyn_sssp::{update_sssp, DynSssp, VisCounters, Workspace};
use dynbc::graph::connected_components;
use rand::Rng;

fn trials(directed: bool, weighted: bool, count: u64) {
    let mut ws = Workspace::new(0);
    for trial in 0..count {
        let mut rng = rng(trial * 31 + directed as u64 * 7 + weighted as u64 * 13);
        let n = rng.gen_range(5..=200);
        let p = rng.gen_range(1.0..4.0) / n as f64;
        let mut g = random_graph(&mut rng, n, p, directed, weighted);
        let size = [1, 4, 16, 64][trial as usize % 4];
        let sources: Vec<_> = (0..3).map(|_| rng.gen_range(0..n)).collect();
        let mut vis = VisCounters::new(n);
        let mut states: Vec<_> = sources
            .iter()
            .map(|&s| DynSssp::new(&g, s, !directed, Some(&mut vis)).unwrap())
            .collect();
        let before: Vec<_> = states.clone();
        let batch = random_batch(&mut rng, &g, size, true);
        let edits = g.apply_batch(&batch).unwrap();
        for (st, old) in states.iter_mut().zip(&before) {
            let aff = update_sssp(&g, st, &edits, Some(&mut vis), &mut ws).unwrap();
            let fresh = compute_extended_sssp(&g, st.source).unwrap();
            same_state(&st.dist, &st.sigma, &fresh)
                .unwrap_or_else(|e| panic!("trial {trial} source {}: {e}", st.source));
            assert!(ws.all_white(), "colors left behind in trial {trial}");
            for v in 0..n {
                if aff.nodes.binary_search(&v).is_err() {
                    assert_eq!(st.dist[v].to_bits(), old.dist[v].to_bits());
                    assert_eq!(st.sigma[v], old.sigma[v]);
                }
            }
        }
        for v in 0..n {
            let reach = states.iter().filter(|s| s.dist[v].is_finite()).count() as u32;
            assert_eq!(vis.get(v), reach, "vis[{v}] in trial {trial}");
        }
        if !directed && n <= 40 {
            let comps = connected_components(&g);
            let members = comps.members();
            for st in &mut states {
                let comp = &members[comps.label[st.source]];
                let exact = brute_vertex_diameter(&induced(&g, comp));
                let est = st.local_vd_estimate(&g).unwrap();
                assert!(est + 1e-9 >= exact as f64, "estimate {est} < VD {exact} in trial {trial}");
            }
        }
    }
}

#[test]
fn unweighted_undirected_matches_fresh_search() {
    trials(false, false, 1000);
}

#[test]
fn unweighted_directed_matches_fresh_search() {
    trials(true, false, 1000);
}

#[test]
fn weighted_undirected_matches_fresh_search() {
    trials(false, true, 1000);
}

#[test]
fn weighted_directed_matches_fresh_search() {
    trials(true, true, 1000);
}

#[test]
fn repeated_batches_stay_exact() {
    let mut ws = Workspace::new(0);
    for (directed, weighted) in [(false, false), (true, false), (false, true), (true, true)] {
        let mut rng = rng(99 + directed as u64 + 2 * weighted as u64);
        let mut g = random_graph(&mut rng, 80, 0.04, directed, weighted);
        let mut st = DynSssp::new(&g, 0, !directed, None).unwrap();
        for round in 0..200 {
            let batch = random_batch(&mut rng, &g, 1 + round % 9, round % 3 != 0);
            let edits = g.apply_batch(&batch).unwrap();
            update_sssp(&g, &mut st, &edits, None, &mut ws).unwrap();
            let fresh = compute_extended_sssp(&g, 0).unwrap();
            same_state(&st.dist, &st.sigma, &fresh).unwrap_or_else(|e| panic!("round {round}: {e}"));
        }
    }
}

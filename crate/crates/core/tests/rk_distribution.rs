//! Per-iteration distribution of the static sampler against the closed form
//! `1 / (n (n - 1) sigma_st)` for every shortest path.

use std::collections::HashMap;

use dynbc::graph::{dist_eq, DynGraph, NodeId};
use dynbc::rk::draw_sample;
use dynbc::rng::stream_rng;
use dynbc::{compute_extended_sssp, ExtendedSssp};

type Cell = (NodeId, NodeId, Vec<NodeId>);

fn enumerate(g: &DynGraph, st: &ExtendedSssp, v: NodeId, acc: &mut Vec<NodeId>, out: &mut Vec<Vec<NodeId>>) {
    if v == st.source {
        let mut p: Vec<_> = acc.iter().rev().copied().collect();
        p.pop();
        out.push(p);
        return;
    }
    for u in 0..g.n() {
        let Some(w) = g.weight(u, v) else { continue };
        if st.dist[u].is_finite() && dist_eq(st.dist[u] + w, st.dist[v]) {
            if u != st.source {
                acc.push(u);
            }
            enumerate(g, st, u, acc, out);
            if u != st.source {
                acc.pop();
            }
        }
    }
}

fn closed_form(g: &DynGraph) -> HashMap<Cell, f64> {
    let n = g.n();
    let pairs = (n * (n - 1)) as f64;
    let mut out = HashMap::new();
    for s in 0..n {
        let st = compute_extended_sssp(g, s).unwrap();
        for t in (0..n).filter(|&t| t != s) {
            if st.dist[t].is_infinite() {
                out.insert((s, t, vec![usize::MAX]), 1.0 / pairs);
                continue;
            }
            let mut paths = vec![];
            enumerate(g, &st, t, &mut vec![t], &mut paths);
            assert_eq!(paths.len() as u64, st.sigma[t], "sigma disagrees with enumeration");
            for p in paths {
                out.insert((s, t, p), 1.0 / (pairs * st.sigma[t] as f64));
            }
        }
    }
    out
}

fn check(name: &str, g: &DynGraph) {
    let expected = closed_form(g);
    let total = 1_000_000u64;
    let mut rng = stream_rng(2024, 0);
    let mut seen: HashMap<Cell, u64> = HashMap::new();
    for _ in 0..total {
        let (p, _) = draw_sample(g, &mut rng, true).unwrap();
        let key = if p.empty_marker { vec![usize::MAX] } else { p.internal };
        *seen.entry((p.s, p.t, key)).or_default() += 1;
    }
    for k in seen.keys() {
        assert!(expected.contains_key(k), "{name}: sampled a non-shortest path {k:?}");
    }
    for (k, &pi) in &expected {
        let freq = *seen.get(k).unwrap_or(&0) as f64 / total as f64;
        let se = (pi * (1.0 - pi) / total as f64).sqrt();
        assert!((freq - pi).abs() <= 3.0 * se, "{name}: {k:?} freq {freq} vs {pi} (se {se})");
    }
}

#[test]
fn diamond() {
    check("diamond", &DynGraph::from_edges(4, false, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap());
}

#[test]
fn grid_two_by_three() {
    let g = DynGraph::from_edges(6, false, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    check("grid", &g);
}

#[test]
fn weighted_ties() {
    let g = DynGraph::from_weighted_edges(
        5,
        false,
        &[(0, 1, 1.0), (1, 4, 2.0), (0, 2, 2.0), (2, 4, 1.0), (0, 3, 1.5), (3, 4, 1.5), (1, 2, 1.0)],
    )
    .unwrap();
    check("weighted", &g);
}

#[test]
fn directed_with_unreachable_pairs() {
    let g = DynGraph::from_edges(5, true, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 0)]).unwrap();
    check("directed", &g);
    let g = DynGraph::from_edges(5, true, &[(0, 1), (1, 2), (3, 4)]).unwrap();
    check("dag", &g);
}

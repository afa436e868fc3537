mod common;

use std::collections::HashMap;

use common::*;
use dynbc::graph::{generate, Batch, DynGraph, EdgeEvent, Model, NodeId};
use dynbc::{
    compute_extended_sssp, sample_size, DynamicBc, Mode, ReplacePolicy, SamplingParams,
};
use rand::Rng;

fn params(eps: f64, seed: u64) -> SamplingParams {
    SamplingParams::new(eps, 0.1, seed).unwrap()
}

fn graph_for(mode: Mode, rng: &mut dynbc::rng::StreamRng, n: usize) -> DynGraph {
    let directed = matches!(mode, Mode::Dad | Mode::Dadw) || (mode.is_incremental() && rng.gen_bool(0.5));
    random_graph(rng, n, 2.5 / n as f64, directed, mode.is_weighted())
}

fn check_invariants(bc: &DynamicBc, g: &DynGraph, ctx: &str) {
    let drift = bc.scores().max_abs_error(&bc.recount());
    assert!(drift < 1e-12, "{ctx}: score drift {drift}");
    bc.validate_paths(g).unwrap_or_else(|e| panic!("{ctx}: {e}"));
    assert!(bc.r() >= sample_size(bc.vd_bound().max(2.0), bc.params()).unwrap(), "{ctx}: r too small");
    assert_eq!(bc.samples().len(), bc.r());
    for s in bc.samples() {
        let fresh = compute_extended_sssp(g, s.state.source).unwrap();
        same_state(&s.state.dist, &s.state.sigma, &fresh).unwrap_or_else(|e| panic!("{ctx}: {e}"));
    }
    if let Some(vis) = bc.vis() {
        let states: Vec<_> = bc.samples().iter().map(|s| &s.state).chain(bc.aux_sources()).collect();
        for v in 0..g.n() {
            let reach = states.iter().filter(|s| s.dist[v].is_finite()).count() as u32;
            assert_eq!(vis.get(v), reach, "{ctx}: vis[{v}]");
            assert!(reach >= 1, "{ctx}: node {v} not covered");
        }
    }
}

#[test]
fn every_mode_keeps_its_invariants() {
    for mode in Mode::ALL {
        for policy in [ReplacePolicy::SkipUnchanged, ReplacePolicy::Always] {
            for trial in 0..6u64 {
                let mut rng = rng(trial * 101 + mode as u64);
                let n = rng.gen_range(20..=70);
                let mut g = graph_for(mode, &mut rng, n);
                let mut bc = DynamicBc::with_policy(&g, params(0.3, trial), mode, policy).unwrap();
                check_invariants(&bc, &g, &format!("{mode} init"));
                let mut last_r = bc.r();
                for round in 0..6 {
                    let size = [1, 4, 16][round % 3];
                    let batch = random_batch(&mut rng, &g, size, !mode.is_incremental());
                    bc.process_batch(&mut g, &batch).unwrap();
                    let ctx = format!("{mode} {policy:?} trial {trial} round {round}");
                    check_invariants(&bc, &g, &ctx);
                    assert!(bc.r() >= last_r, "{ctx}: r decreased");
                    last_r = bc.r();
                }
            }
        }
    }
}

#[test]
fn resampled_paths_move_exactly_one_over_r() {
    let mut g = DynGraph::from_edges(5, false, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let mut bc = DynamicBc::new(&g, params(0.1, 3), Mode::Ia).unwrap();
    let before_scores = bc.scores();
    let before: Vec<_> = bc.samples().iter().map(|s| s.path.clone()).collect();
    bc.process_batch(&mut g, &Batch::new(vec![EdgeEvent::insert(0, 4, 1.0)])).unwrap();
    let r = bc.r() as f64;
    let mut expected = before_scores.0.clone();
    let mut moved = 0;
    for (old, s) in before.iter().zip(bc.samples()) {
        if old.internal != s.path.internal {
            moved += 1;
            for &v in &old.internal {
                expected[v] -= 1.0 / r;
            }
            for &v in &s.path.internal {
                expected[v] += 1.0 / r;
            }
        }
    }
    assert!(moved > 0, "the shortcut must change some sampled path");
    for (v, e) in expected.iter().enumerate() {
        assert!((e - bc.scores()[v]).abs() < 1e-12);
    }
    // the pair (0, 4) now has no internal node
    for s in bc.samples() {
        if (s.path.s, s.path.t) == (0, 4) || (s.path.s, s.path.t) == (4, 0) {
            assert!(s.path.internal.is_empty());
        }
    }
}

/// All shortest paths from `s` to `t`, as internal-node lists.
fn all_shortest_paths(g: &DynGraph, s: NodeId, t: NodeId) -> Vec<Vec<NodeId>> {
    let st = compute_extended_sssp(g, s).unwrap();
    if st.dist[t].is_infinite() {
        return vec![];
    }
    fn walk(g: &DynGraph, st: &dynbc::ExtendedSssp, v: NodeId, suffix: &mut Vec<NodeId>, out: &mut Vec<Vec<NodeId>>) {
        if v == st.source {
            let mut p: Vec<_> = suffix.iter().rev().copied().collect();
            p.pop(); // drop t
            out.push(p);
            return;
        }
        for u in 0..g.n() {
            if let Some(w) = g.weight(u, v) {
                if st.dist[u].is_finite() && dynbc::graph::dist_eq(st.dist[u] + w, st.dist[v]) {
                    if u != st.source {
                        suffix.push(u);
                    }
                    walk(g, st, u, suffix, out);
                    if u != st.source {
                        suffix.pop();
                    }
                }
            }
        }
    }
    let mut out = vec![];
    let mut suffix = vec![t];
    walk(g, &st, t, &mut suffix, &mut out);
    out
}

/// Upper 1e-3 quantile of chi-square with `k` degrees of freedom
/// (Wilson-Hilferty).
fn chi2_critical(k: usize) -> f64 {
    let k = k as f64;
    let z = 3.090_232;
    k * (1.0 - 2.0 / (9.0 * k) + z * (2.0 / (9.0 * k)).sqrt()).powi(3)
}

/// Runs many independent single-sample approximations, applies `batch` and
/// compares the frequency of every (pair, path) with 1 / (n (n-1) sigma').
fn post_update_distribution(g0: &DynGraph, batch: &Batch, mode: Mode, policy: ReplacePolicy) {
    let n = g0.n();
    let mut g1 = g0.clone();
    g1.apply_batch(batch).unwrap();
    let mut expected: HashMap<(NodeId, NodeId, Vec<NodeId>), f64> = HashMap::new();
    let pairs = (n * (n - 1)) as f64;
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let paths = all_shortest_paths(&g1, s, t);
            if paths.is_empty() {
                expected.insert((s, t, vec![usize::MAX]), 1.0 / pairs);
            }
            let k = paths.len() as f64;
            for p in paths {
                expected.insert((s, t, p), 1.0 / (pairs * k));
            }
        }
    }
    // epsilon and delta near 1 give one or two samples per run
    let runs = 100_000;
    let mut total = 0usize;
    let mut seen: HashMap<(NodeId, NodeId, Vec<NodeId>), usize> = HashMap::new();
    for seed in 0..runs {
        let p = SamplingParams::new(0.99, 0.99, seed).unwrap();
        let mut g = g0.clone();
        let mut bc = DynamicBc::with_policy(&g, p, mode, policy).unwrap();
        assert!(bc.r() <= 2);
        bc.process_batch(&mut g, batch).unwrap();
        for sample in bc.samples() {
            let path = &sample.path;
            let key = if path.empty_marker { vec![usize::MAX] } else { path.internal.clone() };
            *seen.entry((path.s, path.t, key)).or_default() += 1;
            total += 1;
        }
    }
    for k in seen.keys() {
        assert!(expected.contains_key(k), "{mode}: sampled a path that is not shortest: {k:?}");
    }
    let stat: f64 = expected
        .iter()
        .map(|(k, p)| {
            let e = p * total as f64;
            let o = *seen.get(k).unwrap_or(&0) as f64;
            (o - e).powi(2) / e
        })
        .sum();
    let crit = chi2_critical(expected.len() - 1);
    assert!(stat < crit, "{mode}: chi-square {stat:.1} >= {crit:.1} over {} cells", expected.len());
}

#[test]
fn incremental_update_samples_uniform_new_paths() {
    // a diamond closed by the inserted edge: 0-1-3 exists, 0-2-3 appears
    let g = DynGraph::from_edges(5, false, &[(0, 1), (1, 3), (3, 4), (0, 2)]).unwrap();
    let batch = Batch::new(vec![EdgeEvent::insert(2, 3, 1.0)]);
    post_update_distribution(&g, &batch, Mode::Ia, ReplacePolicy::SkipUnchanged);
}

#[test]
fn fully_dynamic_update_samples_uniform_new_paths() {
    let g = DynGraph::from_edges(5, false, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).unwrap();
    let batch = Batch::new(vec![EdgeEvent::delete(2, 4), EdgeEvent::insert(2, 3, 1.0)]);
    post_update_distribution(&g, &batch, Mode::Da, ReplacePolicy::SkipUnchanged);
    let d = DynGraph::from_edges(5, true, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4), (4, 0)]).unwrap();
    let batch = Batch::new(vec![EdgeEvent::delete(2, 4), EdgeEvent::insert(2, 3, 1.0)]);
    post_update_distribution(&d, &batch, Mode::Dad, ReplacePolicy::SkipUnchanged);
}

#[test]
fn weighted_update_samples_uniform_new_paths() {
    let g = DynGraph::from_weighted_edges(
        5,
        false,
        &[(0, 1, 1.0), (1, 3, 2.0), (3, 4, 1.0), (0, 2, 2.0), (2, 3, 3.0)],
    )
    .unwrap();
    let batch = Batch::new(vec![EdgeEvent::set_weight(2, 3, 1.0)]);
    post_update_distribution(&g, &batch, Mode::Iaw, ReplacePolicy::SkipUnchanged);
    let batch = Batch::new(vec![EdgeEvent::set_weight(1, 3, 3.0), EdgeEvent::insert(1, 2, 1.0)]);
    post_update_distribution(&g, &batch, Mode::Daw, ReplacePolicy::Always);
}

/// K_n minus a perfect matching: every node sees its partner at distance 2
/// and everyone else at 1, so every tracked estimate is 4.
fn cocktail_party(k: usize) -> DynGraph {
    let n = 2 * k;
    let mut g = DynGraph::new(n, false, false);
    for u in 0..n {
        for v in u + 1..n {
            if v != u + 1 || u % 2 == 1 {
                g.add_edge(u, v, 1.0).unwrap();
            }
        }
    }
    g
}

#[test]
fn combined_equals_incremental_on_pure_insertions() {
    let g0 = cocktail_party(10);
    for seed in 0..5 {
        let mut ga = g0.clone();
        let mut gb = g0.clone();
        let mut ia = DynamicBc::new(&ga, params(0.1, seed), Mode::Ia).unwrap();
        let mut da = DynamicBc::new(&gb, params(0.1, seed), Mode::Da).unwrap();
        assert_eq!(ia.scores(), da.scores());
        assert_eq!(da.aux_count(), 0, "connected graph needs no extra sources");
        for pair in [(0, 1), (4, 5), (10, 11)] {
            let batch = Batch::new(vec![EdgeEvent::insert(pair.0, pair.1, 1.0)]);
            ia.process_batch(&mut ga, &batch).unwrap();
            da.process_batch(&mut gb, &batch).unwrap();
            assert_eq!(da.vd_bound(), 4.0);
            assert_eq!((ia.r(), ia.scores()), (da.r(), da.scores()));
        }
    }
}

#[test]
fn forced_replacement_agrees_between_combined_and_fully_dynamic() {
    let g0 = cocktail_party(8);
    let mut ga = g0.clone();
    let mut gb = g0.clone();
    let mut dad = DynamicBc::with_policy(&ga, params(0.1, 9), Mode::Dad, ReplacePolicy::Always).unwrap();
    let mut da = DynamicBc::with_policy(&gb, params(0.1, 9), Mode::Da, ReplacePolicy::Always).unwrap();
    for batch in [
        Batch::new(vec![EdgeEvent::insert(0, 1, 1.0)]),
        Batch::new(vec![EdgeEvent::delete(0, 2), EdgeEvent::delete(3, 5)]),
    ] {
        let a = dad.process_batch(&mut ga, &batch).unwrap();
        let b = da.process_batch(&mut gb, &batch).unwrap();
        assert_eq!(a.resampled, dad.r());
        assert_eq!(b.resampled, da.r());
    }
    assert_eq!(dad.r(), da.r());
    assert_eq!(dad.scores(), da.scores());
}

#[test]
fn growing_bound_rescales_existing_scores() {
    // part A: path 0->1->2; part B: path 3->4->5->6, extended to 3..=12
    let mut g = DynGraph::from_edges(13, true, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)]).unwrap();
    let mut bc = DynamicBc::new(&g, params(0.1, 21), Mode::Dad).unwrap();
    assert_eq!((bc.vd_bound(), bc.r()), (4.0, 216));
    let before = bc.scores()[1];
    let batch: Batch = (6..12).map(|u| EdgeEvent::insert(u, u + 1, 1.0)).collect();
    let summary = bc.process_batch(&mut g, &batch).unwrap();
    assert_eq!((summary.r_before, summary.r_after, summary.vd_bound), (216, 316, 10.0));
    let fresh_hits = bc.samples()[216..].iter().filter(|s| (s.path.s, s.path.t) == (0, 2)).count();
    let expected = before * 216.0 / 316.0 + fresh_hits as f64 / 316.0;
    assert!((bc.scores()[1] - expected).abs() < 1e-12);
    assert!(bc.scores().max_abs_error(&bc.recount()) < 1e-12);
}

#[test]
fn severed_pairs_become_empty_and_recover() {
    let mut g = DynGraph::from_edges(4, false, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let mut bc = DynamicBc::new(&g, params(0.1, 4), Mode::Dad).unwrap();
    bc.process_batch(&mut g, &Batch::new(vec![EdgeEvent::delete(1, 2)])).unwrap();
    let across = |s: usize, t: usize| (s < 2) != (t < 2);
    for s in bc.samples() {
        assert_eq!(s.path.empty_marker, across(s.path.s, s.path.t));
    }
    assert!(bc.scores()[1].abs() < 1e-12);
    assert!(bc.scores()[2].abs() < 1e-12);
    bc.process_batch(&mut g, &Batch::new(vec![EdgeEvent::insert(1, 2, 1.0)])).unwrap();
    assert!(bc.samples().iter().all(|s| !s.path.empty_marker));
    assert!(bc.scores()[1] > 0.0);
    bc.validate_paths(&g).unwrap();
}

#[test]
fn split_off_unsampled_component_gets_an_extra_source() {
    let mut base = generate(&Model::DorogovtsevMendes { n: 200 }, false, 1).unwrap();
    let mut g = DynGraph::new(201, false, false);
    for (u, v, _) in base.edges() {
        g.add_edge(u, v, 1.0).unwrap();
    }
    g.add_edge(0, 200, 1.0).unwrap();
    base = g;
    let seed = (0..200)
        .find(|&seed| {
            let bc = DynamicBc::new(&base, params(0.1, seed), Mode::Da).unwrap();
            bc.samples().iter().all(|s| s.state.source != 200)
        })
        .expect("some seed never samples node 200 as a source");
    let mut g = base.clone();
    let mut bc = DynamicBc::new(&g, params(0.1, seed), Mode::Da).unwrap();
    assert_eq!(bc.aux_count(), 0);
    let summary = bc.process_batch(&mut g, &Batch::new(vec![EdgeEvent::delete(0, 200)])).unwrap();
    assert_eq!(summary.new_aux_sources, 1);
    assert_eq!(bc.aux_sources()[0].source, 200);
}

#![allow(dead_code)]

use dynbc::graph::{dist_eq, Batch, DynGraph, EdgeEvent, NodeId};
use dynbc::rng::{stream_rng, StreamRng};
use dynbc::ExtendedSssp;
use rand::Rng;

pub fn rng(seed: u64) -> StreamRng {
    stream_rng(seed, 7)
}

pub fn weight(rng: &mut StreamRng) -> f64 {
    // small integer weights give plenty of equal-length paths
    rng.gen_range(1..=4) as f64
}

pub fn random_graph(rng: &mut StreamRng, n: usize, p: f64, directed: bool, weighted: bool) -> DynGraph {
    let mut g = DynGraph::new(n, directed, weighted);
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.gen_bool(p.min(1.0)) {
                let w = if weighted { weight(rng) } else { 1.0 };
                g.add_edge(u, v, w).unwrap();
            }
        }
    }
    g
}

/// A batch of `size` events on distinct node pairs, valid against `g`.
pub fn random_batch(
    rng: &mut StreamRng,
    g: &DynGraph,
    size: usize,
    deletions: bool,
) -> Batch {
    let n = g.n();
    let mut used = std::collections::HashSet::new();
    let mut events = Vec::new();
    let edges: Vec<_> = g.edges().collect();
    let mut attempts = 0;
    while events.len() < size && attempts < 50 * size {
        attempts += 1;
        let kind = rng.gen_range(0..3);
        if kind == 0 && !edges.is_empty() {
            let (u, v, w) = edges[rng.gen_range(0..edges.len())];
            if !used.insert(g.pair_key(u, v)) {
                continue;
            }
            if g.is_weighted() {
                let nw = if deletions { weight(rng) } else { (w - 1.0).max(0.5) };
                events.push(EdgeEvent::set_weight(u, v, nw));
            } else if deletions {
                events.push(EdgeEvent::delete(u, v));
            } else {
                used.remove(&g.pair_key(u, v));
            }
        } else if kind == 1 && deletions && !edges.is_empty() {
            let (u, v, _) = edges[rng.gen_range(0..edges.len())];
            if used.insert(g.pair_key(u, v)) {
                events.push(EdgeEvent::delete(u, v));
            }
        } else {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || g.has_edge(u, v) || !used.insert(g.pair_key(u, v)) {
                continue;
            }
            let w = if g.is_weighted() { weight(rng) } else { 1.0 };
            events.push(EdgeEvent::insert(u, v, w));
        }
    }
    Batch::new(events)
}

pub fn same_state(a_dist: &[f64], a_sigma: &[u64], fresh: &ExtendedSssp) -> Result<(), String> {
    for v in 0..a_dist.len() {
        if !dist_eq(a_dist[v], fresh.dist[v]) {
            return Err(format!("dist[{v}] = {} but fresh gives {}", a_dist[v], fresh.dist[v]));
        }
        if a_sigma[v] != fresh.sigma[v] {
            return Err(format!("sigma[{v}] = {} but fresh gives {}", a_sigma[v], fresh.sigma[v]));
        }
    }
    Ok(())
}

/// Induced subgraph on `nodes` (relabelled in the given order).
pub fn induced(g: &DynGraph, nodes: &[NodeId]) -> DynGraph {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in nodes.iter().enumerate() {
        index[v] = i;
    }
    let mut h = DynGraph::new(nodes.len(), g.is_directed(), g.is_weighted());
    for (u, v, w) in g.edges() {
        if index[u] != usize::MAX && index[v] != usize::MAX {
            h.add_edge(index[u], index[v], w).unwrap();
        }
    }
    h
}

/// Longest shortest path, in nodes, by enumerating every pair and walking
/// all shortest-path predecessors (independent of the library routine).
pub fn brute_vertex_diameter(g: &DynGraph) -> usize {
    let n = g.n();
    let mut best = 1;
    for s in 0..n {
        let st = dynbc::compute_extended_sssp(g, s).unwrap();
        // hops[v]: most nodes on any shortest s-v path, by memoized recursion
        let mut hops = vec![0usize; n];
        let mut order: Vec<NodeId> = (0..n).filter(|&v| st.dist[v].is_finite()).collect();
        order.sort_by(|&a, &b| st.dist[a].total_cmp(&st.dist[b]));
        for &v in &order {
            hops[v] = 1;
            for u in 0..n {
                if let Some(w) = g.weight(u, v) {
                    if st.dist[u].is_finite() && dist_eq(st.dist[u] + w, st.dist[v]) {
                        hops[v] = hops[v].max(hops[u] + 1);
                    }
                }
            }
            best = best.max(hops[v]);
        }
    }
    best
}

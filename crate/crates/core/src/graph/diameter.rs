use super::search::distances;
use super::{dist_eq, DynGraph, NodeId};

/// Number of nodes on the longest shortest path, by all-pairs search.
///
/// Among equal-length (within tolerance) shortest paths the one with most
/// nodes counts. Quadratic or worse; meant for test-scale graphs. A graph
/// without edges has vertex diameter 1.
pub fn exact_vertex_diameter(g: &DynGraph) -> usize {
    let mut best = 1;
    let mut order: Vec<NodeId> = Vec::with_capacity(g.n());
    let mut hops = vec![0usize; g.n()];
    for s in 0..g.n() {
        let dist = distances(g, s);
        order.clear();
        order.extend((0..g.n()).filter(|&v| dist[v].is_finite()));
        order.sort_by(|&a, &b| dist[a].total_cmp(&dist[b]));
        for &v in &order {
            hops[v] = 0;
            if v == s {
                continue;
            }
            for &(u, w) in g.in_edges(v) {
                if dist[u].is_finite() && dist_eq(dist[u] + w, dist[v]) {
                    hops[v] = hops[v].max(hops[u] + 1);
                }
            }
            best = best.max(hops[v] + 1);
        }
    }
    best
}

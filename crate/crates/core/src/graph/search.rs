use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use super::{DynGraph, NodeId};

/// Min-heap entry keyed by distance, ties broken by node index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct MinEntry(pub f64, pub NodeId);

impl Eq for MinEntry {}

impl Ord for MinEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for MinEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Plain distances from `s` (BFS or Dijkstra), following edges backwards when
/// `reverse` is set and never leaving the nodes accepted by `allowed`.
pub(crate) fn distances_within(
    g: &DynGraph,
    s: NodeId,
    reverse: bool,
    allowed: impl Fn(NodeId) -> bool,
) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; g.n()];
    dist[s] = 0.0;
    let edges = |u: NodeId| if reverse { g.in_edges(u) } else { g.out_edges(u) };
    if !g.is_weighted() {
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in edges(u) {
                if dist[v].is_infinite() && allowed(v) {
                    dist[v] = dist[u] + 1.0;
                    queue.push_back(v);
                }
            }
        }
    } else {
        let mut heap = BinaryHeap::from([MinEntry(0.0, s)]);
        while let Some(MinEntry(d, u)) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &(v, w) in edges(u) {
                let nd = d + w;
                if nd < dist[v] && allowed(v) {
                    dist[v] = nd;
                    heap.push(MinEntry(nd, v));
                }
            }
        }
    }
    dist
}

pub(crate) fn distances(g: &DynGraph, s: NodeId) -> Vec<f64> {
    distances_within(g, s, false, |_| true)
}

//! Shortest-path counting and exact betweenness (Brandes).

use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::search::MinEntry;
use crate::graph::{dist_eq, dist_lt, DynGraph, NodeId};

/// Read access to a single-source shortest-path state: distances and
/// shortest-path counts from one source.
pub trait ShortestPaths {
    fn source(&self) -> NodeId;
    fn dist(&self) -> &[f64];
    fn sigma(&self) -> &[u64];
}

/// Distances and shortest-path counts from one source.
///
/// `dist[v]` is `f64::INFINITY` and `sigma[v]` is 0 for unreachable nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedSssp {
    pub source: NodeId,
    pub dist: Vec<f64>,
    pub sigma: Vec<u64>,
}

impl ShortestPaths for ExtendedSssp {
    fn source(&self) -> NodeId {
        self.source
    }
    fn dist(&self) -> &[f64] {
        &self.dist
    }
    fn sigma(&self) -> &[u64] {
        &self.sigma
    }
}

pub fn compute_extended_sssp(g: &DynGraph, s: NodeId) -> Result<ExtendedSssp> {
    compute_extended_sssp_until(g, s, None)
}

/// Like [`compute_extended_sssp`] but stops as soon as `target` is settled.
/// Distances and counts are final for `target` and every node settled before
/// it, which covers all shortest paths ending in `target`.
pub fn compute_extended_sssp_until(
    g: &DynGraph,
    s: NodeId,
    target: Option<NodeId>,
) -> Result<ExtendedSssp> {
    let mut out = ExtendedSssp {
        source: s,
        dist: vec![f64::INFINITY; g.n()],
        sigma: vec![0; g.n()],
    };
    if s >= g.n() {
        return Err(Error::InvalidNode { node: s, n: g.n() });
    }
    search(g, s, target, &mut out.dist, &mut out.sigma, |_| {})?;
    Ok(out)
}

/// BFS or Dijkstra with path counting. `on_settle` sees nodes in the order
/// they are settled (non-decreasing distance).
fn search(
    g: &DynGraph,
    s: NodeId,
    target: Option<NodeId>,
    dist: &mut [f64],
    sigma: &mut [u64],
    mut on_settle: impl FnMut(NodeId),
) -> Result<()> {
    dist[s] = 0.0;
    sigma[s] = 1;
    if !g.is_weighted() {
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            on_settle(u);
            if Some(u) == target {
                break;
            }
            let du = dist[u];
            for &(v, _) in g.out_edges(u) {
                if dist[v].is_infinite() {
                    dist[v] = du + 1.0;
                    queue.push_back(v);
                }
                if dist[v] == du + 1.0 {
                    sigma[v] = sigma[v].checked_add(sigma[u]).ok_or(Error::SigmaOverflow(v))?;
                }
            }
        }
    } else {
        let mut done = vec![false; g.n()];
        let mut heap = BinaryHeap::from([MinEntry(0.0, s)]);
        while let Some(MinEntry(d, u)) = heap.pop() {
            if done[u] || d > dist[u] {
                continue;
            }
            done[u] = true;
            on_settle(u);
            if Some(u) == target {
                break;
            }
            for &(v, w) in g.out_edges(u) {
                if done[v] {
                    continue;
                }
                let nd = d + w;
                if dist_lt(nd, dist[v]) {
                    dist[v] = nd;
                    sigma[v] = sigma[u];
                    heap.push(MinEntry(nd, v));
                } else if dist_eq(nd, dist[v]) {
                    sigma[v] = sigma[v].checked_add(sigma[u]).ok_or(Error::SigmaOverflow(v))?;
                }
            }
        }
    }
    Ok(())
}

/// Neighbors `u` of `v` with `d(u) + w(u, v) = d(v)`, computed from the
/// adjacency on demand.
pub fn predecessors(
    g: &DynGraph,
    state: &impl ShortestPaths,
    v: NodeId,
) -> Result<Vec<NodeId>> {
    let dist = state.dist();
    if dist[v].is_infinite() {
        return Err(Error::Unreachable(v));
    }
    if v == state.source() {
        return Ok(Vec::new());
    }
    Ok(g.in_edges(v)
        .iter()
        .filter(|&&(u, w)| dist[u].is_finite() && dist_eq(dist[u] + w, dist[v]))
        .map(|&(u, _)| u)
        .collect())
}

/// Normalized betweenness scores, one per node.
#[derive(Debug, Clone, PartialEq)]
pub struct BcScores(pub Vec<f64>);

impl BcScores {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn max_abs_error(&self, other: &BcScores) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn mean_abs_error(&self, other: &BcScores) -> f64 {
        if self.0.is_empty() {
            return 0.0;
        }
        let total: f64 = self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).sum();
        total / self.0.len() as f64
    }
}

impl std::ops::Index<NodeId> for BcScores {
    type Output = f64;
    fn index(&self, v: NodeId) -> &f64 {
        &self.0[v]
    }
}

/// Exact betweenness normalized by `n(n-1)`, so every ordered pair of
/// distinct nodes counts once (undirected pairs are counted in both orders).
pub fn brandes_exact(g: &DynGraph) -> Result<BcScores> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParams("betweenness needs at least two nodes".into()));
    }
    let mut bc = vec![0.0; n];
    let mut dist = vec![f64::INFINITY; n];
    let mut sigma = vec![0u64; n];
    let mut delta = vec![0.0; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        order.clear();
        search(g, s, None, &mut dist, &mut sigma, |v| order.push(v))?;
        for &w in order.iter().rev() {
            let coeff = (1.0 + delta[w]) / sigma[w] as f64;
            for &(v, wt) in g.in_edges(w) {
                if dist[v].is_finite() && dist_eq(dist[v] + wt, dist[w]) {
                    delta[v] += sigma[v] as f64 * coeff;
                }
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
        for &v in &order {
            dist[v] = f64::INFINITY;
            sigma[v] = 0;
            delta[v] = 0.0;
        }
    }
    let norm = 1.0 / (n as f64 * (n - 1) as f64);
    Ok(BcScores(bc.into_iter().map(|x| x * norm).collect()))
}

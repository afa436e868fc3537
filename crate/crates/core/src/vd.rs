//! Linear-time upper bounds on the vertex diameter (the number of nodes on
//! the longest shortest path).

use std::collections::{BinaryHeap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::compute_extended_sssp;
use crate::graph::search::MinEntry;
use crate::graph::{
    dist_eq, strongly_connected_components, weakly_connected_components, DynGraph, NodeId,
};
use crate::rng::{stream_rng, uniform_index};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundClass {
    /// Undirected, unweighted.
    UU,
    /// Strongly connected, unweighted.
    SC,
    /// Directed, unweighted.
    DIR,
    /// Undirected, weighted.
    W,
    /// Directed, weighted.
    SCW,
}

impl fmt::Display for BoundClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VdBound {
    pub value: f64,
    pub class: BoundClass,
}

impl VdBound {
    /// The bound rounded up to a whole node count.
    pub fn ceil(&self) -> usize {
        (self.value - 1e-9).ceil().max(1.0) as usize
    }
}

/// Picks the bound matching the graph type.
pub fn vd_upper_bound(g: &DynGraph) -> VdBound {
    match (g.is_directed(), g.is_weighted()) {
        (false, false) => vd_ub_unweighted_undirected(g),
        (false, true) => vd_ub_weighted_undirected(g),
        (true, false) => vd_ub_directed(g),
        (true, true) => vd_ub_directed_weighted(g),
    }
}

/// Reusable single-source search over a subset of nodes, recording the
/// nodes it reached so the buffer can be reset cheaply.
struct Scratch {
    dist: Vec<f64>,
    reached: Vec<NodeId>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { dist: vec![f64::INFINITY; n], reached: Vec::new() }
    }

    /// Searches from `s` over nodes with `allowed(v)`; leaves distances in
    /// `self.dist` for the nodes in `self.reached`.
    fn run(&mut self, g: &DynGraph, s: NodeId, reverse: bool, allowed: impl Fn(NodeId) -> bool) {
        for &v in &self.reached {
            self.dist[v] = f64::INFINITY;
        }
        self.reached.clear();
        let dist = &mut self.dist;
        let edges = |u: NodeId| if reverse { g.in_edges(u) } else { g.out_edges(u) };
        dist[s] = 0.0;
        self.reached.push(s);
        if !g.is_weighted() {
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in edges(u) {
                    if dist[v].is_infinite() && allowed(v) {
                        dist[v] = dist[u] + 1.0;
                        self.reached.push(v);
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
                        if dist[v].is_infinite() {
                            self.reached.push(v);
                        }
                        dist[v] = nd;
                        heap.push(MinEntry(nd, v));
                    }
                }
            }
        }
    }

    /// Largest and second-largest distance over distinct reached nodes.
    fn top_two(&self) -> (f64, f64) {
        let (mut d1, mut d2) = (0.0f64, 0.0f64);
        for &v in &self.reached {
            let d = self.dist[v];
            if d > d1 {
                d2 = d1;
                d1 = d;
            } else if d > d2 {
                d2 = d;
            }
        }
        (d1, d2)
    }

    fn max(&self) -> f64 {
        self.reached.iter().map(|&v| self.dist[v]).fold(0.0, f64::max)
    }
}

/// Per component: one BFS from the lowest-index node, then 1 plus the two
/// largest distances to distinct nodes. Maximum over components.
pub fn vd_ub_unweighted_undirected(g: &DynGraph) -> VdBound {
    VdBound { value: undirected_bound(g, false), class: BoundClass::UU }
}

/// Per component: `1 + (d(s,u) + d(s,v)) / w_min` for the two farthest nodes
/// `u != v` from `s` and the smallest edge weight in the component.
pub fn vd_ub_weighted_undirected(g: &DynGraph) -> VdBound {
    VdBound { value: undirected_bound(g, true), class: BoundClass::W }
}

fn undirected_bound(g: &DynGraph, weighted: bool) -> f64 {
    debug_assert!(!g.is_directed());
    let comps = weakly_connected_components(g);
    let mut omega = vec![f64::INFINITY; comps.count];
    if weighted {
        for (u, _, w) in g.edges() {
            let c = comps.label[u];
            omega[c] = omega[c].min(w);
        }
    }
    let mut seen = vec![false; comps.count];
    let mut scratch = Scratch::new(g.n());
    let mut best = 1.0f64;
    for s in 0..g.n() {
        let c = comps.label[s];
        if seen[c] {
            continue;
        }
        seen[c] = true;
        scratch.run(g, s, false, |_| true);
        let (d1, d2) = scratch.top_two();
        let scale = if weighted && omega[c].is_finite() { omega[c] } else { 1.0 };
        best = best.max(1.0 + (d1 + d2) / scale);
    }
    best
}

/// `max_u d(s,u) + max_v d(v,s) + 1` on a strongly connected directed graph.
/// Weighted graphs divide the distance sum by the minimum edge weight.
pub fn vd_ub_strongly_connected(g: &DynGraph, s: NodeId) -> Result<VdBound> {
    if !g.is_directed() {
        return Err(Error::InvalidParams("strongly connected bound needs a directed graph".into()));
    }
    if s >= g.n() {
        return Err(Error::InvalidNode { node: s, n: g.n() });
    }
    let mut scratch = Scratch::new(g.n());
    scratch.run(g, s, false, |_| true);
    if scratch.reached.len() != g.n() {
        return Err(Error::NotStronglyConnected);
    }
    let fwd = scratch.max();
    scratch.run(g, s, true, |_| true);
    if scratch.reached.len() != g.n() {
        return Err(Error::NotStronglyConnected);
    }
    let bwd = scratch.max();
    Ok(if g.is_weighted() {
        let omega = g.min_weight().unwrap_or(1.0);
        VdBound { value: 1.0 + (fwd + bwd) / omega, class: BoundClass::SCW }
    } else {
        VdBound { value: fwd + bwd + 1.0, class: BoundClass::SC }
    })
}

/// Strongly connected bounds per SCC, searches truncated at SCC boundaries,
/// summed along the heaviest path of the condensation DAG.
pub fn vd_ub_directed(g: &DynGraph) -> VdBound {
    VdBound { value: directed_bound(g), class: BoundClass::DIR }
}

/// As [`vd_ub_directed`] with per-SCC weighted bounds
/// `1 + (d(s,u) + d(v,s)) / w_C`, `w_C` the smallest weight inside the SCC.
pub fn vd_ub_directed_weighted(g: &DynGraph) -> VdBound {
    VdBound { value: directed_bound(g), class: BoundClass::SCW }
}

fn directed_bound(g: &DynGraph) -> f64 {
    debug_assert!(g.is_directed());
    let cond = strongly_connected_components(g);
    let label = &cond.components.label;
    let count = cond.components.count;
    let mut omega = vec![f64::INFINITY; count];
    for (u, v, w) in g.edges() {
        if label[u] == label[v] {
            omega[label[u]] = omega[label[u]].min(w);
        }
    }
    let mut root = vec![usize::MAX; count];
    for v in 0..g.n() {
        if root[label[v]] == usize::MAX {
            root[label[v]] = v;
        }
    }
    let mut scratch = Scratch::new(g.n());
    let mut acc = vec![0.0f64; count];
    let mut best = 1.0f64;
    // ascending ids are a reverse topological order
    for c in 0..count {
        let local = if omega[c].is_infinite() {
            1.0
        } else {
            let s = root[c];
            scratch.run(g, s, false, |v| label[v] == c);
            let fwd = scratch.max();
            scratch.run(g, s, true, |v| label[v] == c);
            let bwd = scratch.max();
            if g.is_weighted() {
                1.0 + (fwd + bwd) / omega[c]
            } else {
                fwd + bwd + 1.0
            }
        };
        let downstream = cond.dag[c].iter().map(|&d| acc[d]).fold(0.0, f64::max);
        acc[c] = downstream + local;
        best = best.max(acc[c]);
    }
    best
}

/// Lower bound from `samples` uniformly drawn sources: the largest node count
/// of any shortest path leaving one of them.
pub fn vd_lower_bound_sampled(g: &DynGraph, samples: usize, seed: u64) -> Result<usize> {
    let mut rng = stream_rng(seed, 0);
    let mut best = usize::from(g.n() > 0);
    for _ in 0..samples.min(g.n()) {
        let s = uniform_index(&mut rng, g.n());
        let st = compute_extended_sssp(g, s)?;
        let mut order: Vec<NodeId> = (0..g.n()).filter(|&v| st.dist[v].is_finite()).collect();
        order.sort_by(|&a, &b| st.dist[a].total_cmp(&st.dist[b]));
        // most nodes on a shortest path from s, per node
        let mut nodes = vec![0usize; g.n()];
        nodes[s] = 1;
        for &v in &order {
            for &(z, w) in g.in_edges(v) {
                if nodes[z] > 0 && dist_eq(st.dist[z] + w, st.dist[v]) {
                    nodes[v] = nodes[v].max(nodes[z] + 1);
                }
            }
            best = best.max(nodes[v]);
        }
    }
    Ok(best)
}

/// Number of nodes in the largest weakly connected component, which no
/// simple path can exceed.
pub fn vd_ub_component_size(g: &DynGraph) -> usize {
    weakly_connected_components(g).largest()
}

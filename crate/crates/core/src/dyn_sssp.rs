//! Batch-dynamic single-source shortest paths with path counts.
//!
//! After the graph has been mutated, the affected nodes are reprocessed in
//! order of candidate distance. A node whose candidate is confirmed by its
//! in-neighbors gets its final distance and count; otherwise its old distance
//! is discarded, its dependent successors are queued and the node is queued
//! again at its best remaining candidate. Unweighted graphs use one queue per
//! distance level instead of a heap.

use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::exact::{compute_extended_sssp, ExtendedSssp, ShortestPaths};
use crate::graph::search::MinEntry;
use crate::graph::{dist_eq, AppliedEdit, DynGraph, EdgeChange, NodeId};

/// Vertex-diameter bookkeeping of one source: the two largest distances seen
/// (to distinct nodes) and the smallest edge weight of the component.
///
/// Both distance maxima only grow, so after distances shrink or nodes leave
/// the component the estimate stays an upper bound.
#[derive(Debug, Clone, PartialEq)]
struct VdTrack {
    d1: f64,
    node1: NodeId,
    d2: f64,
    omega_min: f64,
    omega_stale: bool,
}

impl VdTrack {
    fn record(&mut self, w: NodeId, x: f64) {
        if w == self.node1 {
            self.d1 = self.d1.max(x);
        } else if x > self.d1 {
            self.d2 = self.d1;
            self.d1 = x;
            self.node1 = w;
        } else {
            self.d2 = self.d2.max(x);
        }
    }
}

/// A shortest-path state that can be updated in place after edge batches.
#[derive(Debug, Clone, PartialEq)]
pub struct DynSssp {
    pub source: NodeId,
    pub dist: Vec<f64>,
    pub sigma: Vec<u64>,
    track: Option<VdTrack>,
}

impl ShortestPaths for DynSssp {
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

impl DynSssp {
    /// Fresh state from `s`; reached nodes are counted in `vis` when given.
    pub fn new(
        g: &DynGraph,
        s: NodeId,
        track_vd: bool,
        vis: Option<&mut VisCounters>,
    ) -> Result<Self> {
        Ok(Self::from_extended(g, compute_extended_sssp(g, s)?, track_vd, vis))
    }

    pub fn from_extended(
        g: &DynGraph,
        st: ExtendedSssp,
        track_vd: bool,
        vis: Option<&mut VisCounters>,
    ) -> Self {
        let mut state = DynSssp { source: st.source, dist: st.dist, sigma: st.sigma, track: None };
        if track_vd {
            let mut track = VdTrack {
                d1: 0.0,
                node1: state.source,
                d2: 0.0,
                omega_min: 1.0,
                omega_stale: false,
            };
            for v in state.reachable() {
                if v != state.source {
                    track.record(v, state.dist[v]);
                }
            }
            track.omega_min = state.scan_omega(g);
            state.track = Some(track);
        }
        if let Some(vis) = vis {
            for v in 0..state.dist.len() {
                if state.dist[v].is_finite() {
                    vis.inc(v);
                }
            }
        }
        state
    }

    pub fn tracks_vd(&self) -> bool {
        self.track.is_some()
    }

    pub fn reachable(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.dist.len()).filter(|&v| self.dist[v].is_finite())
    }

    pub fn into_extended(self) -> ExtendedSssp {
        ExtendedSssp { source: self.source, dist: self.dist, sigma: self.sigma }
    }

    /// `(d1, d2, omega_min)` when vertex-diameter tracking is on.
    pub fn vd_fields(&self) -> Option<(f64, f64, f64)> {
        self.track.as_ref().map(|t| (t.d1, t.d2, t.omega_min))
    }

    fn scan_omega(&self, g: &DynGraph) -> f64 {
        if !g.is_weighted() {
            return 1.0;
        }
        let mut omega = f64::INFINITY;
        for u in self.reachable() {
            for &(_, w) in g.out_edges(u) {
                omega = omega.min(w);
            }
        }
        if omega.is_finite() {
            omega
        } else {
            1.0
        }
    }

    /// Recomputes the component's minimum weight if an edge at the minimum
    /// was deleted or made heavier.
    pub fn refresh_omega(&mut self, g: &DynGraph) {
        let omega = match &self.track {
            Some(t) if t.omega_stale => self.scan_omega(g),
            _ => return,
        };
        let t = self.track.as_mut().expect("checked above");
        t.omega_min = omega;
        t.omega_stale = false;
    }

    /// `1 + (d1 + d2) / omega_min`, an upper bound on the vertex diameter of
    /// the source's component. A singleton component gives 1.
    pub fn local_vd_estimate(&mut self, g: &DynGraph) -> Result<f64> {
        self.refresh_omega(g);
        let t = self.track.as_ref().ok_or_else(|| {
            Error::InvalidParams("vertex-diameter tracking is off for this state".into())
        })?;
        Ok(1.0 + (t.d1 + t.d2) / t.omega_min)
    }
}

/// Per-node count of maintained sources that reach the node, plus the nodes
/// that dropped to zero during the current round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisCounters {
    counts: Vec<u32>,
    unvisited: Vec<NodeId>,
    over: Vec<NodeId>,
}

impl VisCounters {
    pub fn new(n: usize) -> Self {
        VisCounters { counts: vec![0; n], unvisited: Vec::new(), over: Vec::new() }
    }

    pub fn get(&self, v: NodeId) -> u32 {
        self.counts[v]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn inc(&mut self, v: NodeId) {
        self.counts[v] += 1;
        if self.counts[v] == 2 {
            self.over.push(v);
        }
    }

    pub fn dec(&mut self, v: NodeId) {
        debug_assert!(self.counts[v] > 0, "vis underflow at {v}");
        self.counts[v] = self.counts[v].saturating_sub(1);
        if self.counts[v] == 0 {
            self.unvisited.push(v);
        }
    }

    /// Nodes queued as unvisited this round, ascending, without duplicates.
    /// Membership is provisional: callers re-check the count.
    pub fn take_unvisited(&mut self) -> Vec<NodeId> {
        let mut out = std::mem::take(&mut self.unvisited);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Forgets which nodes went above 1, for callers that keep true counts.
    pub fn clear_over(&mut self) {
        self.over.clear();
    }

    /// Lowers every count above 1 back to 1.
    pub fn reset_over(&mut self) {
        for v in std::mem::take(&mut self.over) {
            if self.counts[v] > 1 {
                self.counts[v] = 1;
            }
        }
    }
}

/// Nodes whose distance or path count changed in one update.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AffectedSet {
    pub nodes: Vec<NodeId>,
    pub touched_edges: usize,
}

impl AffectedSet {
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Scratch buffers shared by every update on graphs with `n` nodes.
#[derive(Debug, Clone)]
pub struct Workspace {
    prio: Vec<f64>,
    black: Vec<bool>,
    seen: Vec<bool>,
    saved: Vec<(NodeId, f64, u64)>,
    heap: BinaryHeap<MinEntry>,
    levels: Vec<Vec<NodeId>>,
    level: usize,
    queued: usize,
}

impl Workspace {
    pub fn new(n: usize) -> Self {
        Workspace {
            prio: vec![f64::INFINITY; n],
            black: vec![false; n],
            seen: vec![false; n],
            saved: Vec::new(),
            heap: BinaryHeap::new(),
            levels: Vec::new(),
            level: usize::MAX,
            queued: 0,
        }
    }

    /// True when no node is left colored from a previous update.
    pub fn all_white(&self) -> bool {
        !self.black.iter().any(|&b| b)
    }

    fn ensure(&mut self, n: usize) {
        if self.prio.len() < n {
            self.prio.resize(n, f64::INFINITY);
            self.black.resize(n, false);
            self.seen.resize(n, false);
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum QueueKind {
    Heap,
    Levels,
}

impl QueueKind {
    /// Insert, or lower the key of a queued node.
    fn push(self, ws: &mut Workspace, w: NodeId, key: f64) {
        if key >= ws.prio[w] {
            return;
        }
        ws.prio[w] = key;
        match self {
            QueueKind::Heap => ws.heap.push(MinEntry(key, w)),
            QueueKind::Levels => {
                let k = key as usize;
                if ws.levels.len() <= k {
                    ws.levels.resize_with(k + 1, Vec::new);
                }
                ws.levels[k].push(w);
                ws.queued += 1;
                ws.level = ws.level.min(k);
            }
        }
    }

    fn pop(self, ws: &mut Workspace) -> Option<(f64, NodeId)> {
        loop {
            let (key, w) = match self {
                QueueKind::Heap => {
                    let MinEntry(key, w) = ws.heap.pop()?;
                    (key, w)
                }
                QueueKind::Levels => {
                    if ws.queued == 0 {
                        ws.level = usize::MAX;
                        return None;
                    }
                    while ws.levels[ws.level].is_empty() {
                        ws.level += 1;
                    }
                    ws.queued -= 1;
                    let w = ws.levels[ws.level].pop().expect("level is non-empty");
                    (ws.level as f64, w)
                }
            };
            if ws.prio[w] == key {
                ws.prio[w] = f64::INFINITY;
                return Some((key, w));
            }
        }
    }
}

/// Updates `state` after `edits` were applied to `g`, choosing the level
/// queue for unweighted graphs and the heap otherwise.
pub fn update_sssp(
    g: &DynGraph,
    state: &mut DynSssp,
    edits: &[AppliedEdit],
    vis: Option<&mut VisCounters>,
    ws: &mut Workspace,
) -> Result<AffectedSet> {
    if g.is_weighted() {
        update_sssp_w(g, state, edits, vis, ws)
    } else {
        update_sssp_u(g, state, edits, vis, ws)
    }
}

/// Heap-based update for weighted graphs.
pub fn update_sssp_w(
    g: &DynGraph,
    state: &mut DynSssp,
    edits: &[AppliedEdit],
    vis: Option<&mut VisCounters>,
    ws: &mut Workspace,
) -> Result<AffectedSet> {
    run_update(g, state, edits, vis, ws, QueueKind::Heap)
}

/// Level-queue update for unweighted graphs.
pub fn update_sssp_u(
    g: &DynGraph,
    state: &mut DynSssp,
    edits: &[AppliedEdit],
    vis: Option<&mut VisCounters>,
    ws: &mut Workspace,
) -> Result<AffectedSet> {
    if g.is_weighted() {
        return Err(Error::InvalidParams("level-queue update needs an unweighted graph".into()));
    }
    run_update(g, state, edits, vis, ws, QueueKind::Levels)
}

fn run_update(
    g: &DynGraph,
    state: &mut DynSssp,
    edits: &[AppliedEdit],
    mut vis: Option<&mut VisCounters>,
    ws: &mut Workspace,
    queue: QueueKind,
) -> Result<AffectedSet> {
    let n = g.n();
    if state.dist.len() != n || state.sigma.len() != n {
        return Err(Error::InconsistentState(format!(
            "state has {} nodes, graph has {n}",
            state.dist.len()
        )));
    }
    ws.ensure(n);
    let mut touched_edges = 0;
    let source = state.source;

    for e in edits {
        let orientations: &[(NodeId, NodeId)] =
            if g.is_directed() { &[(e.u, e.v)] } else { &[(e.u, e.v), (e.v, e.u)] };
        if let Some(t) = state.track.as_mut() {
            let reached = state.dist[e.u].is_finite() || state.dist[e.v].is_finite();
            if reached && g.is_weighted() {
                if let Some(w) = e.new_weight() {
                    t.omega_min = t.omega_min.min(w);
                }
                match e.change {
                    EdgeChange::Deleted { weight } => t.omega_stale |= weight <= t.omega_min,
                    EdgeChange::Reweighted { from, to } if to > from => {
                        t.omega_stale |= from <= t.omega_min
                    }
                    _ => {}
                }
            }
        }
        for &(a, b) in orientations {
            let (da, db) = (state.dist[a], state.dist[b]);
            if !(da.is_finite() && da < db) {
                continue;
            }
            let candidate = match e.new_weight() {
                Some(w) => (da + w).min(db),
                None => db,
            };
            if candidate.is_finite() {
                queue.push(ws, b, candidate);
            }
        }
    }

    while let Some((p, w)) = queue.pop(ws) {
        if ws.black[w] || w == source {
            continue;
        }
        if !ws.seen[w] {
            ws.seen[w] = true;
            ws.saved.push((w, state.dist[w], state.sigma[w]));
        }
        let ins = g.in_edges(w);
        touched_edges += ins.len();
        let con = ins
            .iter()
            .filter(|&&(z, _)| state.dist[z].is_finite())
            .map(|&(z, wt)| state.dist[z] + wt)
            .fold(f64::INFINITY, f64::min);

        if dist_eq(con, p) {
            if state.dist[w].is_infinite() {
                if let Some(vis) = vis.as_deref_mut() {
                    vis.inc(w);
                }
            }
            state.dist[w] = con;
            let mut sigma: u64 = 0;
            for &(z, wt) in ins {
                if state.dist[z].is_finite() && dist_eq(state.dist[z] + wt, con) {
                    sigma = sigma.checked_add(state.sigma[z]).ok_or(Error::SigmaOverflow(w))?;
                }
            }
            state.sigma[w] = sigma;
            ws.black[w] = true;
            let outs = g.out_edges(w);
            touched_edges += outs.len();
            if let Some(t) = state.track.as_mut() {
                t.record(w, con);
                if g.is_weighted() {
                    for &(_, wt) in ins.iter().chain(outs) {
                        t.omega_min = t.omega_min.min(wt);
                    }
                }
            }
            for &(z, wt) in outs {
                let nd = con + wt;
                if !ws.black[z] && (state.dist[z] >= nd || dist_eq(state.dist[z], nd)) {
                    queue.push(ws, z, nd);
                }
            }
        } else {
            if con < p {
                return Err(Error::InconsistentState(format!(
                    "node {w} has candidate {con} below its queue key {p}"
                )));
            }
            let old = state.dist[w];
            if old.is_finite() {
                let outs = g.out_edges(w);
                touched_edges += outs.len();
                for &(z, wt) in outs {
                    let dz = state.dist[z];
                    if z != source && !ws.black[z] && dz.is_finite() && dist_eq(dz, old + wt) {
                        queue.push(ws, z, dz);
                    }
                }
                state.dist[w] = f64::INFINITY;
                state.sigma[w] = 0;
                if let Some(vis) = vis.as_deref_mut() {
                    vis.dec(w);
                }
            }
            if con.is_finite() {
                queue.push(ws, w, con);
            }
        }
    }

    let mut nodes = Vec::new();
    for (w, d, s) in ws.saved.drain(..) {
        ws.seen[w] = false;
        ws.black[w] = false;
        if state.dist[w].to_bits() != d.to_bits() || state.sigma[w] != s {
            nodes.push(w);
        }
    }
    nodes.sort_unstable();
    Ok(AffectedSet { nodes, touched_edges })
}

//! Mutable graph with a fixed node set and batched edge updates.
//!
//! Nodes are dense indices `0..n`. Graphs are simple (no self-loops, no
//! multi-edges), directed or undirected, and either unweighted (every weight
//! is exactly `1.0`) or weighted with strictly positive finite weights.

mod components;
mod diameter;
pub(crate) mod search;
pub mod generate;

use std::collections::HashMap;

use crate::error::{Error, Result};

pub use components::{
    connected_components, strongly_connected_components, weakly_connected_components,
    Components, Condensation,
};
pub use diameter::exact_vertex_diameter;
pub use generate::{assign_weights, generate, Model, WeightDist};

pub type NodeId = usize;

/// Relative tolerance for comparing path lengths built from floating-point sums.
pub const DIST_TOLERANCE: f64 = 1e-9;

/// Equality of two path lengths up to [`DIST_TOLERANCE`] (relative).
#[inline]
pub fn dist_eq(a: f64, b: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    (a - b).abs() <= DIST_TOLERANCE * a.abs().max(b.abs())
}

/// `a < b` by more than the tolerance.
#[inline]
pub fn dist_lt(a: f64, b: f64) -> bool {
    a < b && !dist_eq(a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeOp {
    Insert,
    Delete,
    SetWeight,
}

/// A single requested edge operation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct EdgeEvent {
    pub u: NodeId,
    pub v: NodeId,
    pub op: EdgeOp,
    /// Ignored for deletions.
    pub weight: f64,
    pub timestamp: Option<u64>,
}

impl EdgeEvent {
    pub fn insert(u: NodeId, v: NodeId, weight: f64) -> Self {
        EdgeEvent { u, v, op: EdgeOp::Insert, weight, timestamp: None }
    }

    pub fn delete(u: NodeId, v: NodeId) -> Self {
        EdgeEvent { u, v, op: EdgeOp::Delete, weight: 0.0, timestamp: None }
    }

    pub fn set_weight(u: NodeId, v: NodeId, weight: f64) -> Self {
        EdgeEvent { u, v, op: EdgeOp::SetWeight, weight, timestamp: None }
    }

    pub fn at(mut self, timestamp: u64) -> Self {
        self.timestamp = Some(timestamp);
        self
    }
}

/// An ordered list of edge events applied together.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Batch {
    pub events: Vec<EdgeEvent>,
}

impl Batch {
    pub fn new(events: Vec<EdgeEvent>) -> Self {
        Batch { events }
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

impl FromIterator<EdgeEvent> for Batch {
    fn from_iter<I: IntoIterator<Item = EdgeEvent>>(iter: I) -> Self {
        Batch { events: iter.into_iter().collect() }
    }
}

/// Net change to one node pair after canonicalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeChange {
    Inserted { weight: f64 },
    Deleted { weight: f64 },
    Reweighted { from: f64, to: f64 },
}

/// One effective edit, as actually applied to the graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppliedEdit {
    pub u: NodeId,
    pub v: NodeId,
    pub change: EdgeChange,
    pub timestamp: Option<u64>,
}

impl AppliedEdit {
    /// Weight of the edge after the batch, `None` if the edge is gone.
    pub fn new_weight(&self) -> Option<f64> {
        match self.change {
            EdgeChange::Inserted { weight } => Some(weight),
            EdgeChange::Deleted { .. } => None,
            EdgeChange::Reweighted { to, .. } => Some(to),
        }
    }

    pub fn old_weight(&self) -> Option<f64> {
        match self.change {
            EdgeChange::Inserted { .. } => None,
            EdgeChange::Deleted { weight } => Some(weight),
            EdgeChange::Reweighted { from, .. } => Some(from),
        }
    }

    /// True for insertions and weight decreases.
    pub fn is_incremental(&self) -> bool {
        match self.change {
            EdgeChange::Inserted { .. } => true,
            EdgeChange::Deleted { .. } => false,
            EdgeChange::Reweighted { from, to } => to <= from,
        }
    }

    pub fn event(&self) -> EdgeEvent {
        let ev = match self.change {
            EdgeChange::Inserted { weight } => EdgeEvent::insert(self.u, self.v, weight),
            EdgeChange::Deleted { .. } => EdgeEvent::delete(self.u, self.v),
            EdgeChange::Reweighted { to, .. } => EdgeEvent::set_weight(self.u, self.v, to),
        };
        EdgeEvent { timestamp: self.timestamp, ..ev }
    }
}

/// True when every edit is an insertion or a weight decrease.
pub fn is_incremental(edits: &[AppliedEdit]) -> bool {
    edits.iter().all(AppliedEdit::is_incremental)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynGraph {
    n: usize,
    directed: bool,
    weighted: bool,
    out_adj: Vec<Vec<(NodeId, f64)>>,
    /// Reverse adjacency; empty for undirected graphs.
    in_adj: Vec<Vec<(NodeId, f64)>>,
    m: usize,
}

impl DynGraph {
    pub fn new(n: usize, directed: bool, weighted: bool) -> Self {
        DynGraph {
            n,
            directed,
            weighted,
            out_adj: vec![Vec::new(); n],
            in_adj: if directed { vec![Vec::new(); n] } else { Vec::new() },
            m: 0,
        }
    }

    /// Builds an unweighted graph from an edge list.
    pub fn from_edges(n: usize, directed: bool, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let mut g = DynGraph::new(n, directed, false);
        for &(u, v) in edges {
            g.add_edge(u, v, 1.0)?;
        }
        Ok(g)
    }

    pub fn from_weighted_edges(
        n: usize,
        directed: bool,
        edges: &[(NodeId, NodeId, f64)],
    ) -> Result<Self> {
        let mut g = DynGraph::new(n, directed, true);
        for &(u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Outgoing neighbors (all neighbors for undirected graphs).
    #[inline]
    pub fn out_edges(&self, u: NodeId) -> &[(NodeId, f64)] {
        &self.out_adj[u]
    }

    /// Incoming neighbors (all neighbors for undirected graphs).
    #[inline]
    pub fn in_edges(&self, u: NodeId) -> &[(NodeId, f64)] {
        if self.directed {
            &self.in_adj[u]
        } else {
            &self.out_adj[u]
        }
    }

    pub fn out_degree(&self, u: NodeId) -> usize {
        self.out_adj[u].len()
    }

    pub fn weight(&self, u: NodeId, v: NodeId) -> Option<f64> {
        self.out_adj
            .get(u)?
            .iter()
            .find(|&&(x, _)| x == v)
            .map(|&(_, w)| w)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.weight(u, v).is_some()
    }

    /// Every stored edge once: `(u, v, w)` with `u < v` for undirected graphs.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, f64)> + '_ {
        self.out_adj.iter().enumerate().flat_map(move |(u, adj)| {
            adj.iter()
                .filter(move |&&(v, _)| self.directed || u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    pub fn min_weight(&self) -> Option<f64> {
        self.edges().map(|(_, _, w)| w).min_by(f64::total_cmp)
    }

    pub fn max_weight(&self) -> Option<f64> {
        self.edges().map(|(_, _, w)| w).max_by(f64::total_cmp)
    }

    /// Canonical key for a node pair.
    pub fn pair_key(&self, u: NodeId, v: NodeId) -> (NodeId, NodeId) {
        if self.directed || u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn check_node(&self, u: NodeId) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::InvalidNode { node: u, n: self.n })
        }
    }

    fn check_weight(&self, w: f64) -> Result<f64> {
        if !(w > 0.0 && w.is_finite()) {
            return Err(Error::NonPositiveWeight(w));
        }
        if !self.weighted && w != 1.0 {
            return Err(Error::InvalidParams(format!(
                "weight {w} given for an unweighted graph"
            )));
        }
        Ok(w)
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId, w: f64) -> Result<()> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let w = self.check_weight(w)?;
        if self.has_edge(u, v) {
            return Err(Error::DuplicateInsert(u, v));
        }
        self.out_adj[u].push((v, w));
        if self.directed {
            self.in_adj[v].push((u, w));
        } else {
            self.out_adj[v].push((u, w));
        }
        self.m += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: NodeId, v: NodeId) -> Result<f64> {
        self.check_node(u)?;
        self.check_node(v)?;
        let w = remove_from(&mut self.out_adj[u], v).ok_or(Error::MissingEdge(u, v))?;
        if self.directed {
            remove_from(&mut self.in_adj[v], u);
        } else {
            remove_from(&mut self.out_adj[v], u);
        }
        self.m -= 1;
        Ok(w)
    }

    pub fn set_weight(&mut self, u: NodeId, v: NodeId, w: f64) -> Result<f64> {
        self.check_node(u)?;
        self.check_node(v)?;
        let w = self.check_weight(w)?;
        let old = set_in(&mut self.out_adj[u], v, w).ok_or(Error::MissingEdge(u, v))?;
        if self.directed {
            set_in(&mut self.in_adj[v], u, w);
        } else {
            set_in(&mut self.out_adj[v], u, w);
        }
        Ok(old)
    }

    /// Copy of this graph with every edge weight drawn by `weight_of`.
    pub fn with_weights(&self, mut weight_of: impl FnMut(NodeId, NodeId) -> f64) -> Result<Self> {
        let mut g = DynGraph::new(self.n, self.directed, true);
        for (u, v, _) in self.edges() {
            g.add_edge(u, v, weight_of(u, v))?;
        }
        Ok(g)
    }

    /// Resolves a batch into its net effect on the current graph without
    /// mutating it. Events on the same pair are replayed in order; pairs whose
    /// final state equals their initial state produce no edit. Edits are
    /// returned in order of each pair's first appearance.
    pub fn canonicalize(&self, batch: &Batch) -> Result<Vec<AppliedEdit>> {
        struct Slot {
            key: (NodeId, NodeId),
            initial: Option<f64>,
            current: Option<f64>,
            timestamp: Option<u64>,
        }
        let mut index: HashMap<(NodeId, NodeId), usize> = HashMap::new();
        let mut slots: Vec<Slot> = Vec::new();
        for ev in &batch.events {
            self.check_node(ev.u)?;
            self.check_node(ev.v)?;
            if ev.u == ev.v {
                return Err(Error::SelfLoop(ev.u));
            }
            let key = self.pair_key(ev.u, ev.v);
            let idx = *index.entry(key).or_insert_with(|| {
                let w = self.weight(key.0, key.1);
                slots.push(Slot { key, initial: w, current: w, timestamp: None });
                slots.len() - 1
            });
            let slot = &mut slots[idx];
            match ev.op {
                EdgeOp::Insert => {
                    let w = if self.weighted { self.check_weight(ev.weight)? } else { 1.0 };
                    if slot.current.is_some() {
                        return Err(Error::DuplicateInsert(ev.u, ev.v));
                    }
                    slot.current = Some(w);
                }
                EdgeOp::Delete => {
                    if slot.current.is_none() {
                        return Err(Error::MissingEdge(ev.u, ev.v));
                    }
                    slot.current = None;
                }
                EdgeOp::SetWeight => {
                    let w = self.check_weight(ev.weight)?;
                    if slot.current.is_none() {
                        return Err(Error::MissingEdge(ev.u, ev.v));
                    }
                    slot.current = Some(w);
                }
            }
            slot.timestamp = ev.timestamp.or(slot.timestamp);
        }
        Ok(slots
            .into_iter()
            .filter_map(|s| {
                let change = match (s.initial, s.current) {
                    (None, None) => return None,
                    (None, Some(w)) => EdgeChange::Inserted { weight: w },
                    (Some(w), None) => EdgeChange::Deleted { weight: w },
                    (Some(a), Some(b)) if a == b => return None,
                    (Some(a), Some(b)) => EdgeChange::Reweighted { from: a, to: b },
                };
                Some(AppliedEdit { u: s.key.0, v: s.key.1, change, timestamp: s.timestamp })
            })
            .collect())
    }

    /// Applies the net effect of `batch` and returns the effective edits.
    /// On error the graph is left unchanged.
    pub fn apply_batch(&mut self, batch: &Batch) -> Result<Vec<AppliedEdit>> {
        let edits = self.canonicalize(batch)?;
        self.apply_edits(&edits)?;
        Ok(edits)
    }

    /// Applies already canonical edits.
    pub fn apply_edits(&mut self, edits: &[AppliedEdit]) -> Result<()> {
        for e in edits {
            match e.change {
                EdgeChange::Inserted { weight } => self.add_edge(e.u, e.v, weight)?,
                EdgeChange::Deleted { .. } => {
                    self.remove_edge(e.u, e.v)?;
                }
                EdgeChange::Reweighted { to, .. } => {
                    self.set_weight(e.u, e.v, to)?;
                }
            }
        }
        Ok(())
    }

    /// Applies one event directly, without canonicalization.
    pub fn apply_event(&mut self, ev: &EdgeEvent) -> Result<()> {
        match ev.op {
            EdgeOp::Insert => {
                let w = if self.weighted { ev.weight } else { 1.0 };
                self.add_edge(ev.u, ev.v, w)
            }
            EdgeOp::Delete => self.remove_edge(ev.u, ev.v).map(|_| ()),
            EdgeOp::SetWeight => self.set_weight(ev.u, ev.v, ev.weight).map(|_| ()),
        }
    }

    /// Adjacency with each list sorted, for structural comparisons.
    pub fn sorted_adjacency(&self) -> Vec<Vec<(NodeId, f64)>> {
        self.out_adj
            .iter()
            .map(|adj| {
                let mut a = adj.clone();
                a.sort_by_key(|&(v, _)| v);
                a
            })
            .collect()
    }
}

fn remove_from(list: &mut Vec<(NodeId, f64)>, v: NodeId) -> Option<f64> {
    let pos = list.iter().position(|&(x, _)| x == v)?;
    Some(list.swap_remove(pos).1)
}

fn set_in(list: &mut [(NodeId, f64)], v: NodeId, w: f64) -> Option<f64> {
    let slot = list.iter_mut().find(|(x, _)| *x == v)?;
    Some(std::mem::replace(&mut slot.1, w))
}

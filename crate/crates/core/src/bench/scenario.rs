//! Dynamic scenarios: an initial graph and the batches replayed on it.

use std::collections::HashMap;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::io::TimedEdge;
use crate::error::{Error, Result};
use crate::graph::{Batch, DynGraph, EdgeEvent, NodeId};
use crate::rng::{stream_rng, uniform_index};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    /// Remove the `x` newest edges and insert them back in arrival order.
    RealDynamics,
    /// Remove `x` uniform edges, then mix re-insertions and fresh deletions.
    RandomInsertDelete,
    /// Multiply the weights of `x` uniform edges by a factor in (0, 2).
    RandomWeightChange,
}

impl ScenarioKind {
    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::RealDynamics => "real",
            ScenarioKind::RandomInsertDelete => "random",
            ScenarioKind::RandomWeightChange => "weights",
        }
    }
}

impl std::fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "real" | "real-dynamics" => Ok(ScenarioKind::RealDynamics),
            "random" | "random-insert-delete" => Ok(ScenarioKind::RandomInsertDelete),
            "weights" | "random-weight-change" => Ok(ScenarioKind::RandomWeightChange),
            other => Err(Error::InvalidParams(format!("unknown scenario {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub kind: ScenarioKind,
    /// Number of prepared events.
    pub x: usize,
    pub batch_sizes: Vec<usize>,
    /// Repetitions per batch size.
    pub runs: usize,
    pub seed: u64,
}

impl ScenarioSpec {
    pub fn new(kind: ScenarioKind, x: usize, batch_sizes: Vec<usize>, seed: u64) -> Self {
        ScenarioSpec { kind, x, batch_sizes, runs: 10, seed }
    }

    pub fn validate(&self, g: &DynGraph) -> Result<()> {
        if self.batch_sizes.is_empty() {
            return Err(Error::InvalidParams("at least one batch size is needed".into()));
        }
        for &b in &self.batch_sizes {
            if !b.is_power_of_two() || b > 1024 {
                return Err(Error::InvalidParams(format!("batch size {b} is not a power of two in [1, 1024]")));
            }
        }
        let largest = *self.batch_sizes.iter().max().unwrap();
        if self.x < largest {
            return Err(Error::InvalidParams(format!("x = {} is smaller than batch size {largest}", self.x)));
        }
        if self.runs == 0 {
            return Err(Error::InvalidParams("runs must be at least 1".into()));
        }
        if self.kind == ScenarioKind::RandomWeightChange && !g.is_weighted() {
            return Err(Error::InvalidParams("weight changes need a weighted graph".into()));
        }
        if g.m() < self.x {
            return Err(Error::NotEnoughEdges { needed: self.x, available: g.m() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub initial: DynGraph,
    pub batches: Vec<Batch>,
}

impl Scenario {
    pub fn event_count(&self) -> usize {
        self.batches.iter().map(Batch::len).sum()
    }
}

/// Edges of `g` in adjacency order, as an arrival stream for graphs without
/// timestamps.
pub fn edges_as_events(g: &DynGraph) -> Vec<TimedEdge> {
    g.edges()
        .enumerate()
        .map(|(i, (u, v, weight))| TimedEdge { u, v, weight, timestamp: i as u64 })
        .collect()
}

/// Builds the scenario for one batch size. `events` must list every edge of
/// `g` sorted by arrival; only the real-dynamics kind reads it.
pub fn build_scenario(
    g: &DynGraph,
    events: &[TimedEdge],
    kind: ScenarioKind,
    x: usize,
    batch_size: usize,
    seed: u64,
) -> Result<Scenario> {
    if batch_size == 0 {
        return Err(Error::InvalidParams("batch size must be positive".into()));
    }
    if g.m() < x {
        return Err(Error::NotEnoughEdges { needed: x, available: g.m() });
    }
    let mut rng = stream_rng(seed, 0x5ce0_0000 + batch_size as u64);
    match kind {
        ScenarioKind::RealDynamics => real_dynamics(g, events, x, batch_size),
        ScenarioKind::RandomInsertDelete => random_insert_delete(g, x, batch_size, &mut rng),
        ScenarioKind::RandomWeightChange => random_weight_change(g, x, batch_size, &mut rng),
    }
}

fn real_dynamics(g: &DynGraph, events: &[TimedEdge], x: usize, batch_size: usize) -> Result<Scenario> {
    if events.len() != g.m() {
        return Err(Error::InvalidParams(format!(
            "event stream has {} edges but the graph has {}",
            events.len(),
            g.m()
        )));
    }
    let mut initial = g.clone();
    let newest = &events[events.len() - x..];
    for e in newest {
        initial.remove_edge(e.u, e.v)?;
    }
    let batches = newest
        .chunks(batch_size)
        .map(|chunk| chunk.iter().map(|e| EdgeEvent::insert(e.u, e.v, e.weight).at(e.timestamp)).collect())
        .collect();
    Ok(Scenario { initial, batches })
}

/// Edge set supporting uniform sampling and removal.
struct EdgePool {
    edges: Vec<(NodeId, NodeId, f64)>,
    pos: HashMap<(NodeId, NodeId), usize>,
}

impl EdgePool {
    fn new(edges: impl IntoIterator<Item = (NodeId, NodeId, f64)>) -> Self {
        let mut pool = EdgePool { edges: Vec::new(), pos: HashMap::new() };
        for e in edges {
            pool.push(e);
        }
        pool
    }

    fn push(&mut self, e: (NodeId, NodeId, f64)) {
        self.pos.insert((e.0, e.1), self.edges.len());
        self.edges.push(e);
    }

    fn take(&mut self, i: usize) -> (NodeId, NodeId, f64) {
        let e = self.edges.swap_remove(i);
        self.pos.remove(&(e.0, e.1));
        if let Some(moved) = self.edges.get(i) {
            self.pos.insert((moved.0, moved.1), i);
        }
        e
    }

    fn len(&self) -> usize {
        self.edges.len()
    }
}

fn pick_distinct(g: &DynGraph, x: usize, rng: &mut impl Rng) -> Vec<(NodeId, NodeId, f64)> {
    let mut pool = EdgePool::new(g.edges());
    (0..x).map(|_| pool.take(uniform_index(rng, pool.len()))).collect()
}

/// Each event is a re-insertion of a removed edge or a deletion of a present
/// one, with probability 1/2 each. Edges touched in a batch only change sides
/// once the batch is complete, so no pair appears twice in one batch.
fn random_insert_delete(g: &DynGraph, x: usize, batch_size: usize, rng: &mut impl Rng) -> Result<Scenario> {
    let removed = pick_distinct(g, x, rng);
    let mut initial = g.clone();
    for &(u, v, _) in &removed {
        initial.remove_edge(u, v)?;
    }
    let mut present = EdgePool::new(initial.edges());
    let mut absent = EdgePool::new(removed);
    let mut batches = Vec::new();
    let mut left = x;
    while left > 0 {
        let size = batch_size.min(left);
        let mut events = Vec::with_capacity(size);
        let mut deferred = Vec::new();
        while events.len() < size {
            let insert = if absent.len() == 0 {
                false
            } else if present.len() == 0 {
                true
            } else {
                rng.gen_bool(0.5)
            };
            if insert {
                let e = absent.take(uniform_index(rng, absent.len()));
                events.push(EdgeEvent::insert(e.0, e.1, e.2));
            } else {
                if present.len() == 0 {
                    break;
                }
                let e = present.take(uniform_index(rng, present.len()));
                events.push(EdgeEvent::delete(e.0, e.1));
                deferred.push(e);
            }
        }
        // insertions join the present set after the batch
        for ev in &events {
            if ev.op == crate::graph::EdgeOp::Insert {
                present.push((ev.u, ev.v, ev.weight));
            }
        }
        for e in deferred {
            absent.push(e);
        }
        if events.is_empty() {
            break;
        }
        left -= events.len();
        batches.push(Batch::new(events));
    }
    Ok(Scenario { initial, batches })
}

/// Factor drawn uniformly from (0, 2), rejecting 0.
fn weight_factor(rng: &mut impl Rng) -> f64 {
    loop {
        let f: f64 = rng.gen_range(0.0..2.0);
        if f > 0.0 {
            return f;
        }
    }
}

fn random_weight_change(g: &DynGraph, x: usize, batch_size: usize, rng: &mut impl Rng) -> Result<Scenario> {
    if !g.is_weighted() {
        return Err(Error::InvalidParams("weight changes need a weighted graph".into()));
    }
    let chosen = pick_distinct(g, x, rng);
    let batches = chosen
        .chunks(batch_size)
        .map(|chunk| {
            chunk
                .iter()
                .map(|&(u, v, w)| EdgeEvent::set_weight(u, v, w * weight_factor(rng)))
                .collect()
        })
        .collect();
    Ok(Scenario { initial: g.clone(), batches })
}

//! Fully-dynamic vertex-diameter upper bound for undirected graphs: one
//! tracked source per connected component, with visit counters to notice
//! components that merge or split.

use crate::dyn_sssp::{update_sssp, DynSssp, VisCounters, Workspace};
use crate::error::{Error, Result};
use crate::graph::{AppliedEdit, DynGraph, NodeId};

#[derive(Debug, Clone)]
pub struct VdTracker {
    sources: Vec<DynSssp>,
    vis: VisCounters,
    ws: Workspace,
    bound: f64,
}

impl VdTracker {
    /// Scans nodes in ascending order and starts a tracked search from every
    /// node no earlier search has reached.
    pub fn new(g: &DynGraph) -> Result<Self> {
        if g.is_directed() {
            return Err(Error::InvalidParams(
                "dynamic vertex-diameter tracking needs an undirected graph".into(),
            ));
        }
        let mut vis = VisCounters::new(g.n());
        let mut sources = Vec::new();
        cover_nodes(g, &mut vis, 0..g.n(), &mut sources)?;
        let mut tracker = VdTracker { sources, vis, ws: Workspace::new(g.n()), bound: 1.0 };
        tracker.bound = tracker.recompute_bound(g)?;
        Ok(tracker)
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    pub fn source_nodes(&self) -> Vec<NodeId> {
        self.sources.iter().map(|s| s.source).collect()
    }

    pub fn component_count(&self) -> usize {
        self.sources.len()
    }

    pub fn vis(&self) -> &VisCounters {
        &self.vis
    }

    /// Updates every source, drops sources that another source now reaches,
    /// starts sources in components left uncovered and returns the new bound.
    ///
    /// A source is updated before it is dropped so that nodes it loses are
    /// still reported as unvisited.
    pub fn update(&mut self, g: &DynGraph, edits: &[AppliedEdit]) -> Result<f64> {
        let old = std::mem::take(&mut self.sources);
        for mut state in old {
            let remove = self.vis.get(state.source) > 1;
            update_sssp(g, &mut state, edits, Some(&mut self.vis), &mut self.ws)?;
            if !remove {
                self.sources.push(state);
            }
        }
        cover_unvisited(g, &mut self.vis, &mut self.sources)?;
        self.vis.reset_over();
        self.bound = self.recompute_bound(g)?;
        Ok(self.bound)
    }

    fn recompute_bound(&mut self, g: &DynGraph) -> Result<f64> {
        let mut best = 1.0f64;
        for s in &mut self.sources {
            best = best.max(s.local_vd_estimate(g)?);
        }
        Ok(best)
    }
}

/// Starts a tracked source at every node whose visit count ended at zero,
/// in ascending order.
pub(crate) fn cover_unvisited(
    g: &DynGraph,
    vis: &mut VisCounters,
    out: &mut Vec<DynSssp>,
) -> Result<usize> {
    let nodes = vis.take_unvisited();
    cover_nodes(g, vis, nodes, out)
}

/// Starts a tracked source at each of `nodes` (in the given order) that no
/// source reaches yet.
pub(crate) fn cover_nodes(
    g: &DynGraph,
    vis: &mut VisCounters,
    nodes: impl IntoIterator<Item = NodeId>,
    out: &mut Vec<DynSssp>,
) -> Result<usize> {
    let mut created = 0;
    for v in nodes {
        if vis.get(v) == 0 {
            out.push(DynSssp::new(g, v, true, Some(vis))?);
            created += 1;
        }
    }
    Ok(created)
}

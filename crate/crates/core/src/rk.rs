//! Static sampling approximation of betweenness: draw `r` uniform node pairs,
//! sample one shortest path per pair uniformly at random and credit `1/r` to
//! each internal node.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{compute_extended_sssp_until, predecessors, BcScores, ExtendedSssp, ShortestPaths};
use crate::graph::{DynGraph, NodeId};
use crate::rng::{stream_rng, uniform_index};
use crate::vd::{vd_upper_bound, VdBound};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplingParams {
    /// Additive error bound, in (0, 1).
    pub epsilon: f64,
    /// Failure probability, in (0, 1).
    pub delta: f64,
    /// Universal constant of the sample-size formula.
    pub c: f64,
    pub seed: u64,
}

impl SamplingParams {
    pub fn new(epsilon: f64, delta: f64, seed: u64) -> Result<Self> {
        let p = SamplingParams { epsilon, delta, c: 0.5, seed };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let open_unit = |x: f64| x > 0.0 && x < 1.0;
        if !open_unit(self.epsilon) || !open_unit(self.delta) {
            return Err(Error::InvalidParams(format!(
                "epsilon and delta must lie in (0, 1), got {} and {}",
                self.epsilon, self.delta
            )));
        }
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidParams(format!("c must be positive, got {}", self.c)));
        }
        Ok(())
    }
}

/// One sampled shortest path. `internal` runs from the node after `s` to the
/// node before `t`. When `t` is unreachable from `s` the path is an empty
/// marker and credits nothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampledPath {
    pub s: NodeId,
    pub t: NodeId,
    pub internal: Vec<NodeId>,
    pub empty_marker: bool,
}

impl SampledPath {
    pub fn empty(s: NodeId, t: NodeId) -> Self {
        SampledPath { s, t, internal: Vec::new(), empty_marker: true }
    }
}

/// `r = ceil((c / eps^2) * (floor(log2(max(vd - 2, 1))) + 1 + ln(1 / delta)))`.
pub fn sample_size(vd_bound: f64, params: &SamplingParams) -> Result<usize> {
    params.validate()?;
    if vd_bound.is_nan() || vd_bound < 2.0 || vd_bound.is_infinite() {
        return Err(Error::InvalidParams(format!("vertex-diameter bound must be >= 2, got {vd_bound}")));
    }
    let vd = (vd_bound - 1e-9).ceil() as u64;
    let arg = vd.saturating_sub(2).max(1);
    let floor_log = (63 - arg.leading_zeros()) as f64;
    let r = params.c / (params.epsilon * params.epsilon)
        * (floor_log + 1.0 + (1.0 / params.delta).ln());
    Ok(r.ceil() as usize)
}

/// Uniform ordered pair of distinct nodes.
pub fn sample_pair(n: usize, rng: &mut impl Rng) -> (NodeId, NodeId) {
    debug_assert!(n >= 2);
    let s = uniform_index(rng, n);
    let t = uniform_index(rng, n - 1);
    (s, if t >= s { t + 1 } else { t })
}

/// Walks back from `t`, picking each predecessor `z` of the current node `v`
/// with probability `sigma(z) / sigma(v)`, which makes the path uniform over
/// all shortest `s`-`t` paths.
pub fn sample_path(
    g: &DynGraph,
    state: &impl ShortestPaths,
    t: NodeId,
    rng: &mut impl Rng,
) -> Result<SampledPath> {
    let s = state.source();
    if state.dist()[t].is_infinite() {
        return Ok(SampledPath::empty(s, t));
    }
    let sigma = state.sigma();
    let mut internal = Vec::new();
    let mut v = t;
    while v != s {
        let preds = predecessors(g, state, v)?;
        let total: u64 = preds.iter().map(|&z| sigma[z]).sum();
        if total == 0 {
            return Err(Error::InconsistentState(format!("node {v} has no counted predecessor")));
        }
        let mut x = rng.gen_range(0..total);
        let mut next = preds[preds.len() - 1];
        for &z in &preds {
            if x < sigma[z] {
                next = z;
                break;
            }
            x -= sigma[z];
        }
        v = next;
        if v != s {
            internal.push(v);
        }
    }
    internal.reverse();
    Ok(SampledPath { s, t, internal, empty_marker: false })
}

/// One sampling iteration: a uniform pair, its shortest-path state and a
/// sampled path.
pub fn draw_sample(
    g: &DynGraph,
    rng: &mut impl Rng,
    truncate: bool,
) -> Result<(SampledPath, ExtendedSssp)> {
    let (s, t) = sample_pair(g.n(), rng);
    let state = compute_extended_sssp_until(g, s, truncate.then_some(t))?;
    let path = sample_path(g, &state, t, rng)?;
    Ok((path, state))
}

#[derive(Debug, Clone)]
pub struct RkResult {
    pub scores: BcScores,
    pub r: usize,
    pub vd_bound: VdBound,
    pub paths: Vec<SampledPath>,
}

/// Static approximation with searches stopped once the target is settled.
pub fn rk_run(g: &DynGraph, params: &SamplingParams) -> Result<RkResult> {
    rk_run_with(g, params, true)
}

/// Iteration `i` draws from its own stream, so iterations are independent of
/// execution order.
pub fn rk_run_with(g: &DynGraph, params: &SamplingParams, truncate: bool) -> Result<RkResult> {
    if g.n() < 2 {
        return Err(Error::InvalidParams("sampling needs at least two nodes".into()));
    }
    let vd_bound = vd_upper_bound(g);
    let r = sample_size(vd_bound.value.max(2.0), params)?;
    let mut counts = vec![0u32; g.n()];
    let mut paths = Vec::with_capacity(r);
    for i in 0..r {
        let mut rng = stream_rng(params.seed, i as u64);
        let (path, _) = draw_sample(g, &mut rng, truncate)?;
        for &v in &path.internal {
            counts[v] += 1;
        }
        paths.push(path);
    }
    let scores = BcScores(counts.into_iter().map(|c| c as f64 / r as f64).collect());
    Ok(RkResult { scores, r, vd_bound, paths })
}

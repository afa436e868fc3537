//! Betweenness approximation maintained under batches of edge updates.
//!
//! Every sample keeps its full shortest-path state. After a batch each state
//! is updated in place and its sampled path replaced by a fresh uniform
//! shortest path between the same pair. When the vertex-diameter bound grows,
//! more samples are drawn and existing scores are rescaled.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dyn_sssp::{update_sssp, DynSssp, VisCounters, Workspace};
use crate::dyn_vd::{cover_nodes, cover_unvisited};
use crate::error::{Error, Result};
use crate::exact::{compute_extended_sssp, BcScores};
use crate::graph::{dist_eq, is_incremental, AppliedEdit, Batch, DynGraph, NodeId};
use crate::rk::{sample_pair, sample_path, sample_size, SampledPath, SamplingParams};
use crate::rng::{stream_rng, StreamRng};
use crate::vd::vd_upper_bound;

/// Stream of the generator that draws one seed per update round.
const ROUND_STREAM: u64 = u64::MAX;
/// Offset of the streams used for samples added when `r` grows.
const GROWTH_STREAMS: u64 = 1 << 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Insertions only, unweighted.
    Ia,
    /// Insertions and weight decreases, weighted.
    Iaw,
    /// Any batch, unweighted; bound recomputed from scratch.
    Dad,
    /// Any batch, weighted; bound recomputed from scratch.
    Dadw,
    /// Any batch, undirected unweighted; bound tracked dynamically.
    Da,
    /// Any batch, undirected weighted; bound tracked dynamically.
    Daw,
}

impl Mode {
    pub const ALL: [Mode; 6] = [Mode::Ia, Mode::Iaw, Mode::Dad, Mode::Dadw, Mode::Da, Mode::Daw];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Ia => "IA",
            Mode::Iaw => "IAW",
            Mode::Dad => "DAD",
            Mode::Dadw => "DADW",
            Mode::Da => "DA",
            Mode::Daw => "DAW",
        }
    }

    pub fn is_weighted(self) -> bool {
        matches!(self, Mode::Iaw | Mode::Dadw | Mode::Daw)
    }

    pub fn is_incremental(self) -> bool {
        matches!(self, Mode::Ia | Mode::Iaw)
    }

    pub fn tracks_vd(self) -> bool {
        matches!(self, Mode::Da | Mode::Daw)
    }

    /// The mode family for `g` and the given update kind.
    pub fn for_graph(g: &DynGraph, incremental: bool) -> Mode {
        match (incremental, g.is_directed(), g.is_weighted()) {
            (true, _, false) => Mode::Ia,
            (true, _, true) => Mode::Iaw,
            (false, true, false) => Mode::Dad,
            (false, true, true) => Mode::Dadw,
            (false, false, false) => Mode::Da,
            (false, false, true) => Mode::Daw,
        }
    }

    pub fn check(self, g: &DynGraph) -> Result<()> {
        let fail = |reason: &str| Err(Error::IncompatibleMode { mode: self.name(), reason: reason.into() });
        if self.is_weighted() != g.is_weighted() {
            return fail(if g.is_weighted() {
                "graph is weighted, use the weighted variant"
            } else {
                "graph is unweighted, use the unweighted variant"
            });
        }
        if self.tracks_vd() && g.is_directed() {
            return fail("dynamic diameter tracking needs an undirected graph");
        }
        Ok(())
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown mode {s:?}")))
    }
}

/// When a path whose endpoints kept their distance and path count may be
/// left alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ReplacePolicy {
    /// Incremental modes always; fully dynamic modes only for batches that
    /// contain no deletion or weight increase.
    #[default]
    SkipUnchanged,
    /// Fully dynamic modes replace every path on every batch.
    Always,
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub state: DynSssp,
    pub path: SampledPath,
}

/// What one batch did.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct UpdateSummary {
    pub edits: usize,
    pub r_before: usize,
    pub r_after: usize,
    pub vd_bound: f64,
    pub resampled: usize,
    pub affected: usize,
    pub touched_edges: usize,
    pub new_aux_sources: usize,
}

#[derive(Debug, Clone)]
pub struct DynamicBc {
    mode: Mode,
    params: SamplingParams,
    policy: ReplacePolicy,
    r: usize,
    vd_bound: f64,
    scores: Vec<f64>,
    samples: Vec<Sample>,
    aux: Vec<DynSssp>,
    vis: Option<VisCounters>,
    ws: Workspace,
    rounds: StreamRng,
}

impl DynamicBc {
    pub fn new(g: &DynGraph, params: SamplingParams, mode: Mode) -> Result<Self> {
        Self::with_policy(g, params, mode, ReplacePolicy::default())
    }

    /// Samples exactly as the static algorithm with the same seed, keeping
    /// every shortest-path state. Diameter-tracking modes then start extra
    /// sources in components no sample reached.
    pub fn with_policy(
        g: &DynGraph,
        params: SamplingParams,
        mode: Mode,
        policy: ReplacePolicy,
    ) -> Result<Self> {
        params.validate()?;
        mode.check(g)?;
        if g.n() < 2 {
            return Err(Error::InvalidParams("sampling needs at least two nodes".into()));
        }
        let vd_bound = vd_upper_bound(g).value;
        let r = sample_size(vd_bound.max(2.0), &params)?;
        let mut this = DynamicBc {
            mode,
            params,
            policy,
            r,
            vd_bound,
            scores: vec![0.0; g.n()],
            samples: Vec::with_capacity(r),
            aux: Vec::new(),
            vis: mode.tracks_vd().then(|| VisCounters::new(g.n())),
            ws: Workspace::new(g.n()),
            rounds: stream_rng(params.seed, ROUND_STREAM),
        };
        for i in 0..r {
            let sample = this.fresh_sample(g, &mut stream_rng(params.seed, i as u64))?;
            this.samples.push(sample);
        }
        this.scores = this.recount().0;
        if let Some(vis) = this.vis.as_mut() {
            cover_nodes(g, vis, 0..g.n(), &mut this.aux)?;
            vis.take_unvisited();
            vis.clear_over();
        }
        Ok(this)
    }

    fn fresh_sample(&mut self, g: &DynGraph, rng: &mut StreamRng) -> Result<Sample> {
        let (s, t) = sample_pair(g.n(), rng);
        let state = compute_extended_sssp(g, s)?;
        let path = sample_path(g, &state, t, rng)?;
        let state = DynSssp::from_extended(g, state, self.mode.tracks_vd(), self.vis.as_mut());
        Ok(Sample { state, path })
    }

    fn credit(&mut self, path: &SampledPath, amount: f64) {
        for &v in &path.internal {
            self.scores[v] += amount;
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn params(&self) -> &SamplingParams {
        &self.params
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn vd_bound(&self) -> f64 {
        self.vd_bound
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    /// Number of extra diameter-tracking sources (zero outside DA/DAW).
    pub fn aux_count(&self) -> usize {
        self.aux.len()
    }

    pub fn aux_sources(&self) -> &[DynSssp] {
        &self.aux
    }

    pub fn vis(&self) -> Option<&VisCounters> {
        self.vis.as_ref()
    }

    pub fn scores(&self) -> BcScores {
        BcScores(self.scores.clone())
    }

    /// Scores rebuilt from the stored paths: the fraction of samples whose
    /// path passes through each node.
    pub fn recount(&self) -> BcScores {
        let mut counts = vec![0u32; self.scores.len()];
        for s in &self.samples {
            for &v in &s.path.internal {
                counts[v] += 1;
            }
        }
        BcScores(counts.into_iter().map(|c| c as f64 / self.r as f64).collect())
    }

    /// Applies `batch` to `g` and updates the approximation. Incremental
    /// modes reject deletions and weight increases before touching `g`.
    pub fn process_batch(&mut self, g: &mut DynGraph, batch: &Batch) -> Result<UpdateSummary> {
        let edits = g.canonicalize(batch)?;
        if self.mode.is_incremental() && !is_incremental(&edits) {
            return Err(Error::DeletionInIncrementalMode);
        }
        g.apply_edits(&edits)?;
        self.update(g, &edits)
    }

    /// Updates after `edits` have already been applied to `g`.
    pub fn update(&mut self, g: &DynGraph, edits: &[AppliedEdit]) -> Result<UpdateSummary> {
        match self.mode {
            Mode::Ia | Mode::Iaw => self.update_incremental(g, edits),
            Mode::Dad | Mode::Dadw => self.update_fully_dynamic(g, edits),
            Mode::Da | Mode::Daw => self.update_combined(g, edits),
        }
    }

    /// Resamples only the paths whose target changed distance or path count.
    pub fn update_incremental(&mut self, g: &DynGraph, edits: &[AppliedEdit]) -> Result<UpdateSummary> {
        if !is_incremental(edits) {
            return Err(Error::DeletionInIncrementalMode);
        }
        let round = self.rounds.gen::<u64>();
        let mut summary = self.summary(edits);
        self.refresh_samples(g, edits, true, round, &mut summary)?;
        summary.vd_bound = self.vd_bound;
        summary.r_after = self.r;
        Ok(summary)
    }

    /// Replaces every path, recomputes the static diameter bound and grows
    /// the sample set if the bound asks for more samples.
    pub fn update_fully_dynamic(&mut self, g: &DynGraph, edits: &[AppliedEdit]) -> Result<UpdateSummary> {
        let round = self.rounds.gen::<u64>();
        let mut summary = self.summary(edits);
        let skip = self.skip_unchanged(edits);
        self.refresh_samples(g, edits, skip, round, &mut summary)?;
        self.vd_bound = vd_upper_bound(g).value;
        self.grow(g, round)?;
        summary.vd_bound = self.vd_bound;
        summary.r_after = self.r;
        Ok(summary)
    }

    /// As [`Self::update_fully_dynamic`], but the diameter bound comes from
    /// the sample states themselves plus extra sources for components no
    /// sample reaches.
    pub fn update_combined(&mut self, g: &DynGraph, edits: &[AppliedEdit]) -> Result<UpdateSummary> {
        if g.is_directed() {
            return Err(Error::IncompatibleMode {
                mode: self.mode.name(),
                reason: "dynamic diameter tracking needs an undirected graph".into(),
            });
        }
        let round = self.rounds.gen::<u64>();
        let mut summary = self.summary(edits);
        let skip = self.skip_unchanged(edits);
        self.refresh_samples(g, edits, skip, round, &mut summary)?;
        let vis = self.vis.as_mut().expect("tracking modes keep visit counters");
        for state in &mut self.aux {
            let aff = update_sssp(g, state, edits, Some(vis), &mut self.ws)?;
            summary.affected += aff.nodes.len();
            summary.touched_edges += aff.touched_edges;
        }
        summary.new_aux_sources = cover_unvisited(g, vis, &mut self.aux)?;
        vis.clear_over();
        let mut bound = 1.0f64;
        for s in &mut self.samples {
            bound = bound.max(s.state.local_vd_estimate(g)?);
        }
        for s in &mut self.aux {
            bound = bound.max(s.local_vd_estimate(g)?);
        }
        self.vd_bound = bound;
        self.grow(g, round)?;
        summary.vd_bound = self.vd_bound;
        summary.r_after = self.r;
        Ok(summary)
    }

    fn summary(&self, edits: &[AppliedEdit]) -> UpdateSummary {
        UpdateSummary { edits: edits.len(), r_before: self.r, ..Default::default() }
    }

    fn skip_unchanged(&self, edits: &[AppliedEdit]) -> bool {
        self.policy == ReplacePolicy::SkipUnchanged && is_incremental(edits)
    }

    fn refresh_samples(
        &mut self,
        g: &DynGraph,
        edits: &[AppliedEdit],
        skip_unchanged: bool,
        round: u64,
        summary: &mut UpdateSummary,
    ) -> Result<()> {
        let unit = 1.0 / self.r as f64;
        for i in 0..self.samples.len() {
            let sample = &mut self.samples[i];
            let t = sample.path.t;
            let (old_d, old_sigma) = (sample.state.dist[t], sample.state.sigma[t]);
            let aff = update_sssp(g, &mut sample.state, edits, self.vis.as_mut(), &mut self.ws)?;
            summary.affected += aff.nodes.len();
            summary.touched_edges += aff.touched_edges;
            let changed = !dist_eq(old_d, sample.state.dist[t]) || old_sigma != sample.state.sigma[t];
            if skip_unchanged && !changed {
                continue;
            }
            let mut rng = stream_rng(round, i as u64);
            let path = sample_path(g, &sample.state, t, &mut rng)?;
            let old = std::mem::replace(&mut sample.path, path);
            for &v in &old.internal {
                self.scores[v] -= unit;
            }
            for &v in &self.samples[i].path.internal {
                self.scores[v] += unit;
            }
            summary.resampled += 1;
        }
        Ok(())
    }

    /// Raises `r` to the sample size of the current bound. Existing scores
    /// are scaled by `r / r_new` and the new samples credit `1 / r_new`.
    fn grow(&mut self, g: &DynGraph, round: u64) -> Result<()> {
        let r_new = sample_size(self.vd_bound.max(2.0), &self.params)?;
        if r_new <= self.r {
            return Ok(());
        }
        let scale = self.r as f64 / r_new as f64;
        for x in &mut self.scores {
            *x *= scale;
        }
        let unit = 1.0 / r_new as f64;
        for i in self.r..r_new {
            let sample = self.fresh_sample(g, &mut stream_rng(round, GROWTH_STREAMS + i as u64))?;
            self.credit(&sample.path, unit);
            self.samples.push(sample);
        }
        self.r = r_new;
        Ok(())
    }

    /// Checks every stored path against a fresh search on `g`: it must be a
    /// shortest path between its endpoints, or an empty marker exactly when
    /// the target is unreachable.
    pub fn validate_paths(&self, g: &DynGraph) -> Result<()> {
        for (i, s) in self.samples.iter().enumerate() {
            let fresh = compute_extended_sssp(g, s.path.s)?;
            let t = s.path.t;
            let bad = |msg: String| Err(Error::InconsistentState(format!("sample {i}: {msg}")));
            if fresh.dist[t].is_infinite() {
                if !s.path.empty_marker {
                    return bad("target unreachable but path not marked empty".into());
                }
                continue;
            }
            if s.path.empty_marker {
                return bad("target reachable but path marked empty".into());
            }
            let nodes: Vec<NodeId> = std::iter::once(s.path.s)
                .chain(s.path.internal.iter().copied())
                .chain(std::iter::once(t))
                .collect();
            let mut len = 0.0;
            for pair in nodes.windows(2) {
                match g.weight(pair[0], pair[1]) {
                    Some(w) => len += w,
                    None => return bad(format!("missing edge {}-{}", pair[0], pair[1])),
                }
            }
            if !dist_eq(len, fresh.dist[t]) {
                return bad(format!("length {len} but distance {}", fresh.dist[t]));
            }
        }
        Ok(())
    }
}

//! Replays scenarios through a dynamic approximation and measures time and
//! accuracy against a static recompute and the exact scores.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::io::TimedEdge;
use super::rank::rank_error;
use super::scenario::{build_scenario, ScenarioSpec};
use crate::dynamic::{DynamicBc, Mode, ReplacePolicy};
use crate::error::{Error, Result};
use crate::exact::brandes_exact;
use crate::graph::DynGraph;
use crate::rk::{rk_run, SamplingParams};

pub const DEFAULT_EXACT_NODE_LIMIT: usize = 5000;

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub scenario: ScenarioSpec,
    /// Sampling seed of run `j` is `params.seed + j`.
    pub params: SamplingParams,
    pub mode: Mode,
    pub policy: ReplacePolicy,
    pub with_exact: bool,
    /// Exact comparison is skipped on graphs with more nodes than this.
    pub exact_node_limit: usize,
    /// Ranks compared for `max_rank_error_top`.
    pub top_k: usize,
}

impl ExperimentConfig {
    pub fn new(scenario: ScenarioSpec, params: SamplingParams, mode: Mode) -> Self {
        ExperimentConfig {
            scenario,
            params,
            mode,
            policy: ReplacePolicy::default(),
            with_exact: false,
            exact_node_limit: DEFAULT_EXACT_NODE_LIMIT,
            top_k: 10,
        }
    }
}

/// One row per (batch size, run). Times are in seconds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub mode: String,
    pub scenario: String,
    pub batch_size: usize,
    pub run: usize,
    pub seed: u64,
    pub epsilon: f64,
    pub delta: f64,
    pub batches: usize,
    pub events: usize,
    pub r_initial: usize,
    pub r_final: usize,
    pub vd_bound: f64,
    pub init_time: f64,
    /// Mean wall time of one batch update.
    pub update_time: f64,
    /// Wall time of a static approximation from scratch on the final graph.
    pub static_time: f64,
    /// `static_time / update_time`.
    pub speedup: f64,
    pub max_abs_error: Option<f64>,
    pub avg_abs_error: Option<f64>,
    /// Largest rank error among the top exact-rank nodes.
    pub max_rank_error_top: Option<f64>,
    pub avg_rank_error: Option<f64>,
}

/// Runs every (batch size, run) combination and hands each report to `sink`
/// as soon as it is ready.
pub fn run_experiment(
    graph_name: &str,
    g: &DynGraph,
    events: &[TimedEdge],
    cfg: &ExperimentConfig,
    mut sink: impl FnMut(RunReport) -> Result<()>,
) -> Result<()> {
    cfg.scenario.validate(g)?;
    cfg.mode.check(g)?;
    let exact_on = cfg.with_exact && g.n() <= cfg.exact_node_limit;
    for &batch_size in &cfg.scenario.batch_sizes {
        for run in 0..cfg.scenario.runs {
            let seed = cfg.scenario.seed.wrapping_add(run as u64);
            let scenario = build_scenario(g, events, cfg.scenario.kind, cfg.scenario.x, batch_size, seed)?;
            let params = SamplingParams { seed: cfg.params.seed.wrapping_add(run as u64), ..cfg.params };
            let mut graph = scenario.initial.clone();

            let start = Instant::now();
            let mut bc = DynamicBc::with_policy(&graph, params, cfg.mode, cfg.policy)?;
            let init_time = start.elapsed().as_secs_f64();
            let r_initial = bc.r();

            let mut update_total = 0.0;
            for batch in &scenario.batches {
                let start = Instant::now();
                bc.process_batch(&mut graph, batch)?;
                update_total += start.elapsed().as_secs_f64();
            }
            let update_time = update_total / scenario.batches.len().max(1) as f64;

            let start = Instant::now();
            rk_run(&graph, &params)?;
            let static_time = start.elapsed().as_secs_f64();

            let approx = bc.scores();
            let (mut max_abs_error, mut avg_abs_error, mut max_rank_error_top, mut avg_rank_error) =
                (None, None, None, None);
            if exact_on {
                let exact = brandes_exact(&graph)?;
                max_abs_error = Some(approx.max_abs_error(&exact));
                avg_abs_error = Some(approx.mean_abs_error(&exact));
                let top = rank_error(&exact, &approx, Some(cfg.top_k));
                max_rank_error_top = top.iter().map(|&(_, e)| e).reduce(f64::max);
                let all = rank_error(&exact, &approx, None);
                avg_rank_error = Some(all.iter().map(|&(_, e)| e).sum::<f64>() / all.len() as f64);
            }

            sink(RunReport {
                graph: graph_name.to_string(),
                n: graph.n(),
                m: graph.m(),
                mode: cfg.mode.to_string(),
                scenario: cfg.scenario.kind.to_string(),
                batch_size,
                run,
                seed,
                epsilon: params.epsilon,
                delta: params.delta,
                batches: scenario.batches.len(),
                events: scenario.event_count(),
                r_initial,
                r_final: bc.r(),
                vd_bound: bc.vd_bound(),
                init_time,
                update_time,
                static_time,
                speedup: static_time / update_time,
                max_abs_error,
                avg_abs_error,
                max_rank_error_top,
                avg_rank_error,
            })?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" | "json-lines" => Ok(OutputFormat::Jsonl),
            other => Err(Error::InvalidParams(format!("unknown output format {other:?}"))),
        }
    }
}

/// Streams reports as CSV (with a header row; missing values are empty
/// fields) or as one JSON object per line (missing values are `null`).
pub enum ReportWriter<W: Write> {
    Csv(Box<csv::Writer<W>>),
    Jsonl(W),
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W, format: OutputFormat) -> Self {
        match format {
            OutputFormat::Csv => ReportWriter::Csv(Box::new(csv::Writer::from_writer(out))),
            OutputFormat::Jsonl => ReportWriter::Jsonl(out),
        }
    }

    pub fn write(&mut self, report: &RunReport) -> Result<()> {
        match self {
            ReportWriter::Csv(w) => {
                w.serialize(report).map_err(|e| Error::Output(e.to_string()))?;
                w.flush()?;
            }
            ReportWriter::Jsonl(w) => {
                serde_json::to_writer(&mut *w, report).map_err(|e| Error::Output(e.to_string()))?;
                writeln!(w)?;
                w.flush()?;
            }
        }
        Ok(())
    }
}

//! Edge-list loading and writing.
//!
//! Plain files hold `u v [w]` per line, temporal files `u v w t`. Lines
//! starting with `#` or `%` are comments. Node tokens are arbitrary strings,
//! numbered densely in order of first appearance.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DynGraph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Plain,
    Temporal,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(Format::Plain),
            "temporal" => Ok(Format::Temporal),
            other => Err(Error::InvalidParams(format!("unknown edge-list format {other:?}"))),
        }
    }
}

/// One collapsed edge of the input with its arrival time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimedEdge {
    pub u: NodeId,
    pub v: NodeId,
    pub weight: f64,
    /// Earliest timestamp among the collapsed copies; line number for plain
    /// files.
    pub timestamp: u64,
}

#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: DynGraph,
    /// Every edge of `graph` once, sorted by timestamp (ties keep file order).
    pub events: Vec<TimedEdge>,
    /// Original token of each node.
    pub labels: Vec<String>,
    /// Self-loop lines that were dropped.
    pub skipped_self_loops: usize,
}

pub fn load_edge_list(
    path: impl AsRef<Path>,
    format: Format,
    directed: bool,
    weighted: bool,
) -> Result<LoadedGraph> {
    let file = File::open(path)?;
    parse_edge_list(BufReader::new(file), format, directed, weighted)
}

/// Parses an edge list. Copies of the same node pair collapse into one edge;
/// in weighted mode a pair seen `k > 1` times gets weight `1/k`, a pair seen
/// once keeps its listed weight.
pub fn parse_edge_list(
    reader: impl BufRead,
    format: Format,
    directed: bool,
    weighted: bool,
) -> Result<LoadedGraph> {
    struct Pair {
        u: NodeId,
        v: NodeId,
        weight: f64,
        copies: usize,
        timestamp: u64,
        order: usize,
    }
    let mut ids: HashMap<String, NodeId> = HashMap::new();
    let mut labels = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut index: HashMap<(NodeId, NodeId), usize> = HashMap::new();
    let mut skipped_self_loops = 0;

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let parse_err = |msg: String| Error::Parse { line: lineno, msg };
        let need = if format == Format::Temporal { 4 } else { 2 };
        if fields.len() < need {
            return Err(parse_err(format!("expected at least {need} fields, found {}", fields.len())));
        }
        let mut node = |tok: &str| {
            *ids.entry(tok.to_string()).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            })
        };
        let u = node(fields[0]);
        let v = node(fields[1]);
        let weight = match fields.get(2) {
            Some(tok) => tok.parse::<f64>().map_err(|e| parse_err(format!("bad weight {tok:?}: {e}")))?,
            None => 1.0,
        };
        if weighted && !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::NonPositiveWeight(weight));
        }
        let timestamp = match format {
            Format::Plain => lineno as u64,
            Format::Temporal => parse_timestamp(fields[3]).ok_or_else(|| parse_err(format!("bad timestamp {:?}", fields[3])))?,
        };
        if u == v {
            skipped_self_loops += 1;
            continue;
        }
        let key = if directed || u < v { (u, v) } else { (v, u) };
        match index.get(&key) {
            Some(&k) => {
                let p = &mut pairs[k];
                p.copies += 1;
                p.timestamp = p.timestamp.min(timestamp);
            }
            None => {
                index.insert(key, pairs.len());
                pairs.push(Pair { u, v, weight, copies: 1, timestamp, order: pairs.len() });
            }
        }
    }

    pairs.sort_by_key(|p| (p.timestamp, p.order));
    let mut graph = DynGraph::new(labels.len(), directed, weighted);
    let mut events = Vec::with_capacity(pairs.len());
    for p in pairs {
        let weight = match (weighted, p.copies) {
            (false, _) => 1.0,
            (true, 1) => p.weight,
            (true, k) => 1.0 / k as f64,
        };
        graph.add_edge(p.u, p.v, weight)?;
        events.push(TimedEdge { u: p.u, v: p.v, weight, timestamp: p.timestamp });
    }
    Ok(LoadedGraph { graph, events, labels, skipped_self_loops })
}

/// Integer timestamps, or decimal ones truncated toward zero.
fn parse_timestamp(tok: &str) -> Option<u64> {
    tok.parse::<u64>()
        .ok()
        .or_else(|| tok.parse::<f64>().ok().filter(|t| *t >= 0.0 && t.is_finite()).map(|t| t as u64))
}

/// Writes `u v` (or `u v w` when weighted) per edge, with a header comment.
pub fn write_edge_list(g: &DynGraph, mut out: impl Write) -> Result<()> {
    writeln!(
        out,
        "# n={} m={} {} {}",
        g.n(),
        g.m(),
        if g.is_directed() { "directed" } else { "undirected" },
        if g.is_weighted() { "weighted" } else { "unweighted" }
    )?;
    for (u, v, w) in g.edges() {
        if g.is_weighted() {
            writeln!(out, "{u} {v} {w}")?;
        } else {
            writeln!(out, "{u} {v}")?;
        }
    }
    Ok(())
}

//! Small deterministic graph generators.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{DynGraph, NodeId};
use crate::error::{Error, Result};
use crate::rng::stream_rng;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum Model {
    Path { n: usize },
    Cycle { n: usize },
    /// Node 0 is the center.
    Star { n: usize },
    /// Starts from a triangle; every new node attaches to both endpoints of a
    /// uniformly chosen existing edge.
    DorogovtsevMendes { n: usize },
    ErdosRenyi { n: usize, p: f64 },
}

impl Model {
    pub fn n(&self) -> usize {
        match *self {
            Model::Path { n }
            | Model::Cycle { n }
            | Model::Star { n }
            | Model::DorogovtsevMendes { n }
            | Model::ErdosRenyi { n, .. } => n,
        }
    }
}

/// Unweighted graph from `model`. Directed variants orient path, cycle and
/// star edges away from node 0; Dorogovtsev-Mendes edges get a random
/// orientation and Erdős–Rényi draws every ordered pair independently.
pub fn generate(model: &Model, directed: bool, seed: u64) -> Result<DynGraph> {
    let mut rng = stream_rng(seed, 0);
    let n = model.n();
    let mut g = DynGraph::new(n, directed, false);
    match *model {
        Model::Path { n } => {
            for u in 1..n {
                g.add_edge(u - 1, u, 1.0)?;
            }
        }
        Model::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
            }
            for u in 0..n {
                g.add_edge(u, (u + 1) % n, 1.0)?;
            }
        }
        Model::Star { n } => {
            for u in 1..n {
                g.add_edge(0, u, 1.0)?;
            }
        }
        Model::DorogovtsevMendes { n } => {
            if n < 3 {
                return Err(Error::InvalidParams(format!(
                    "Dorogovtsev-Mendes needs n >= 3, got {n}"
                )));
            }
            let mut edges: Vec<(NodeId, NodeId)> = vec![(0, 1), (1, 2), (0, 2)];
            for v in 3..n {
                let (a, b) = edges[rng.gen_range(0..edges.len() as u64) as usize];
                edges.push((a, v));
                edges.push((b, v));
            }
            for (a, b) in edges {
                let (u, v) = if directed && rng.gen_bool(0.5) { (b, a) } else { (a, b) };
                g.add_edge(u, v, 1.0)?;
            }
        }
        Model::ErdosRenyi { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!("edge probability {p} not in [0, 1]")));
            }
            if n < 2 || p == 0.0 {
                return Ok(g);
            }
            let total = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
            for k in geometric_positions(total, p, &mut rng) {
                let (u, v) = if directed { ordered_pair(k, n) } else { unordered_pair(k) };
                g.add_edge(u, v, 1.0)?;
            }
        }
    }
    Ok(g)
}

/// Indices in `0..total` each selected with probability `p`, by geometric
/// skipping.
fn geometric_positions(total: usize, p: f64, rng: &mut impl Rng) -> Vec<usize> {
    let mut out = Vec::new();
    if p >= 1.0 {
        out.extend(0..total);
        return out;
    }
    let log_q = (1.0 - p).ln();
    let mut k: i64 = -1;
    loop {
        let r: f64 = rng.gen();
        let skip = ((1.0 - r).ln() / log_q).floor();
        if !skip.is_finite() || skip > total as f64 {
            break;
        }
        k += 1 + skip as i64;
        if k >= total as i64 {
            break;
        }
        out.push(k as usize);
    }
    out
}

fn ordered_pair(k: usize, n: usize) -> (NodeId, NodeId) {
    let u = k / (n - 1);
    let j = k % (n - 1);
    (u, if j < u { j } else { j + 1 })
}

/// Position `k` in the row-major enumeration of pairs `(u, v)` with `u < v`
/// ordered by `v`: (0,1), (0,2), (1,2), (0,3), ...
fn unordered_pair(k: usize) -> (NodeId, NodeId) {
    let mut v = ((((8 * k + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    (k - v * (v - 1) / 2, v)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum WeightDist {
    /// Real weights uniform in `[low, high)`.
    Uniform { low: f64, high: f64 },
    /// Integer weights uniform in `low..=high`; produces many equal-length paths.
    Integer { low: u32, high: u32 },
}

/// Weighted copy of `g` with weights drawn from `dist`.
pub fn assign_weights(g: &DynGraph, dist: WeightDist, seed: u64) -> Result<DynGraph> {
    match dist {
        WeightDist::Uniform { low, high } if !(low > 0.0 && high >= low) => {
            return Err(Error::InvalidParams(format!("bad weight range [{low}, {high})")))
        }
        WeightDist::Integer { low, high } if low == 0 || high < low => {
            return Err(Error::InvalidParams(format!("bad weight range {low}..={high}")))
        }
        _ => {}
    }
    let mut rng = stream_rng(seed, 1);
    g.with_weights(|_, _| match dist {
        WeightDist::Uniform { low, high } if high > low => rng.gen_range(low..high),
        WeightDist::Uniform { low, .. } => low,
        WeightDist::Integer { low, high } => rng.gen_range(low..=high) as f64,
    })
}

//! Monte Carlo check of the (epsilon, delta) guarantee after batched updates.

mod common;

use common::*;
use dynbc::graph::{generate, Model};
use dynbc::{brandes_exact, DynamicBc, Mode, SamplingParams};

/// Smallest k with P[Binomial(runs, delta) > k] < 0.001.
fn binomial_upper(runs: u64, delta: f64) -> u64 {
    let mut cdf = 0.0;
    for k in 0..=runs {
        let mut ln_c = 0.0;
        for i in 0..k {
            ln_c += ((runs - i) as f64).ln() - ((i + 1) as f64).ln();
        }
        cdf += (ln_c + k as f64 * delta.ln() + (runs - k) as f64 * (1.0 - delta).ln()).exp();
        if 1.0 - cdf < 1e-3 {
            return k;
        }
    }
    runs
}

fn failure_count(mode: Mode, directed: bool) -> u64 {
    let (eps, delta) = (0.1, 0.1);
    let mut failures = 0;
    for run in 0..100u64 {
        let mut g = generate(&Model::DorogovtsevMendes { n: 500 }, directed, run).unwrap();
        let mut bc = DynamicBc::new(&g, SamplingParams::new(eps, delta, run).unwrap(), mode).unwrap();
        let mut rng = rng(run);
        let mut worst = bc.scores().max_abs_error(&brandes_exact(&g).unwrap());
        for _ in 0..5 {
            let batch = random_batch(&mut rng, &g, 16, true);
            bc.process_batch(&mut g, &batch).unwrap();
            worst = worst.max(bc.scores().max_abs_error(&brandes_exact(&g).unwrap()));
        }
        if worst > eps {
            failures += 1;
        }
    }
    failures
}

#[test]
fn failure_rate_within_delta() {
    let limit = binomial_upper(100, 0.1);
    for (mode, directed) in [(Mode::Da, false), (Mode::Dad, true)] {
        let failures = failure_count(mode, directed);
        assert!(failures <= limit, "{mode}: {failures} of 100 runs exceeded epsilon (limit {limit})");
    }
}

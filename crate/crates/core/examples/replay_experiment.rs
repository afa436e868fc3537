//! Scenario replay with timing and accuracy rows written as CSV to stdout.

use std::io;

use dynbc::bench::{
    edges_as_events, run_experiment, ExperimentConfig, OutputFormat, ReportWriter, ScenarioKind,
    ScenarioSpec,
};
use dynbc::graph::{generate, Model};
use dynbc::{Mode, SamplingParams};

fn main() -> dynbc::Result<()> {
    let g = generate(&Model::ErdosRenyi { n: 2000, p: 0.003 }, false, 1)?;
    let mut spec = ScenarioSpec::new(ScenarioKind::RandomInsertDelete, 64, vec![1, 8, 64], 0);
    spec.runs = 3;
    let mut cfg = ExperimentConfig::new(spec, SamplingParams::new(0.1, 0.1, 0)?, Mode::Da);
    cfg.with_exact = true;
    let mut out = ReportWriter::new(io::stdout().lock(), OutputFormat::Csv);
    run_experiment("er2000", &g, &edges_as_events(&g), &cfg, |row| out.write(&row))
}

//! Loading a timestamped edge list and replaying its newest edges in order.

use dynbc::bench::{build_scenario, parse_edge_list, Format, ScenarioKind};
use dynbc::{DynamicBc, Mode, SamplingParams};

const EDGES: &str = "\
% u v weight time
alice bob 1 100
bob carol 1 140
carol dave 1 90
alice bob 1 300
dave erin 1 210
erin alice 1 260
bob dave 1 250
";

fn main() -> dynbc::Result<()> {
    let loaded = parse_edge_list(EDGES.as_bytes(), Format::Temporal, false, true)?;
    println!("nodes {:?}", loaded.labels);
    for e in &loaded.events {
        println!("t={:<4} {} - {} (w {})", e.timestamp, loaded.labels[e.u], loaded.labels[e.v], e.weight);
    }
    let scenario = build_scenario(&loaded.graph, &loaded.events, ScenarioKind::RealDynamics, 3, 1, 0)?;
    let mut g = scenario.initial.clone();
    let mut bc = DynamicBc::new(&g, SamplingParams::new(0.2, 0.1, 0)?, Mode::Iaw)?;
    for batch in &scenario.batches {
        bc.process_batch(&mut g, batch)?;
    }
    for (v, s) in bc.scores().as_slice().iter().enumerate() {
        println!("{:<6} {s:.3}", loaded.labels[v]);
    }
    Ok(())
}

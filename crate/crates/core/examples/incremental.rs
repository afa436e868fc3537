//! Insertion-only updates: a growing graph keeps its approximation current
//! without recomputing.

use dynbc::graph::{generate, Model};
use dynbc::{brandes_exact, Batch, DynamicBc, EdgeEvent, Mode, SamplingParams};
use rand::Rng;
use dynbc::rng::stream_rng;

fn main() -> dynbc::Result<()> {
    let mut g = generate(&Model::DorogovtsevMendes { n: 500 }, false, 3)?;
    let mut bc = DynamicBc::new(&g, SamplingParams::new(0.1, 0.1, 5)?, Mode::Ia)?;
    let mut rng = stream_rng(11, 0);
    for round in 0..5 {
        let mut events = Vec::new();
        while events.len() < 8 {
            let (u, v) = (rng.gen_range(0..g.n()), rng.gen_range(0..g.n()));
            let dup = events.iter().any(|e: &EdgeEvent| g.pair_key(e.u, e.v) == g.pair_key(u, v));
            if u != v && !g.has_edge(u, v) && !dup {
                events.push(EdgeEvent::insert(u, v, 1.0));
            }
        }
        let summary = bc.process_batch(&mut g, &Batch::new(events))?;
        println!(
            "batch {round}: {} paths resampled, {} nodes affected",
            summary.resampled, summary.affected
        );
    }
    let err = bc.scores().max_abs_error(&brandes_exact(&g)?);
    println!("max abs error after updates: {err:.4}");
    Ok(())
}

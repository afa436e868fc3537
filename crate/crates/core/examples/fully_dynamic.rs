//! Mixed insertions and deletions on an undirected graph (DA) and a
//! directed one (DAD), with the sample size following the diameter bound.

use dynbc::bench::{build_scenario, ScenarioKind};
use dynbc::graph::{generate, Model};
use dynbc::{brandes_exact, DynamicBc, Mode, SamplingParams};

fn replay(name: &str, directed: bool, mode: Mode) -> dynbc::Result<()> {
    let g = generate(&Model::DorogovtsevMendes { n: 800 }, directed, 2)?;
    let scenario = build_scenario(&g, &[], ScenarioKind::RandomInsertDelete, 160, 16, 9)?;
    let mut graph = scenario.initial.clone();
    let mut bc = DynamicBc::new(&graph, SamplingParams::new(0.1, 0.1, 4)?, mode)?;
    println!("{name}: r = {}, bound = {}", bc.r(), bc.vd_bound());
    for batch in &scenario.batches {
        let s = bc.process_batch(&mut graph, batch)?;
        if s.r_after > s.r_before {
            println!("  bound rose to {}, r {} -> {}", s.vd_bound, s.r_before, s.r_after);
        }
    }
    let err = bc.scores().max_abs_error(&brandes_exact(&graph)?);
    println!("  final r = {}, extra sources = {}, max abs error = {err:.4}", bc.r(), bc.aux_count());
    Ok(())
}

fn main() -> dynbc::Result<()> {
    replay("undirected", false, Mode::Da)?;
    replay("directed", true, Mode::Dad)
}

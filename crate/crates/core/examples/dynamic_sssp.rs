//! Keeping one source's distances and path counts current under a batch.

use dynbc::dyn_sssp::{update_sssp, DynSssp, Workspace};
use dynbc::{compute_extended_sssp, Batch, DynGraph, EdgeEvent};

fn main() -> dynbc::Result<()> {
    let mut g = DynGraph::from_weighted_edges(
        5,
        true,
        &[(0, 1, 2.0), (1, 2, 2.0), (0, 3, 1.0), (3, 2, 4.0), (2, 4, 1.0)],
    )?;
    let mut state = DynSssp::new(&g, 0, false, None)?;
    let mut ws = Workspace::new(g.n());
    println!("before: dist {:?} sigma {:?}", state.dist, state.sigma);

    let batch = Batch::new(vec![EdgeEvent::set_weight(3, 2, 3.0), EdgeEvent::delete(2, 4), EdgeEvent::insert(3, 4, 2.0)]);
    let edits = g.apply_batch(&batch)?;
    let affected = update_sssp(&g, &mut state, &edits, None, &mut ws)?;
    println!("after:  dist {:?} sigma {:?}", state.dist, state.sigma);
    println!("affected nodes {:?}, edges scanned {}", affected.nodes, affected.touched_edges);

    let fresh = compute_extended_sssp(&g, 0)?;
    assert_eq!(fresh.sigma, state.sigma);
    Ok(())
}

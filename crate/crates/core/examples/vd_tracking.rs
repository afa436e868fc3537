//! Tracking a vertex-diameter bound while components merge and split.

use dynbc::dyn_vd::VdTracker;
use dynbc::{Batch, DynGraph, EdgeEvent};

fn main() -> dynbc::Result<()> {
    let mut g = DynGraph::from_edges(8, false, &[(0, 1), (1, 2), (3, 4), (5, 6), (6, 7)])?;
    let mut tracker = VdTracker::new(&g)?;
    println!("start:  sources {:?} bound {}", tracker.source_nodes(), tracker.bound());

    let steps = [
        ("merge", Batch::new(vec![EdgeEvent::insert(2, 3, 1.0), EdgeEvent::insert(4, 5, 1.0)])),
        ("split", Batch::new(vec![EdgeEvent::delete(3, 4)])),
        ("isolate", Batch::new(vec![EdgeEvent::delete(0, 1)])),
    ];
    for (name, batch) in steps {
        let edits = g.apply_batch(&batch)?;
        let bound = tracker.update(&g, &edits)?;
        println!("{name:<7} sources {:?} bound {bound}", tracker.source_nodes());
    }
    Ok(())
}

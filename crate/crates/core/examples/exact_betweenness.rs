//! Exact betweenness of a small graph: two triangles joined by a bridge.

use dynbc::{brandes_exact, DynGraph};

fn main() -> dynbc::Result<()> {
    let g = DynGraph::from_edges(6, false, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])?;
    let scores = brandes_exact(&g)?;
    for (v, s) in scores.as_slice().iter().enumerate() {
        println!("node {v}: {s:.4}");
    }
    // the bridge endpoints carry every cross pair
    assert!(scores[2] > scores[0] && scores[3] > scores[5]);
    Ok(())
}

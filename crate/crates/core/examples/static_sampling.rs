//! Static sampling approximation against the exact scores.

use dynbc::graph::{generate, Model};
use dynbc::{brandes_exact, rk_run, SamplingParams};

fn main() -> dynbc::Result<()> {
    let g = generate(&Model::DorogovtsevMendes { n: 1000 }, false, 7)?;
    let params = SamplingParams::new(0.05, 0.1, 1)?;
    let approx = rk_run(&g, &params)?;
    let exact = brandes_exact(&g)?;
    println!("vertex-diameter bound {} ({})", approx.vd_bound.value, approx.vd_bound.class);
    println!("samples               {}", approx.r);
    println!("max abs error         {:.5}", approx.scores.max_abs_error(&exact));
    println!("mean abs error        {:.6}", approx.scores.mean_abs_error(&exact));
    Ok(())
}

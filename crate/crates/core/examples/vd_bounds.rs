//! Vertex-diameter bounds for each graph class next to the exact value.

use dynbc::graph::{assign_weights, exact_vertex_diameter, generate, Model, WeightDist};
use dynbc::vd::{vd_lower_bound_sampled, vd_ub_component_size};
use dynbc::{vd_upper_bound, DynGraph};

fn report(name: &str, g: &DynGraph) -> dynbc::Result<()> {
    let ub = vd_upper_bound(g);
    println!(
        "{name:<22} exact {:>3}  sampled lower {:>3}  upper {:>6.2} ({})  component {:>4}",
        exact_vertex_diameter(g),
        vd_lower_bound_sampled(g, 8, 0)?,
        ub.value,
        ub.class,
        vd_ub_component_size(g),
    );
    Ok(())
}

fn main() -> dynbc::Result<()> {
    let dm = generate(&Model::DorogovtsevMendes { n: 300 }, false, 1)?;
    report("undirected", &dm)?;
    report("undirected weighted", &assign_weights(&dm, WeightDist::Uniform { low: 1.0, high: 3.0 }, 2)?)?;
    let cycle = generate(&Model::Cycle { n: 40 }, true, 0)?;
    report("strongly connected", &cycle)?;
    let er = generate(&Model::ErdosRenyi { n: 300, p: 0.006 }, true, 3)?;
    report("directed", &er)?;
    report("directed weighted", &assign_weights(&er, WeightDist::Integer { low: 1, high: 5 }, 4)?)?;
    Ok(())
}

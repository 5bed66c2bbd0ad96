//! Refinement: rerun the improvement seeded with the previous output grown
//! by its neighborhood, typically with a different delta.
//!
//! ```bash
//! cargo run -p flowcut --example refine_pass
//! ```

use std::fs::File;
use std::io::BufReader;

use flowcut::io::read_matrix_market;
use flowcut::{refine, simple_local, NodeSet};

fn main() -> anyhow::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/collab379.mtx");
    let (graph, _) = read_matrix_market(BufReader::new(File::open(path)?))?;

    let hub = 42u32;
    let hood = graph.neighborhood(&NodeSet::from_ids(&graph, [hub])?);
    let seed = NodeSet::from_ids(
        &graph,
        std::iter::once(hub).chain(hood.members().iter().copied()),
    )?;

    // first pass: strong regularization keeps the search tight
    let first = simple_local(&graph, &seed, 0.6)?;
    println!(
        "first pass  (delta 0.6): |S| = {:>3}, phi = {:.4}, explored {:.0}",
        first.best_set.len(),
        first.best_conductance,
        first.explored_volume
    );

    // refinement: grow by the neighborhood, relax the regularization
    let refined = refine(&graph, &first.best_set, 0.1)?;
    println!(
        "refinement  (delta 0.1): |S| = {:>3}, phi = {:.4}, explored {:.0}",
        refined.best_set.len(),
        refined.best_conductance,
        refined.explored_volume
    );

    assert!(refined.best_conductance <= first.best_conductance + 1e-12);
    println!(
        "\nconductance improved {:.4} -> {:.4}",
        first.best_conductance, refined.best_conductance
    );
    Ok(())
}

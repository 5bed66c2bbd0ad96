//! The cut quality guarantee, checked empirically.
//!
//! For any target set C contained in the seed set R, the returned S* has
//! phi(S*) <= phi(C). For targets that merely overlap R well (at least
//! vol(R)/vol(V) + gamma * vol(R-bar)/vol(V) of C's volume inside R for some
//! gamma > delta) the guarantee degrades gracefully to
//! phi(S*) <= phi(C) / (gamma - delta).
//!
//! ```bash
//! cargo run -p flowcut --example quality_guarantee
//! ```

use flowcut::{check_quality_guarantee, simple_local, Graph, NodeSet};

fn main() -> flowcut::Result<()> {
    let edges = [
        (0, 1, 1.0),
        (0, 2, 1.0),
        (1, 2, 1.0),
        (2, 3, 1.0),
        (3, 4, 1.0),
        (3, 5, 1.0),
        (4, 5, 1.0),
    ];
    let (graph, _) = Graph::from_edges(6, edges)?;
    let seed = NodeSet::from_ids(&graph, [0, 1])?;
    let delta = 0.0;
    let result = simple_local(&graph, &seed, delta)?;
    println!(
        "S* = {:?} with phi = {:.4}\n",
        result.best_set.members(),
        result.best_conductance
    );

    // clause 1: C inside R
    for ids in [vec![0u32], vec![1], vec![0, 1]] {
        let c = NodeSet::from_ids(&graph, ids.iter().copied())?;
        let holds = check_quality_guarantee(&graph, &seed, delta, &result.best_set, &c, 0.0)?;
        println!(
            "C = {:?} (inside R):  phi(S*) {:.4} <= phi(C) {:.4}  -> {holds}",
            c.members(),
            result.best_conductance,
            graph.conductance(&c)?
        );
    }

    // clause 2: C overlaps R well; gamma solved from the overlap condition
    let c = NodeSet::from_ids(&graph, [0, 1, 2])?;
    let gamma = 0.4;
    let holds = check_quality_guarantee(&graph, &seed, delta, &result.best_set, &c, gamma)?;
    println!(
        "\nC = {:?} (overlap), gamma = {gamma}: phi(S*) {:.4} <= phi(C)/(gamma-delta) {:.4}  -> {holds}",
        c.members(),
        result.best_conductance,
        graph.conductance(&c)? / (gamma - delta)
    );

    // an inadmissible gamma is reported as not applicable
    match check_quality_guarantee(&graph, &seed, delta, &result.best_set, &c, 0.9) {
        Err(e) => println!("gamma = 0.9: {e}"),
        Ok(_) => unreachable!("overlap condition cannot hold for gamma = 0.9"),
    }
    Ok(())
}

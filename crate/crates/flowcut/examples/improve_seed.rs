//! Improve a seed community in the bundled collaboration network.
//!
//! Seeds a hub author's closed neighborhood and asks for a lower-conductance
//! set nearby, with moderate locality regularization.
//!
//! ```bash
//! cargo run -p flowcut --example improve_seed
//! ```

use std::fs::File;
use std::io::BufReader;

use flowcut::io::read_matrix_market;
use flowcut::{simple_local, NodeSet};

fn main() -> anyhow::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/collab379.mtx");
    let (graph, _) = read_matrix_market(BufReader::new(File::open(path)?))?;
    println!(
        "collab379: {} nodes, {} edges, volume {}",
        graph.node_count(),
        graph.edge_count(),
        graph.total_volume()
    );

    // hub with the largest weighted degree
    let hub = (0..graph.node_count() as u32)
        .max_by(|&a, &b| graph.degree(a).partial_cmp(&graph.degree(b)).unwrap())
        .unwrap();
    let hood = graph.neighborhood(&NodeSet::from_ids(&graph, [hub])?);
    let seed = NodeSet::from_ids(
        &graph,
        std::iter::once(hub).chain(hood.members().iter().copied()),
    )?;
    println!(
        "seed: node {hub} and its {} neighbors, vol {}, phi {:.4}",
        hood.len(),
        seed.volume(),
        graph.conductance(&seed)?
    );

    let result = simple_local(&graph, &seed, 0.3)?;
    println!(
        "\nimproved set: {} nodes, phi {:.4} (from {:.4})",
        result.best_set.len(),
        result.best_conductance,
        graph.conductance(&seed)?
    );
    println!("alpha trace: {:?}", result.alpha_trace);
    println!(
        "flow calls: {}, explored volume {:.0} of {:.0} (bound {:.0})",
        result.flow_calls,
        result.explored_volume,
        graph.total_volume(),
        result.exploration_bound
    );
    println!("members: {:?}", result.best_set.members());
    Ok(())
}

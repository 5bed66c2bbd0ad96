//! Set-level graph measures: volume, boundary, neighborhood, conductance.
//!
//! ```bash
//! cargo run -p flowcut --example measures
//! ```

use flowcut::{Graph, NodeSet};

fn main() -> flowcut::Result<()> {
    // two triangles joined by a bridge
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
    println!(
        "barbell graph: {} nodes, {} edges, total volume {}",
        graph.node_count(),
        graph.edge_count(),
        graph.total_volume()
    );

    for ids in [vec![0u32, 1], vec![0, 1, 2], vec![4, 5]] {
        let s = NodeSet::from_ids(&graph, ids.iter().copied())?;
        println!(
            "S = {:?}: vol = {}, boundary = {}, Neigh = {:?}, phi = {:.4}",
            s.members(),
            s.volume(),
            s.boundary(),
            graph.neighborhood(&s).members(),
            graph.conductance(&s)?
        );
    }

    // conductance is symmetric under complement
    let s = NodeSet::from_ids(&graph, [0, 1, 2])?;
    let c = s.complement(&graph);
    println!(
        "phi({:?}) = {:.4} = phi({:?}) = {:.4}",
        s.members(),
        graph.conductance(&s)?,
        c.members(),
        graph.conductance(&c)?
    );
    Ok(())
}

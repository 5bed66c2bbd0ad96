//! One three-stage local flow run, step by step: initialize the local graph
//! around the seeds, solve, expand on saturated sink arcs, repeat.
//!
//! ```bash
//! cargo run -p flowcut --example local_flow_stages
//! ```

use flowcut::local_flow::expand;
use flowcut::{
    exploration_bound, initialize_local_graph, three_stage_flow, AugmentedParams, Graph, NodeSet,
};

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
    let params = AugmentedParams::new(&graph, &seed, 0.5, 0.0)?;

    // manual walk through the stages
    let mut local = initialize_local_graph(&graph, &seed, &params)?;
    println!(
        "initial local graph: nodes {:?}, explored volume {}",
        local.nodes(),
        local.explored_volume()
    );

    let mut round = 0;
    loop {
        round += 1;
        let checkpoint = local.saturation_checkpoint();
        let pushed = local.solve_max_flow();
        let saturated = local.saturated_sink_nodes(&checkpoint);
        println!(
            "round {round}: pushed {pushed:.3} (total {:.3}), newly saturated sink arcs {saturated:?}",
            local.net_flow_total()
        );
        if saturated.is_empty() {
            break;
        }
        expand(&mut local, &saturated, &graph, &params);
        println!(
            "         expanded to nodes {:?}, explored volume {}",
            local.nodes(),
            local.explored_volume()
        );
    }
    println!(
        "source side of the min cut: {:?}, flow {:.3}\n",
        local.source_side(),
        local.net_flow_total()
    );

    // the packaged procedure does the same thing in one call
    let result = three_stage_flow(&graph, &seed, &params)?;
    println!(
        "three_stage_flow: flow {:.3}, S = {:?}, iterations {}, expanded {:?}",
        result.flow_value,
        result.source_set.members(),
        result.iterations,
        result.expanded
    );
    println!(
        "explored volume {} <= bound {:.2}",
        result.explored_volume,
        exploration_bound(&seed, &params)
    );
    Ok(())
}

//! Swap in your own max-flow subroutine.
//!
//! The three-stage procedure treats the solver as a black box over the
//! residual API: any implementation that leaves no traversable s-t path
//! produces the same flow value and the same (minimal) source set. This
//! example plugs in a plain Edmonds-Karp and compares it with the bundled
//! Dinic solver.
//!
//! ```bash
//! cargo run -p flowcut --example custom_solver
//! ```

use std::collections::VecDeque;

use flowcut::maxflow::{LocalNode, SINK, SOURCE};
use flowcut::{
    three_stage_flow_with_solver, AugmentedParams, DinicSolver, Graph, LocalFlowGraph,
    MaxFlowSolver, NodeSet,
};

/// Shortest augmenting paths, one at a time.
struct EdmondsKarp;

impl MaxFlowSolver for EdmondsKarp {
    fn solve(&mut self, graph: &mut LocalFlowGraph) -> f64 {
        let mut total = 0.0;
        loop {
            let n = graph.local_node_count();
            let mut parent: Vec<Option<u32>> = vec![None; n];
            let mut seen = vec![false; n];
            seen[SOURCE.0 as usize] = true;
            let mut queue = VecDeque::from([SOURCE.0]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &arc in graph.arcs_from(LocalNode(u)) {
                    let v = graph.arc_target(arc).0;
                    if !seen[v as usize] && graph.is_traversable(arc) {
                        seen[v as usize] = true;
                        parent[v as usize] = Some(arc);
                        if v == SINK.0 {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !seen[SINK.0 as usize] {
                return total;
            }
            let mut bottleneck = f64::INFINITY;
            let mut v = SINK.0;
            while v != SOURCE.0 {
                let arc = parent[v as usize].unwrap();
                bottleneck = bottleneck.min(graph.residual(arc));
                v = graph.arc_source(arc).0;
            }
            let mut v = SINK.0;
            while v != SOURCE.0 {
                let arc = parent[v as usize].unwrap();
                graph.push(arc, bottleneck);
                v = graph.arc_source(arc).0;
            }
            total += bottleneck;
        }
    }
}

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

    let dinic = three_stage_flow_with_solver(&graph, &seed, &params, &mut DinicSolver)?;
    let ek = three_stage_flow_with_solver(&graph, &seed, &params, &mut EdmondsKarp)?;

    println!(
        "dinic:        flow {:.4}, S = {:?}",
        dinic.flow_value,
        dinic.source_set.members()
    );
    println!(
        "edmonds-karp: flow {:.4}, S = {:?}",
        ek.flow_value,
        ek.source_set.members()
    );
    assert!((dinic.flow_value - ek.flow_value).abs() < 1e-9);
    assert_eq!(dinic.source_set.members(), ek.source_set.members());
    println!("\nsame flow value, same minimal source-side cut");
    Ok(())
}

//! Strongly-local flow-based cut improvement.
//!
//! Given an undirected weighted graph and a seed set R, find a nearby set of
//! lower conductance by solving a sequence of localized max-flow problems,
//! without ever touching most of the graph. The locality knob δ ≥ 0 inflates
//! the sink capacities of the implicit augmented graph, which acts as an
//! ℓ1 penalty on the output volume: larger δ keeps the result (and the work)
//! closer to the seeds, δ = 0 recovers the unregularized objective.
//!
//! ```
//! use flowcut::{Graph, NodeSet, simple_local};
//!
//! // two triangles joined by a bridge; seed inside the left one
//! let edges = [
//!     (0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0),
//!     (2, 3, 1.0),
//!     (3, 4, 1.0), (3, 5, 1.0), (4, 5, 1.0),
//! ];
//! let (graph, _) = Graph::from_edges(6, edges).unwrap();
//! let seed = NodeSet::from_ids(&graph, [0, 1]).unwrap();
//!
//! let result = simple_local(&graph, &seed, 0.0).unwrap();
//! assert_eq!(result.best_set.members(), &[0, 1, 2]);
//! assert!((result.best_conductance - 1.0 / 7.0).abs() < 1e-9);
//! ```
//!
//! The `examples/` directory walks through each capability: set measures,
//! the augmented objectives, the three-stage local flow, the improvement
//! loop, δ-sweeps, refinement, custom solvers, and strong locality at scale.

pub mod augmented;
mod error;
pub mod graph;
pub mod io;
pub mod local_flow;
pub mod maxflow;
pub mod oracle;
pub mod run;
pub mod simple_local;

#[cfg(test)]
pub(crate) mod testutil;

pub use augmented::{
    conductance_certificate, convert_to_l1, cut_objective, l1_objective, AugmentedParams,
    CapacitySpec,
};
pub use error::{Error, Result};
pub use graph::{BuildStats, Graph, NodeSet};
pub use local_flow::{
    exploration_bound, initialize_local_graph, three_stage_flow, three_stage_flow_with_solver,
    ExplorationState, FlowResult,
};
pub use maxflow::{DinicSolver, LocalFlowGraph, MaxFlowSolver};
pub use run::{graph_stats, run_sweep, GraphStats, RunRecord, SweepOptions};
pub use simple_local::{
    check_quality_guarantee, modified_quotient, refine, relative_quotient, simple_local,
    simple_local_with, ImprovementResult, SimpleLocalConfig,
};

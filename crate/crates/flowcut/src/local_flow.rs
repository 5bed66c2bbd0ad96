//! The three-stage local max-flow procedure: grow a local graph around the
//! seed set, solve flows, expand on saturated sink arcs, and repeat until the
//! flow is a maximum of the full (never materialized) augmented graph.
//!
//! The returned flow value and source set are exact for the whole graph even
//! though only a neighborhood of the seed set is ever touched; the explored
//! volume is bounded by vol(R)·(1 + 2/ε) + ∂R.

use crate::augmented::{AugmentedParams, CapacitySpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::maxflow::{DinicSolver, LocalFlowGraph, MaxFlowSolver, NodeStatus};

/// Bookkeeping of the growth process: which nodes have been expanded (P_x)
/// and how much of the graph has been touched.
#[derive(Debug, Clone, Default)]
pub struct ExplorationState {
    expanded: Vec<u32>,
}

impl ExplorationState {
    /// P_x: nodes expanded so far, in expansion order.
    pub fn expanded(&self) -> &[u32] {
        &self.expanded
    }

    /// Q: touched-but-unexpanded nodes of the local graph, ascending.
    pub fn frontier(&self, l: &LocalFlowGraph) -> Vec<u32> {
        let mut out: Vec<u32> = l
            .nodes()
            .iter()
            .copied()
            .filter(|&v| l.status(v) == Some(NodeStatus::Frontier))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Outcome of a full three-stage run.
#[derive(Debug, Clone)]
pub struct FlowResult {
    /// Max s→t flow of the full augmented graph.
    pub flow_value: f64,
    /// Minimal source side of the min cut; empty when the full α·vol(R)
    /// supply was routed (no improving cut at this α).
    pub source_set: NodeSet,
    /// Volume of the explored subgraph (counted within the subgraph).
    pub explored_volume: f64,
    /// Number of expand/solve/update rounds.
    pub iterations: u32,
    /// P_x: every node that was expanded, ascending.
    pub expanded: Vec<u32>,
}

/// Builds the initial local graph: source arcs to R, all edges among R, all
/// edges from R to Neigh(R), and sink arcs from Neigh(R). Edges among
/// frontier nodes are deliberately absent.
pub fn initialize_local_graph(
    g: &Graph,
    seed: &NodeSet,
    p: &AugmentedParams,
) -> Result<LocalFlowGraph> {
    if seed.is_empty() {
        return Err(Error::EmptySeed);
    }
    let caps = CapacitySpec::new(g, p);
    let mut l = LocalFlowGraph::new(p.tolerance());
    for &r in seed.members() {
        l.add_seed(r, caps.source_edge(r));
    }
    for &r in seed.members() {
        for (v, w) in g.neighbors(r) {
            if seed.contains(v) {
                if r < v {
                    l.add_internal_edge(r, v, caps.internal_edge(w));
                }
            } else {
                if !l.contains(v) {
                    l.add_frontier(v, caps.sink_edge(v));
                }
                l.add_internal_edge(r, v, caps.internal_edge(w));
            }
        }
    }
    Ok(l)
}

/// Stage 1: expands the local graph around each node of `x`. All missing
/// neighbors enter as frontier nodes with their sink arcs; missing incident
/// edges are added. Existing flow is untouched.
pub fn expand(l: &mut LocalFlowGraph, x: &[u32], g: &Graph, p: &AugmentedParams) {
    let caps = CapacitySpec::new(g, p);
    for &node in x {
        debug_assert_eq!(l.status(node), Some(NodeStatus::Frontier));
        for (v, w) in g.neighbors(node) {
            match l.status(v) {
                // edge already present from the wired side
                Some(NodeStatus::Seed) | Some(NodeStatus::Expanded) => {}
                Some(NodeStatus::Frontier) => {
                    l.add_internal_edge(node, v, caps.internal_edge(w));
                }
                None => {
                    l.add_frontier(v, caps.sink_edge(v));
                    l.add_internal_edge(node, v, caps.internal_edge(w));
                }
            }
        }
        l.mark_expanded(node);
    }
}

/// Runs the full three-stage procedure with the bundled Dinic solver.
pub fn three_stage_flow(g: &Graph, seed: &NodeSet, p: &AugmentedParams) -> Result<FlowResult> {
    three_stage_flow_with_solver(g, seed, p, &mut DinicSolver)
}

/// Runs the full three-stage procedure with a caller-provided max-flow
/// subroutine.
pub fn three_stage_flow_with_solver(
    g: &Graph,
    seed: &NodeSet,
    p: &AugmentedParams,
    solver: &mut impl MaxFlowSolver,
) -> Result<FlowResult> {
    let mut l = initialize_local_graph(g, seed, p)?;
    let mut state = ExplorationState::default();
    let mut iterations = 0u32;
    let iteration_cap = g.node_count() as u32 + 2;
    loop {
        iterations += 1;
        if iterations > iteration_cap {
            return Err(Error::Internal(format!(
                "local flow did not converge within {iteration_cap} iterations"
            )));
        }
        let checkpoint = l.saturation_checkpoint();
        solver.solve(&mut l);
        let x = l.saturated_sink_nodes(&checkpoint);
        if x.is_empty() {
            break;
        }
        expand(&mut l, &x, g, p);
        state.expanded.extend_from_slice(&x);
    }

    let flow_value = l.net_flow_total();
    let supply = p.alpha() * seed.volume();
    let side = if flow_value >= supply * (1.0 - p.tolerance()) {
        Vec::new()
    } else {
        l.source_side()
    };
    let source_set = NodeSet::from_ids(g, side)?;
    let mut expanded = state.expanded.clone();
    expanded.sort_unstable();
    Ok(FlowResult {
        flow_value,
        source_set,
        explored_volume: l.explored_volume(),
        iterations,
        expanded,
    })
}

/// The locality guarantee: vol(G_exp) ≤ vol(R)·(1 + 2/ε) + ∂R.
///
/// The formula value is finite whenever the seed has positive volume (ε ≥
/// f(R) > 0), including at δ = 0, but locality is only *guaranteed* for
/// δ > 0, so callers should treat the δ = 0 value as informational.
pub fn exploration_bound(seed: &NodeSet, p: &AugmentedParams) -> f64 {
    seed.volume() * (1.0 + 2.0 / p.epsilon()) + seed.boundary()
}

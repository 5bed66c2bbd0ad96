//! Independent brute-force references for the test suite: exhaustive subset
//! minimization of the cut and quotient objectives, and exhaustive s-t cut
//! enumeration as a max-flow value oracle. These recompute everything from
//! raw edges and degrees, independent of the flow machinery they certify.
//!
//! Hard size caps keep accidental exponential blowups out of CI.

use crate::augmented::AugmentedParams;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::maxflow::LocalFlowGraph;

/// Exhaustive-enumeration cap for subset objectives (2^20 evaluations).
pub const MAX_SUBSET_NODES: usize = 20;
/// Exhaustive-enumeration cap for s-t cut oracles (2^14 side sets).
pub const MAX_CUT_NODES: usize = 14;

/// Result of an exhaustive subset sweep.
#[derive(Debug, Clone)]
pub struct SubsetSweepReport {
    /// Minimum objective value over feasible subsets; `None` when no subset
    /// was feasible.
    pub best_value: Option<f64>,
    /// Every argmin subset (ascending ids), within a 1e-12 relative tie
    /// window.
    pub best_sets: Vec<Vec<u32>>,
    /// Number of subsets enumerated.
    pub evaluated: u64,
}

struct SubsetScan {
    edges: Vec<(u32, u32, f64)>,
    degrees: Vec<f64>,
    seed_mask: u64,
}

impl SubsetScan {
    fn new(g: &Graph, seed: &NodeSet) -> Self {
        let mut seed_mask = 0u64;
        for &v in seed.members() {
            seed_mask |= 1 << v;
        }
        SubsetScan {
            edges: g.edges().collect(),
            degrees: (0..g.node_count() as u32).map(|v| g.degree(v)).collect(),
            seed_mask,
        }
    }

    fn boundary(&self, mask: u64) -> f64 {
        self.edges
            .iter()
            .filter(|&&(u, v, _)| (mask >> u & 1) != (mask >> v & 1))
            .map(|&(_, _, w)| w)
            .sum()
    }

    fn split_volume(&self, mask: u64) -> (f64, f64) {
        let mut vol_in = 0.0;
        let mut vol_out = 0.0;
        for (v, d) in self.degrees.iter().enumerate() {
            if mask >> v & 1 == 1 {
                if self.seed_mask >> v & 1 == 1 {
                    vol_in += d;
                } else {
                    vol_out += d;
                }
            }
        }
        (vol_in, vol_out)
    }
}

fn sweep(g: &Graph, mut objective: impl FnMut(u64) -> Option<f64>) -> Result<SubsetSweepReport> {
    let n = g.node_count();
    if n > MAX_SUBSET_NODES {
        return Err(Error::OracleCapExceeded {
            nodes: n,
            cap: MAX_SUBSET_NODES,
        });
    }
    let mut best: Option<f64> = None;
    let mut best_sets: Vec<Vec<u32>> = Vec::new();
    let mut evaluated = 0u64;
    for mask in 0..(1u64 << n) {
        evaluated += 1;
        let Some(value) = objective(mask) else {
            continue;
        };
        let tie = 1e-12 * value.abs().max(1.0);
        match best {
            Some(b) if value > b + tie => {}
            Some(b) if value >= b - tie => {
                best_sets.push(mask_to_ids(mask, n));
            }
            _ => {
                best = Some(value);
                best_sets = vec![mask_to_ids(mask, n)];
            }
        }
    }
    Ok(SubsetSweepReport {
        best_value: best,
        best_sets,
        evaluated,
    })
}

fn mask_to_ids(mask: u64, n: usize) -> Vec<u32> {
    (0..n as u32).filter(|v| mask >> v & 1 == 1).collect()
}

/// Exact minimum of the augmented-graph cut objective over all S ⊆ V
/// (including the empty set, whose value is the α·vol(R) fallback).
pub fn brute_min_cut_objective(
    g: &Graph,
    seed: &NodeSet,
    p: &AugmentedParams,
) -> Result<SubsetSweepReport> {
    let scan = SubsetScan::new(g, seed);
    let alpha = p.alpha();
    let eps = p.epsilon();
    let seed_volume = seed.volume();
    sweep(g, |mask| {
        let (vol_in, vol_out) = scan.split_volume(mask);
        Some(alpha * seed_volume + scan.boundary(mask) - alpha * vol_in + alpha * eps * vol_out)
    })
}

/// Exact minimum of the modified quotient ∂S / (vol(R∩S) − ε·vol(R̄∩S)) over
/// subsets with positive denominator.
pub fn brute_min_quotient(g: &Graph, seed: &NodeSet, epsilon: f64) -> Result<SubsetSweepReport> {
    let scan = SubsetScan::new(g, seed);
    sweep(g, |mask| {
        let (vol_in, vol_out) = scan.split_volume(mask);
        let denominator = vol_in - epsilon * vol_out;
        // same cancellation guard as the quotient implementation: a value
        // this close to zero is nonpositive in real arithmetic
        if denominator > 1e-12 * (vol_in + epsilon * vol_out) {
            Some(scan.boundary(mask) / denominator)
        } else {
            None
        }
    })
}

/// Max-flow value by exhaustive min-cut enumeration over all source-side
/// subsets of the local graph's original nodes (strong duality).
pub fn brute_max_flow(l: &LocalFlowGraph) -> Result<f64> {
    let nodes = l.nodes();
    if nodes.len() > MAX_CUT_NODES {
        return Err(Error::OracleCapExceeded {
            nodes: nodes.len(),
            cap: MAX_CUT_NODES,
        });
    }
    let mut best = f64::INFINITY;
    for mask in 0..(1u64 << nodes.len()) {
        let side: Vec<u32> = nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        best = best.min(l.cut_capacity(&side));
    }
    Ok(best)
}

/// Builds the complete augmented graph as a local flow graph: every node,
/// every edge, source arcs for seeds, sink arcs for the rest. Test support
/// for certifying the lazily grown path against the explicit graph.
pub fn materialize_augmented(g: &Graph, seed: &NodeSet, p: &AugmentedParams) -> LocalFlowGraph {
    let caps = crate::augmented::CapacitySpec::new(g, p);
    let mut l = LocalFlowGraph::new(p.tolerance());
    for &r in seed.members() {
        l.add_seed(r, caps.source_edge(r));
    }
    for v in 0..g.node_count() as u32 {
        if !seed.contains(v) {
            l.add_frontier(v, caps.sink_edge(v));
        }
    }
    for (u, v, w) in g.edges() {
        l.add_internal_edge(u, v, caps.internal_edge(w));
    }
    l
}

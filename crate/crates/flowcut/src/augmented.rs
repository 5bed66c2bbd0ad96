//! The (modified) augmented graph objectives and the ℓ1 conversion.
//!
//! The augmented graph wires a virtual source to every seed node with
//! capacity α·d_r and every non-seed node to a virtual sink with capacity
//! α·ε·d_v, where ε = f(R) + δ and f(R) = vol(R)/vol(R̄). This module owns
//! those capacity formulas; the augmented graph itself is never materialized
//! globally; the local flow machinery queries capacities lazily as it grows.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Parameters of the modified augmented graph G'_R(α, δ).
#[derive(Debug, Clone, Copy)]
pub struct AugmentedParams {
    alpha: f64,
    delta: f64,
    f_ratio: f64,
    epsilon: f64,
    tolerance: f64,
}

impl AugmentedParams {
    /// Validates α > 0, δ ≥ 0, and the seed precondition vol(R) ≤ vol(R̄)
    /// (with nonzero seed volume), then derives f(R) and ε.
    pub fn new(g: &Graph, seed: &NodeSet, alpha: f64, delta: f64) -> Result<Self> {
        if seed.is_empty() {
            return Err(Error::EmptySeed);
        }
        if seed.volume() <= 0.0 {
            return Err(Error::ZeroVolumeSeed);
        }
        let complement_volume = g.total_volume() - seed.volume();
        if seed.volume() > complement_volume {
            return Err(Error::SeedTooLarge {
                seed_volume: seed.volume(),
                complement_volume,
            });
        }
        if alpha <= 0.0 || !alpha.is_finite() {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
            });
        }
        if delta < 0.0 || !delta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "delta",
                value: delta,
            });
        }
        let f_ratio = seed.volume() / complement_volume;
        Ok(AugmentedParams {
            alpha,
            delta,
            f_ratio,
            epsilon: f_ratio + delta,
            tolerance: DEFAULT_TOLERANCE,
        })
    }

    /// Replaces the relative tolerance used for capacity comparisons.
    pub fn with_tolerance(mut self, tolerance: f64) -> Result<Self> {
        if tolerance <= 0.0 || !tolerance.is_finite() {
            return Err(Error::InvalidParameter {
                name: "tolerance",
                value: tolerance,
            });
        }
        self.tolerance = tolerance;
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// f(R) = vol(R)/vol(R̄).
    pub fn f_ratio(&self) -> f64 {
        self.f_ratio
    }

    /// ε = f(R) + δ.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }
}

/// Edge capacities of G'_R(α, δ), queried lazily by the local flow graph.
#[derive(Debug, Clone, Copy)]
pub struct CapacitySpec<'a> {
    graph: &'a Graph,
    params: &'a AugmentedParams,
}

impl<'a> CapacitySpec<'a> {
    pub fn new(graph: &'a Graph, params: &'a AugmentedParams) -> Self {
        CapacitySpec { graph, params }
    }

    /// Capacity of the source edge (s, r) for a seed node: α·d_r.
    pub fn source_edge(&self, r: u32) -> f64 {
        self.params.alpha * self.graph.degree(r)
    }

    /// Capacity of the sink edge (v, t) for a non-seed node: α·ε·d_v.
    pub fn sink_edge(&self, v: u32) -> f64 {
        self.params.alpha * self.params.epsilon * self.graph.degree(v)
    }

    /// Internal edges keep their original weight.
    pub fn internal_edge(&self, weight: f64) -> f64 {
        weight
    }
}

fn split_volume(seed: &NodeSet, s: &NodeSet, g: &Graph) -> (f64, f64) {
    let mut vol_in = 0.0;
    let mut vol_out = 0.0;
    for &v in s.members() {
        if seed.contains(v) {
            vol_in += g.degree(v);
        } else {
            vol_out += g.degree(v);
        }
    }
    (vol_in, vol_out)
}

/// Capacity of the s-t cut of G'_R(α, δ) induced by placing `s` on the source
/// side:
///
/// α·vol(R) + ∂S − α·vol(R∩S) + α·ε·vol(R̄∩S)
///
/// With δ = 0 this is the plain augmented-graph cut objective.
pub fn cut_objective(g: &Graph, seed: &NodeSet, p: &AugmentedParams, s: &NodeSet) -> f64 {
    let (vol_in, vol_out) = split_volume(seed, s, g);
    p.alpha() * seed.volume() + s.boundary() - p.alpha() * vol_in
        + p.alpha() * p.epsilon() * vol_out
}

/// The ℓ1-regularized objective over the plain augmented graph G_R(β):
///
/// β·vol(R) + ∂S − β·vol(R∩S) + β·f(R)·vol(R̄∩S) + κ·vol(S)
pub fn l1_objective(g: &Graph, seed: &NodeSet, beta: f64, kappa: f64, s: &NodeSet) -> f64 {
    let f_ratio = seed.volume() / (g.total_volume() - seed.volume());
    let (vol_in, vol_out) = split_volume(seed, s, g);
    beta * seed.volume() + s.boundary() - beta * vol_in
        + beta * f_ratio * vol_out
        + kappa * (vol_in + vol_out)
}

/// The (β, κ) pair for which minimizing the G'_R(α, δ) cut objective equals
/// minimizing the ℓ1-regularized G_R(β) objective:
///
/// κ = α·δ/(1 + f(R)), β = α + κ
pub fn convert_to_l1(p: &AugmentedParams) -> (f64, f64) {
    let kappa = p.alpha() * p.delta() / (1.0 + p.f_ratio());
    (p.alpha() + kappa, kappa)
}

/// Certifies that a cut strictly cheaper than the all-source-edges fallback
/// yields a set of conductance below α.
///
/// `cut_value` must be the cut objective of `s`. Returns φ(s) when
/// `cut_value < α·vol(R)` (beyond the relative tolerance), `None` otherwise.
/// The φ(s) < α assertion is an internal soundness check: a failure signals
/// an implementation bug, not user error.
pub fn conductance_certificate(
    g: &Graph,
    seed: &NodeSet,
    p: &AugmentedParams,
    s: &NodeSet,
    cut_value: f64,
) -> Option<f64> {
    let fallback = p.alpha() * seed.volume();
    if cut_value >= fallback * (1.0 - p.tolerance()) {
        return None;
    }
    let phi = g
        .conductance(s)
        .expect("a cut cheaper than the fallback cannot come from the empty or full set");
    assert!(
        phi < p.alpha(),
        "certificate violated: phi(S) = {phi} >= alpha = {}",
        p.alpha()
    );
    Some(phi)
}

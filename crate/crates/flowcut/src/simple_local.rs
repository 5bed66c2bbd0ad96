//! The outer improvement loop: repeatedly solve localized max-flow problems
//! for decreasing α until no cut beats the α·vol(R) fallback, returning the
//! set that minimizes the modified quotient score
//!
//! φ̄_R(S) = ∂S / (vol(R∩S) − ε·vol(R̄∩S)),  ε = f(R) + δ.
//!
//! δ ≥ 0 trades optimality region for locality: larger values keep the search
//! (and the explored volume) closer to the seed set.
//!
//! Each accepted α is the quotient score of the previous cut, so the α trace
//! is strictly decreasing and the loop is a Dinkelbach iteration on φ̄_R; it
//! terminates at the exact minimum. Every accepted cut also satisfies
//! φ(S) < α (the conductance certificate), which yields the quality
//! guarantees checked by [`check_quality_guarantee`].

use serde::Serialize;

use crate::augmented::{AugmentedParams, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::local_flow::{exploration_bound, three_stage_flow, FlowResult};

/// Quotient score with an explicit ε: ∂S / (vol(R∩S) − ε·vol(R̄∩S)).
/// `None` when the denominator is nonpositive (the set reaches too far
/// outside the seed set for the score to mean anything).
pub fn quotient_score(g: &Graph, seed: &NodeSet, epsilon: f64, s: &NodeSet) -> Option<f64> {
    let mut vol_in = 0.0;
    let mut vol_out = 0.0;
    for &v in s.members() {
        if seed.contains(v) {
            vol_in += g.degree(v);
        } else {
            vol_out += g.degree(v);
        }
    }
    let denominator = vol_in - epsilon * vol_out;
    // a denominator within cancellation noise of zero is nonpositive in real
    // arithmetic (eps >= f(R) makes the full vertex set cancel exactly)
    if denominator > 1e-12 * (vol_in + epsilon * vol_out) {
        Some(s.boundary() / denominator)
    } else {
        None
    }
}

/// The quotient score of S relative to the seed set, with ε = f(R).
pub fn relative_quotient(g: &Graph, seed: &NodeSet, s: &NodeSet) -> Option<f64> {
    let f_ratio = seed.volume() / (g.total_volume() - seed.volume());
    quotient_score(g, seed, f_ratio, s)
}

/// The modified quotient score, with ε = f(R) + δ taken from the params.
pub fn modified_quotient(
    g: &Graph,
    seed: &NodeSet,
    p: &AugmentedParams,
    s: &NodeSet,
) -> Option<f64> {
    quotient_score(g, seed, p.epsilon(), s)
}

/// Knobs for the improvement loop.
#[derive(Debug, Clone, Copy)]
pub struct SimpleLocalConfig {
    /// Relative tolerance for capacity and termination comparisons.
    pub tolerance: f64,
    /// Cap on α iterations; `None` means the node count (the loop provably
    /// terminates well before that).
    pub max_iterations: Option<u32>,
}

impl Default for SimpleLocalConfig {
    fn default() -> Self {
        SimpleLocalConfig {
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: None,
        }
    }
}

/// One row of per-iteration diagnostics: the α tried, the flow routed, and
/// the returned cut (empty when the full supply was routed).
#[derive(Debug, Clone, Serialize)]
pub struct IterationDiag {
    pub alpha: f64,
    pub flow: f64,
    pub set_size: usize,
    pub conductance: Option<f64>,
}

/// Final outcome of the improvement loop.
#[derive(Debug, Clone)]
pub struct ImprovementResult {
    /// S*: the minimizer of the modified quotient score.
    pub best_set: NodeSet,
    /// φ(S*).
    pub best_conductance: f64,
    /// Every α tried, strictly decreasing, starting at φ(R).
    pub alpha_trace: Vec<f64>,
    /// Number of localized flow solves.
    pub flow_calls: u32,
    /// Largest explored subgraph volume over all flow calls.
    pub explored_volume: f64,
    /// Exploration bound vol(R)(1 + 2/ε) + ∂R for these inputs.
    pub exploration_bound: f64,
    pub per_iteration: Vec<IterationDiag>,
}

/// Runs the improvement loop with default tolerances.
pub fn simple_local(g: &Graph, seed: &NodeSet, delta: f64) -> Result<ImprovementResult> {
    simple_local_with(g, seed, delta, &SimpleLocalConfig::default())
}

/// Runs the improvement loop.
///
/// Starting from α = φ(R), each round solves the localized max flow of
/// G'_R(α, δ); while the flow stays below the α·vol(R) fallback the returned
/// source set S strictly improves (φ(S) < α by the certificate), α drops to
/// φ̄_R(S), and the loop repeats. S* starts as R so the zero-iteration exit
/// (first flow already saturates the supply) returns the seed set itself.
pub fn simple_local_with(
    g: &Graph,
    seed: &NodeSet,
    delta: f64,
    config: &SimpleLocalConfig,
) -> Result<ImprovementResult> {
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

    let mut alpha = g.conductance(seed)?;
    let mut best_set = seed.clone();
    let mut alpha_trace = vec![alpha];
    let mut per_iteration = Vec::new();
    let mut flow_calls = 0u32;
    let mut explored_volume = 0.0f64;

    // the bound depends only on the seed set and epsilon, not on alpha; the
    // probe also validates delta and the tolerance up front
    let probe =
        AugmentedParams::new(g, seed, alpha.max(1.0), delta)?.with_tolerance(config.tolerance)?;
    let bound = exploration_bound(seed, &probe);

    if alpha > 0.0 {
        let max_iterations = config
            .max_iterations
            .unwrap_or_else(|| g.node_count() as u32 + 1);
        loop {
            if flow_calls >= max_iterations {
                return Err(Error::Internal(format!(
                    "alpha failed to converge within {max_iterations} iterations"
                )));
            }
            let p =
                AugmentedParams::new(g, seed, alpha, delta)?.with_tolerance(config.tolerance)?;
            let FlowResult {
                flow_value,
                source_set,
                explored_volume: explored,
                ..
            } = three_stage_flow(g, seed, &p)?;
            flow_calls += 1;
            explored_volume = explored_volume.max(explored);
            per_iteration.push(IterationDiag {
                alpha,
                flow: flow_value,
                set_size: source_set.len(),
                conductance: g.conductance(&source_set).ok(),
            });
            let supply = alpha * seed.volume();
            if flow_value >= supply * (1.0 - config.tolerance) {
                break;
            }
            let score = modified_quotient(g, seed, &p, &source_set)
                .expect("a cut cheaper than the fallback has a positive denominator");
            assert!(
                score < alpha,
                "quotient score failed to decrease: {score} >= {alpha}"
            );
            alpha = score;
            best_set = source_set;
            alpha_trace.push(alpha);
            if score <= 0.0 {
                // the cut has no boundary at all (a whole component): no set
                // can score below zero, so this is the global minimum
                break;
            }
        }
    }
    // alpha = 0 means the seed has no boundary: it is a union of components
    // and already optimal; there is no flow problem to solve.

    let best_conductance = g.conductance(&best_set)?;
    Ok(ImprovementResult {
        best_set,
        best_conductance,
        alpha_trace,
        flow_calls,
        explored_volume,
        exploration_bound: bound,
        per_iteration,
    })
}

/// One refinement step: grow the prior output by its neighborhood and rerun
/// the improvement loop with a (typically different) δ.
pub fn refine(g: &Graph, prior: &NodeSet, delta: f64) -> Result<ImprovementResult> {
    refine_with(g, prior, delta, &SimpleLocalConfig::default())
}

pub fn refine_with(
    g: &Graph,
    prior: &NodeSet,
    delta: f64,
    config: &SimpleLocalConfig,
) -> Result<ImprovementResult> {
    if prior.is_empty() {
        return Err(Error::EmptySeed);
    }
    let hood = g.neighborhood(prior);
    let grown_ids = prior.members().iter().chain(hood.members()).copied();
    let grown = NodeSet::from_ids(g, grown_ids)?;
    simple_local_with(g, &grown, delta, config)
}

/// Checks the applicable clause of the quality guarantee for a finished run.
///
/// Clause 1: C ⊆ R implies φ(S*) ≤ φ(C). Clause 2: for γ > δ with
/// vol(R∩C)/vol(C) ≥ vol(R)/vol(V) + γ·vol(R̄)/vol(V), φ(S*) ≤ φ(C)/(γ−δ).
/// Returns an error when neither clause's preconditions hold.
pub fn check_quality_guarantee(
    g: &Graph,
    seed: &NodeSet,
    delta: f64,
    s_star: &NodeSet,
    c: &NodeSet,
    gamma: f64,
) -> Result<bool> {
    let phi_star = g.conductance(s_star)?;
    let phi_c = g.conductance(c)?;
    let slack = |x: f64| 1e-9 * x.abs().max(1.0);

    if c.members().iter().all(|&v| seed.contains(v)) {
        return Ok(phi_star <= phi_c + slack(phi_c));
    }

    if gamma <= delta {
        return Err(Error::GuaranteeNotApplicable("gamma must exceed delta"));
    }
    let total = g.total_volume();
    let vol_overlap: f64 = c
        .members()
        .iter()
        .filter(|&&v| seed.contains(v))
        .map(|&v| g.degree(v))
        .sum();
    let lhs = vol_overlap / c.volume();
    let rhs = seed.volume() / total + gamma * (total - seed.volume()) / total;
    if lhs < rhs - 1e-12 {
        return Err(Error::GuaranteeNotApplicable(
            "seed overlap condition not met for this gamma",
        ));
    }
    let limit = phi_c / (gamma - delta);
    Ok(phi_star <= limit + slack(limit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::testutil::{barbell, path4, random_connected_graph, random_valid_seed, XorShift};

    #[test]
    fn quotient_examples() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();

        // S = R: quotient equals phi(R)
        let q = relative_quotient(&g, &r, &r).unwrap();
        assert!((q - 0.5).abs() < 1e-12);

        let s = NodeSet::from_ids(&g, [0, 1, 2]).unwrap();
        let q = relative_quotient(&g, &r, &s).unwrap();
        assert!((q - 1.0 / 2.8).abs() < 1e-12);

        // S = V: denominator is exactly zero
        let v = NodeSet::from_ids(&g, 0..6).unwrap();
        assert!(relative_quotient(&g, &r, &v).is_none());
    }

    #[test]
    fn modified_quotient_examples() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        // delta = 0 reduces to the relative quotient
        let p = AugmentedParams::new(&g, &r, 0.5, 0.0).unwrap();
        for ids in [vec![0u32, 1], vec![0, 1, 2], vec![0]] {
            let s = NodeSet::from_ids(&g, ids).unwrap();
            assert_eq!(
                modified_quotient(&g, &r, &p, &s),
                relative_quotient(&g, &r, &s)
            );
        }
        // delta = 0.6 (eps = 1): 1/(4-3) = 1 for the triangle
        let p = AugmentedParams::new(&g, &r, 0.5, 0.6).unwrap();
        let s = NodeSet::from_ids(&g, [0, 1, 2]).unwrap();
        assert!((modified_quotient(&g, &r, &p, &s).unwrap() - 1.0).abs() < 1e-12);
        // no outside nodes: plain boundary over volume
        assert!((modified_quotient(&g, &r, &p, &r).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn barbell_improvement_without_regularization() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        let res = simple_local(&g, &r, 0.0).unwrap();
        assert_eq!(res.best_set.members(), &[0, 1, 2]);
        assert!((res.best_conductance - 1.0 / 7.0).abs() < 1e-9);
        // alpha trace: phi(R) = 0.5, then the quotient of the found triangle
        assert_eq!(res.alpha_trace.len(), 2);
        assert!((res.alpha_trace[0] - 0.5).abs() < 1e-12);
        assert!((res.alpha_trace[1] - 5.0 / 14.0).abs() < 1e-9);
        assert_eq!(res.flow_calls, 2);
    }

    #[test]
    fn barbell_improvement_with_regularization_shrinks_output() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        let res = simple_local(&g, &r, 0.6).unwrap();
        assert_eq!(res.best_set.members(), &[0, 1]);
        assert!((res.best_conductance - 0.5).abs() < 1e-9);
        // zero-iteration exit: the first flow already meets the fallback
        assert_eq!(res.alpha_trace.len(), 1);
        assert_eq!(res.flow_calls, 1);
    }

    #[test]
    fn barbell_triangle_seed_is_already_optimal() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1, 2]).unwrap();
        let res = simple_local(&g, &r, 0.0).unwrap();
        assert_eq!(res.best_set.members(), &[0, 1, 2]);
        assert!((res.best_conductance - 1.0 / 7.0).abs() < 1e-9);
    }

    #[test]
    fn monotone_regularization_on_the_barbell() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        let loose = simple_local(&g, &r, 0.0).unwrap();
        let tight = simple_local(&g, &r, 0.6).unwrap();
        assert!(loose.best_conductance <= tight.best_conductance + 1e-12);
        assert!(tight.explored_volume <= loose.explored_volume + 1e-12);
    }

    #[test]
    fn optimality_against_the_exhaustive_oracle() {
        let mut rng = XorShift::new(0xACCE5);
        for _ in 0..50 {
            let n = 5 + rng.gen_range(6);
            let g = random_connected_graph(&mut rng, n);
            let r = random_valid_seed(&mut rng, &g);
            let f_ratio = r.volume() / (g.total_volume() - r.volume());
            for delta in [0.0, 0.1, 0.5, 1.0] {
                let res = simple_local(&g, &r, delta).unwrap();
                let eps = f_ratio + delta;
                let got = quotient_score(&g, &r, eps, &res.best_set).unwrap();
                let want = oracle::brute_min_quotient(&g, &r, eps)
                    .unwrap()
                    .best_value
                    .unwrap();
                assert!(
                    (got - want).abs() <= 1e-9 * want.abs().max(1.0),
                    "phi-bar {got} vs brute {want}"
                );
                // trace strictly decreasing
                for pair in res.alpha_trace.windows(2) {
                    assert!(pair[1] < pair[0]);
                }
                assert!(res.best_conductance <= g.conductance(&r).unwrap() + 1e-12);
            }
        }
    }

    #[test]
    fn optimality_holds_on_weighted_graphs() {
        let mut rng = XorShift::new(0x5EED);
        for _ in 0..30 {
            let n = 5 + rng.gen_range(5);
            let g = crate::testutil::random_weighted_connected_graph(&mut rng, n);
            let r = random_valid_seed(&mut rng, &g);
            let f_ratio = r.volume() / (g.total_volume() - r.volume());
            for delta in [0.0, 0.3, 1.0] {
                let eps = f_ratio + delta;
                let res = simple_local(&g, &r, delta).unwrap();
                let got = quotient_score(&g, &r, eps, &res.best_set).unwrap();
                let want = oracle::brute_min_quotient(&g, &r, eps)
                    .unwrap()
                    .best_value
                    .unwrap();
                assert!(
                    (got - want).abs() <= 1e-9 * want.abs().max(1.0),
                    "weighted: phi-bar {got} vs brute {want}"
                );
                assert!(res.explored_volume <= res.exploration_bound + 1e-9);
            }
        }
    }

    #[test]
    fn quality_guarantee_clause_one_exhaustive_on_barbell() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        for delta in [0.0, 0.6] {
            let res = simple_local(&g, &r, delta).unwrap();
            for mask in 1u32..(1 << 2) {
                let ids: Vec<u32> = [0u32, 1]
                    .iter()
                    .copied()
                    .filter(|v| mask >> v & 1 == 1)
                    .collect();
                let c = NodeSet::from_ids(&g, ids).unwrap();
                assert!(check_quality_guarantee(&g, &r, delta, &res.best_set, &c, 0.0).unwrap());
            }
        }
    }

    #[test]
    fn quality_guarantee_clause_two_on_barbell() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        let res = simple_local(&g, &r, 0.0).unwrap();
        let c = NodeSet::from_ids(&g, [0, 1, 2]).unwrap();
        // overlap condition: vol(R∩C)/vol(C) = 4/7; vol(R)/vol(V) = 2/7;
        // gamma 'solves' 4/7 >= 2/7 + gamma*(10/14) => gamma <= 2/5
        let gamma = 0.4;
        assert!(check_quality_guarantee(&g, &r, 0.0, &res.best_set, &c, gamma).unwrap());
        // pushing gamma above the bound breaks the precondition
        assert!(matches!(
            check_quality_guarantee(&g, &r, 0.0, &res.best_set, &c, 0.6),
            Err(Error::GuaranteeNotApplicable(_))
        ));
        // gamma <= delta is never applicable
        assert!(matches!(
            check_quality_guarantee(&g, &r, 0.5, &res.best_set, &c, 0.2),
            Err(Error::GuaranteeNotApplicable(_))
        ));
    }

    #[test]
    fn quality_guarantee_property_sweep() {
        let mut rng = XorShift::new(0x7EA);
        for _ in 0..25 {
            let n = 5 + rng.gen_range(4);
            let g = random_connected_graph(&mut rng, n);
            let r = random_valid_seed(&mut rng, &g);
            let delta = [0.0, 0.2, 0.5][rng.gen_range(3)];
            let res = simple_local(&g, &r, delta).unwrap();
            for _ in 0..10 {
                let k = 1 + rng.gen_range(n - 1);
                let mut ids = Vec::new();
                while ids.len() < k {
                    let v = rng.gen_range(n) as u32;
                    if !ids.contains(&v) {
                        ids.push(v);
                    }
                }
                let c = NodeSet::from_ids(&g, ids).unwrap();
                if c.len() == n {
                    continue;
                }
                let gamma = delta + rng.gen_f64();
                match check_quality_guarantee(&g, &r, delta, &res.best_set, &c, gamma) {
                    Ok(holds) => assert!(holds, "guarantee violated"),
                    Err(Error::GuaranteeNotApplicable(_)) => {}
                    Err(e) => panic!("unexpected error: {e}"),
                }
            }
        }
    }

    #[test]
    fn refine_grows_the_seed_then_improves() {
        let g = barbell();
        let prior = NodeSet::from_ids(&g, [0, 1]).unwrap();
        let res = refine(&g, &prior, 0.0).unwrap();
        assert_eq!(res.best_set.members(), &[0, 1, 2]);
        assert!((res.best_conductance - 1.0 / 7.0).abs() < 1e-9);
    }

    #[test]
    fn refine_rejects_oversized_grown_seeds() {
        // growing {1} on the path 0-1-2-3 yields {0,1,2} with vol 5 > 1
        let g = path4();
        let prior = NodeSet::from_ids(&g, [1]).unwrap();
        assert!(matches!(
            refine(&g, &prior, 0.0),
            Err(Error::SeedTooLarge { .. })
        ));
        // a full component grows into everything
        let gb = barbell();
        let all = NodeSet::from_ids(&gb, 0..6).unwrap();
        assert!(matches!(
            refine(&gb, &all, 0.0),
            Err(Error::SeedTooLarge { .. })
        ));
    }

    #[test]
    fn finding_a_whole_component_terminates_at_quotient_zero() {
        // R sits inside one of two disjoint triangles; the best set is the
        // full component, whose quotient (and conductance) is exactly zero
        let edges = [
            (0, 1, 1.0),
            (0, 2, 1.0),
            (1, 2, 1.0),
            (3, 4, 1.0),
            (3, 5, 1.0),
            (4, 5, 1.0),
        ];
        let (g, _) = Graph::from_edges(6, edges).unwrap();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        let res = simple_local(&g, &r, 0.0).unwrap();
        assert_eq!(res.best_set.members(), &[0, 1, 2]);
        assert_eq!(res.best_conductance, 0.0);
        assert_eq!(*res.alpha_trace.last().unwrap(), 0.0);
        // the exhaustive oracle agrees
        let f_ratio = r.volume() / (g.total_volume() - r.volume());
        let want = oracle::brute_min_quotient(&g, &r, f_ratio)
            .unwrap()
            .best_value
            .unwrap();
        assert_eq!(want, 0.0);
    }

    #[test]
    fn zero_boundary_seed_short_circuits() {
        let edges = [
            (0, 1, 1.0),
            (0, 2, 1.0),
            (1, 2, 1.0),
            (3, 4, 1.0),
            (3, 5, 1.0),
            (4, 5, 1.0),
        ];
        let (g, _) = Graph::from_edges(6, edges).unwrap();
        let r = NodeSet::from_ids(&g, [0, 1, 2]).unwrap();
        let res = simple_local(&g, &r, 0.0).unwrap();
        assert_eq!(res.best_conductance, 0.0);
        assert_eq!(res.flow_calls, 0);
        assert_eq!(res.best_set.members(), &[0, 1, 2]);
    }

    #[test]
    fn input_errors_are_reported() {
        let g = barbell();
        let empty = NodeSet::from_ids(&g, []).unwrap();
        assert!(matches!(
            simple_local(&g, &empty, 0.0),
            Err(Error::EmptySeed)
        ));
        let heavy = NodeSet::from_ids(&g, [0, 1, 2, 3]).unwrap();
        assert!(matches!(
            simple_local(&g, &heavy, 0.0),
            Err(Error::SeedTooLarge { .. })
        ));
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        assert!(matches!(
            simple_local(&g, &r, -0.5),
            Err(Error::InvalidParameter { name: "delta", .. })
        ));
    }
}

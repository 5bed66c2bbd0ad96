//! Exact max-flow over the growable local residual network.
//!
//! `LocalFlowGraph` holds the explored portion of the augmented graph:
//! original nodes plus the virtual source and sink. Arcs are stored as
//! residual pairs at indices `i` and `i ^ 1`; growth appends and never
//! reindexes, so flow state survives expansion. That invariant matters: a
//! saturated sink arc stays saturated for the rest of the run (no augmenting
//! path ever leaves the sink), which is what certifies the exploration bound.
//!
//! Any solver implementing [`MaxFlowSolver`] over the residual API can be
//! swapped in; the bundled [`DinicSolver`] uses BFS level graphs with
//! blocking-flow DFS passes.

use std::collections::{HashMap, HashSet, VecDeque};

/// Node id inside the local flow graph. Ids 0 and 1 are the virtual
/// source/sink; original graph nodes get ids assigned on entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalNode(pub u32);

pub const SOURCE: LocalNode = LocalNode(0);
pub const SINK: LocalNode = LocalNode(1);

/// Lifecycle of an original node inside the local graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeStatus {
    /// Member of R; wired to the source, fully adjacent from initialization.
    Seed,
    /// Touched but not expanded; only its sink arc and edges to wired nodes
    /// are present.
    Frontier,
    /// Former frontier node whose sink arc saturated; all its edges are
    /// present.
    Expanded,
}

#[derive(Debug, Clone)]
struct Arc {
    to: u32,
    cap: f64,
    resid: f64,
}

/// The dynamically grown residual network over explored original nodes plus
/// the virtual source and sink.
#[derive(Debug, Clone)]
pub struct LocalFlowGraph {
    arcs: Vec<Arc>,
    adj: Vec<Vec<u32>>,
    local_of: HashMap<u32, u32>,
    originals: Vec<u32>,
    status: Vec<NodeStatus>,
    sink_arc: Vec<Option<u32>>,
    net_flow: f64,
    explored_volume: f64,
    tolerance: f64,
}

/// Snapshot of which sink arcs were already saturated, used to report only
/// the saturations produced by the most recent solve.
#[derive(Debug, Clone)]
pub struct SaturationCheckpoint {
    saturated: HashSet<u32>,
}

impl LocalFlowGraph {
    pub fn new(tolerance: f64) -> Self {
        LocalFlowGraph {
            arcs: Vec::new(),
            adj: vec![Vec::new(), Vec::new()],
            local_of: HashMap::new(),
            originals: Vec::new(),
            status: Vec::new(),
            sink_arc: Vec::new(),
            net_flow: 0.0,
            explored_volume: 0.0,
            tolerance,
        }
    }

    fn add_local_node(&mut self, id: u32, status: NodeStatus) -> u32 {
        debug_assert!(!self.local_of.contains_key(&id));
        let local = self.adj.len() as u32;
        self.adj.push(Vec::new());
        self.local_of.insert(id, local);
        self.originals.push(id);
        self.status.push(status);
        self.sink_arc.push(None);
        local
    }

    fn add_arc_pair(&mut self, from: u32, to: u32, cap_fwd: f64, cap_bwd: f64) -> u32 {
        let idx = self.arcs.len() as u32;
        self.arcs.push(Arc {
            to,
            cap: cap_fwd,
            resid: cap_fwd,
        });
        self.arcs.push(Arc {
            to: from,
            cap: cap_bwd,
            resid: cap_bwd,
        });
        self.adj[from as usize].push(idx);
        self.adj[to as usize].push(idx + 1);
        idx
    }

    /// Adds a seed node with its source arc (s, id) of the given capacity.
    pub fn add_seed(&mut self, id: u32, source_capacity: f64) {
        let local = self.add_local_node(id, NodeStatus::Seed);
        self.add_arc_pair(SOURCE.0, local, source_capacity, 0.0);
    }

    /// Adds a non-seed node with its sink arc (id, t) of the given capacity.
    pub fn add_frontier(&mut self, id: u32, sink_capacity: f64) {
        let local = self.add_local_node(id, NodeStatus::Frontier);
        let arc = self.add_arc_pair(local, SINK.0, sink_capacity, 0.0);
        self.sink_arc[(local - 2) as usize] = Some(arc);
    }

    /// Adds an undirected internal edge between two present nodes. Both
    /// directions get the full capacity, which is the standard encoding of an
    /// undirected edge in an s-t flow network.
    pub fn add_internal_edge(&mut self, u: u32, v: u32, weight: f64) {
        let lu = self.local_of[&u];
        let lv = self.local_of[&v];
        self.add_arc_pair(lu, lv, weight, weight);
        self.explored_volume += 2.0 * weight;
    }

    pub fn contains(&self, id: u32) -> bool {
        self.local_of.contains_key(&id)
    }

    pub fn status(&self, id: u32) -> Option<NodeStatus> {
        self.local_of
            .get(&id)
            .map(|&local| self.status[(local - 2) as usize])
    }

    pub fn mark_expanded(&mut self, id: u32) {
        let local = self.local_of[&id];
        let slot = &mut self.status[(local - 2) as usize];
        debug_assert_eq!(*slot, NodeStatus::Frontier);
        *slot = NodeStatus::Expanded;
    }

    /// Original-graph ids present, in insertion order.
    pub fn nodes(&self) -> &[u32] {
        &self.originals
    }

    pub fn node_count(&self) -> usize {
        self.originals.len()
    }

    /// Total s→t flow routed so far across all solve calls.
    pub fn net_flow_total(&self) -> f64 {
        self.net_flow
    }

    /// Volume of the explored subgraph: twice the total weight of internal
    /// edges present (frontier nodes count only through their wired edges).
    pub fn explored_volume(&self) -> f64 {
        self.explored_volume
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    // --- residual API used by solvers ---

    pub fn local_node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn arcs_from(&self, node: LocalNode) -> &[u32] {
        &self.adj[node.0 as usize]
    }

    pub fn arc_source(&self, arc: u32) -> LocalNode {
        LocalNode(self.arcs[(arc ^ 1) as usize].to)
    }

    pub fn arc_target(&self, arc: u32) -> LocalNode {
        LocalNode(self.arcs[arc as usize].to)
    }

    pub fn capacity(&self, arc: u32) -> f64 {
        self.arcs[arc as usize].cap
    }

    pub fn residual(&self, arc: u32) -> f64 {
        self.arcs[arc as usize].resid
    }

    /// Arc saturation scale: the larger of the pair's capacities.
    fn scale(&self, arc: u32) -> f64 {
        self.arcs[arc as usize]
            .cap
            .max(self.arcs[(arc ^ 1) as usize].cap)
    }

    /// Whether an arc has usable residual capacity. The threshold is relative
    /// to the pair's capacity so saturation and reachability agree.
    pub fn is_traversable(&self, arc: u32) -> bool {
        self.arcs[arc as usize].resid > self.tolerance * self.scale(arc)
    }

    /// Pushes `amount` along an arc, updating the paired residual and the
    /// total s→t flow.
    pub fn push(&mut self, arc: u32, amount: f64) {
        self.arcs[arc as usize].resid -= amount;
        self.arcs[(arc ^ 1) as usize].resid += amount;
        let from = self.arc_source(arc);
        let to = self.arc_target(arc);
        if from == SOURCE {
            self.net_flow += amount;
        } else if to == SOURCE {
            self.net_flow -= amount;
        }
    }

    // --- inspection after solving ---

    fn sink_arc_saturated(&self, arc: u32) -> bool {
        let a = &self.arcs[arc as usize];
        a.resid <= self.tolerance * a.cap
    }

    /// Runs the bundled Dinic solver to a maximum flow of the current local
    /// graph; returns the flow routed by this call.
    pub fn solve_max_flow(&mut self) -> f64 {
        DinicSolver.solve(self)
    }

    /// Original nodes still connected to the source by a chain of unsaturated
    /// residual arcs, ascending. This is the minimal source side of a minimum
    /// s-t cut once no augmenting path remains.
    pub fn source_side(&self) -> Vec<u32> {
        let mut seen = vec![false; self.local_node_count()];
        seen[SOURCE.0 as usize] = true;
        let mut queue = VecDeque::from([SOURCE.0]);
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u as usize] {
                let v = self.arcs[arc as usize].to;
                if !seen[v as usize] && self.is_traversable(arc) {
                    seen[v as usize] = true;
                    queue.push_back(v);
                    if v >= 2 {
                        out.push(self.originals[(v - 2) as usize]);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Records which sink arcs are saturated right now.
    pub fn saturation_checkpoint(&self) -> SaturationCheckpoint {
        let mut saturated = HashSet::new();
        for (slot, arc) in self.sink_arc.iter().enumerate() {
            if let Some(arc) = arc {
                if self.sink_arc_saturated(*arc) {
                    saturated.insert(self.originals[slot]);
                }
            }
        }
        SaturationCheckpoint { saturated }
    }

    /// Nodes whose sink arc became saturated since the checkpoint, ascending.
    pub fn saturated_sink_nodes(&self, since: &SaturationCheckpoint) -> Vec<u32> {
        let mut out = Vec::new();
        for (slot, arc) in self.sink_arc.iter().enumerate() {
            if let Some(arc) = arc {
                let id = self.originals[slot];
                if self.sink_arc_saturated(*arc) && !since.saturated.contains(&id) {
                    out.push(id);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Capacity of the s-t cut that puts `side` (original ids) with the
    /// source: the sum of capacities of arcs leaving {s} ∪ side.
    pub fn cut_capacity(&self, side: &[u32]) -> f64 {
        let mut on_side = vec![false; self.local_node_count()];
        on_side[SOURCE.0 as usize] = true;
        for id in side {
            on_side[self.local_of[id] as usize] = true;
        }
        let mut total = 0.0;
        for u in 0..self.local_node_count() {
            if !on_side[u] {
                continue;
            }
            for &arc in &self.adj[u] {
                let a = &self.arcs[arc as usize];
                if !on_side[a.to as usize] {
                    total += a.cap;
                }
            }
        }
        total
    }
}

/// A max-flow subroutine over the residual API. Implementations must leave
/// the graph with no traversable s-t path and return the flow routed.
pub trait MaxFlowSolver {
    fn solve(&mut self, graph: &mut LocalFlowGraph) -> f64;
}

/// BFS level graphs with blocking-flow DFS passes.
#[derive(Debug, Default, Clone, Copy)]
pub struct DinicSolver;

impl DinicSolver {
    fn levels(graph: &LocalFlowGraph) -> Option<Vec<i32>> {
        let mut level = vec![-1i32; graph.local_node_count()];
        level[SOURCE.0 as usize] = 0;
        let mut queue = VecDeque::from([SOURCE.0]);
        while let Some(u) = queue.pop_front() {
            for &arc in graph.arcs_from(LocalNode(u)) {
                let v = graph.arc_target(arc).0;
                if level[v as usize] < 0 && graph.is_traversable(arc) {
                    level[v as usize] = level[u as usize] + 1;
                    queue.push_back(v);
                }
            }
        }
        if level[SINK.0 as usize] < 0 {
            None
        } else {
            Some(level)
        }
    }

    /// One blocking-flow pass over a level graph. The DFS keeps its own arc
    /// stack, so path depth never touches the call stack.
    fn blocking_flow(graph: &mut LocalFlowGraph, level: &mut [i32]) -> f64 {
        let mut total = 0.0;
        let mut iter = vec![0usize; graph.local_node_count()];
        let mut path: Vec<u32> = Vec::new();
        let mut current = SOURCE.0;
        loop {
            if current == SINK.0 {
                let mut bottleneck = f64::INFINITY;
                for &arc in &path {
                    bottleneck = bottleneck.min(graph.residual(arc));
                }
                for &arc in &path {
                    graph.push(arc, bottleneck);
                }
                total += bottleneck;
                // back up to just before the first arc this push saturated;
                // its owner's iter pointer will skip it on the next advance
                let mut keep = path.len();
                for (i, &arc) in path.iter().enumerate() {
                    if !graph.is_traversable(arc) {
                        keep = i;
                        break;
                    }
                }
                path.truncate(keep);
                current = match path.last() {
                    Some(&arc) => graph.arc_target(arc).0,
                    None => SOURCE.0,
                };
                continue;
            }
            let arcs = graph.arcs_from(LocalNode(current));
            if iter[current as usize] < arcs.len() {
                let arc = arcs[iter[current as usize]];
                let v = graph.arc_target(arc).0;
                if graph.is_traversable(arc) && level[v as usize] == level[current as usize] + 1 {
                    path.push(arc);
                    current = v;
                } else {
                    iter[current as usize] += 1;
                }
            } else {
                if current == SOURCE.0 {
                    break;
                }
                // dead end: prune the node for the rest of this phase
                level[current as usize] = -1;
                let arc = path.pop().expect("non-source node was reached via an arc");
                current = graph.arc_source(arc).0;
                iter[current as usize] += 1;
            }
        }
        total
    }
}

impl MaxFlowSolver for DinicSolver {
    fn solve(&mut self, graph: &mut LocalFlowGraph) -> f64 {
        let mut total = 0.0;
        while let Some(mut level) = Self::levels(graph) {
            total += Self::blocking_flow(graph, &mut level);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augmented::{AugmentedParams, DEFAULT_TOLERANCE};
    use crate::graph::NodeSet;
    use crate::oracle;
    use crate::testutil::{barbell, random_connected_graph, random_valid_seed, XorShift};

    fn barbell_local_initial() -> LocalFlowGraph {
        // R = {0,1}, alpha = 0.5, delta = 0: nodes {s,t,0,1,2}, source arcs of
        // capacity 1.0 each, triangle edges, sink arc 2->t of capacity 0.6.
        let mut l = LocalFlowGraph::new(DEFAULT_TOLERANCE);
        l.add_seed(0, 1.0);
        l.add_seed(1, 1.0);
        l.add_frontier(2, 0.6);
        l.add_internal_edge(0, 1, 1.0);
        l.add_internal_edge(0, 2, 1.0);
        l.add_internal_edge(1, 2, 1.0);
        l
    }

    #[test]
    fn chain_bottleneck() {
        let mut l = LocalFlowGraph::new(DEFAULT_TOLERANCE);
        l.add_seed(7, 2.0); // s -> 7 with capacity 2
        l.add_frontier(8, 1.0); // 8 -> t with capacity 1
        l.add_internal_edge(7, 8, 5.0);
        assert!((l.solve_max_flow() - 1.0).abs() < 1e-12);
        assert!((l.net_flow_total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn no_path_means_zero_flow() {
        let mut l = LocalFlowGraph::new(DEFAULT_TOLERANCE);
        l.add_seed(0, 2.0);
        // no sink arcs at all
        assert_eq!(l.solve_max_flow(), 0.0);
        // source set: everything reachable
        assert_eq!(l.source_side(), vec![0]);
    }

    #[test]
    fn fully_expanded_barbell_flow_matches_oracle() {
        let g = barbell();
        let r = NodeSet::from_ids(&g, [0, 1]).unwrap();
        let p = AugmentedParams::new(&g, &r, 0.5, 0.0).unwrap();
        let mut l = oracle::materialize_augmented(&g, &r, &p);
        let brute = oracle::brute_max_flow(&l).unwrap();
        let flow = l.solve_max_flow();
        assert!((flow - 1.6).abs() < 1e-9);
        assert!((brute - 1.6).abs() < 1e-12);
        assert_eq!(l.source_side(), vec![0, 1, 2]);
        // min-cut certificate: saturated cut capacity equals the flow routed
        let cut = l.cut_capacity(&l.source_side());
        assert!((cut - flow).abs() < 1e-9);
    }

    #[test]
    fn saturating_the_only_source_arc_empties_the_source_set() {
        let mut l = LocalFlowGraph::new(DEFAULT_TOLERANCE);
        l.add_seed(0, 1.0);
        l.add_frontier(1, 8.0);
        l.add_internal_edge(0, 1, 3.0);
        let flow = l.solve_max_flow();
        assert!((flow - 1.0).abs() < 1e-12);
        assert!(l.source_side().is_empty());
    }

    #[test]
    fn zero_capacity_source_arcs_reach_nothing() {
        let mut l = LocalFlowGraph::new(DEFAULT_TOLERANCE);
        l.add_seed(0, 0.0);
        l.add_frontier(1, 1.0);
        l.add_internal_edge(0, 1, 1.0);
        assert_eq!(l.solve_max_flow(), 0.0);
        assert!(l.source_side().is_empty());
    }

    #[test]
    fn first_iteration_saturates_the_bridge_neighbor() {
        let mut l = barbell_local_initial();
        let before = l.saturation_checkpoint();
        assert!(l.saturated_sink_nodes(&before).is_empty());
        let flow = l.solve_max_flow();
        // only 0.6 fits through 2 -> t
        assert!((flow - 0.6).abs() < 1e-12);
        assert_eq!(l.saturated_sink_nodes(&before), vec![2]);
    }

    #[test]
    fn forced_single_neighbor_saturation() {
        let mut l = LocalFlowGraph::new(DEFAULT_TOLERANCE);
        l.add_seed(0, 2.0);
        l.add_frontier(1, 0.5); // sink capacity below the seed supply
        l.add_internal_edge(0, 1, 4.0);
        let before = l.saturation_checkpoint();
        l.solve_max_flow();
        assert_eq!(l.saturated_sink_nodes(&before), vec![1]);
    }

    #[test]
    fn checkpoint_only_reports_new_saturations() {
        let mut l = barbell_local_initial();
        let t0 = l.saturation_checkpoint();
        l.solve_max_flow();
        assert_eq!(l.saturated_sink_nodes(&t0), vec![2]);
        let t1 = l.saturation_checkpoint();
        // nothing new without more flow
        assert!(l.saturated_sink_nodes(&t1).is_empty());
    }

    /// Edmonds-Karp through the public residual API; exercises the
    /// solver-exchange contract.
    struct EkSolver;

    impl MaxFlowSolver for EkSolver {
        fn solve(&mut self, graph: &mut LocalFlowGraph) -> f64 {
            let mut total = 0.0;
            loop {
                let n = graph.local_node_count();
                let mut parent_arc: Vec<Option<u32>> = vec![None; n];
                let mut seen = vec![false; n];
                seen[SOURCE.0 as usize] = true;
                let mut queue = VecDeque::from([SOURCE.0]);
                'bfs: while let Some(u) = queue.pop_front() {
                    for &arc in graph.arcs_from(LocalNode(u)) {
                        let v = graph.arc_target(arc).0;
                        if !seen[v as usize] && graph.is_traversable(arc) {
                            seen[v as usize] = true;
                            parent_arc[v as usize] = Some(arc);
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
                    let arc = parent_arc[v as usize].unwrap();
                    bottleneck = bottleneck.min(graph.residual(arc));
                    v = graph.arc_source(arc).0;
                }
                let mut v = SINK.0;
                while v != SOURCE.0 {
                    let arc = parent_arc[v as usize].unwrap();
                    graph.push(arc, bottleneck);
                    v = graph.arc_source(arc).0;
                }
                total += bottleneck;
            }
        }
    }

    #[test]
    fn solver_exchange_same_flow_and_source_set() {
        let mut rng = XorShift::new(777);
        for _ in 0..30 {
            let n = 5 + rng.gen_range(5);
            let g = random_connected_graph(&mut rng, n);
            let r = random_valid_seed(&mut rng, &g);
            let alpha = 0.05 + 0.9 * rng.gen_f64();
            let delta = [0.0, 0.2, 1.0][rng.gen_range(3)];
            let p = AugmentedParams::new(&g, &r, alpha, delta).unwrap();

            let mut a = oracle::materialize_augmented(&g, &r, &p);
            let mut b = a.clone();
            let fa = DinicSolver.solve(&mut a);
            let fb = EkSolver.solve(&mut b);
            assert!((fa - fb).abs() <= 1e-9 * fa.abs().max(1.0));
            assert_eq!(a.source_side(), b.source_side());
        }
    }

    #[test]
    fn random_local_graphs_match_brute_force() {
        let mut rng = XorShift::new(31337);
        for _ in 0..40 {
            let n = 4 + rng.gen_range(6);
            let g = random_connected_graph(&mut rng, n);
            let r = random_valid_seed(&mut rng, &g);
            let alpha = 0.05 + 0.9 * rng.gen_f64();
            let p = AugmentedParams::new(&g, &r, alpha, rng.gen_f64()).unwrap();
            let mut l = oracle::materialize_augmented(&g, &r, &p);
            let brute = oracle::brute_max_flow(&l).unwrap();
            let flow = l.solve_max_flow();
            assert!(
                (flow - brute).abs() <= 1e-9 * brute.abs().max(1.0),
                "flow {flow} vs brute {brute}"
            );
            let cut = l.cut_capacity(&l.source_side());
            assert!((cut - flow).abs() <= 1e-9 * flow.abs().max(1.0));
        }
    }
}

//! Immutable weighted undirected graph in compressed adjacency form, plus the
//! set-level measures (volume, boundary, neighborhood, conductance) every
//! other module consumes.
//!
//! Node ids are dense integers `0..n`. Weights are positive reals; an
//! unweighted graph is the special case where every weight is 1. The graph is
//! immutable after construction and safe to share across threads.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Counters reported by [`Graph::from_edges`] for input normalization.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Self-loops are dropped: they contribute nothing to any cut.
    pub self_loops_dropped: usize,
    /// Parallel edges are merged by summing their weights.
    pub duplicates_merged: usize,
}

/// Immutable weighted undirected graph with cached weighted degrees and total
/// volume.
#[derive(Debug, Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    weights: Vec<f64>,
    degrees: Vec<f64>,
    total_volume: f64,
    weighted: bool,
}

impl Graph {
    /// Builds a graph from an edge list over nodes `0..node_count`.
    ///
    /// Symmetry is implicit: each input pair `(u, v, w)` stands for one
    /// undirected edge. Duplicate pairs (in either orientation) are merged by
    /// summing weights; self-loops are dropped. Zero or negative weights are
    /// rejected.
    pub fn from_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (u32, u32, f64)>,
    ) -> Result<(Graph, BuildStats)> {
        let mut stats = BuildStats::default();
        let mut pairs: Vec<(u32, u32, f64)> = Vec::new();
        for (u, v, w) in edges {
            if u as usize >= node_count {
                return Err(Error::InvalidNode { id: u, node_count });
            }
            if v as usize >= node_count {
                return Err(Error::InvalidNode { id: v, node_count });
            }
            if w <= 0.0 || !w.is_finite() {
                return Err(Error::InvalidWeight { u, v, weight: w });
            }
            if u == v {
                stats.self_loops_dropped += 1;
                continue;
            }
            pairs.push((u.min(v), u.max(v), w));
        }
        pairs.sort_by_key(|&(u, v, _)| (u, v));
        let mut merged: Vec<(u32, u32, f64)> = Vec::with_capacity(pairs.len());
        for (u, v, w) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == u && last.1 == v => {
                    last.2 += w;
                    stats.duplicates_merged += 1;
                }
                _ => merged.push((u, v, w)),
            }
        }

        let mut counts = vec![0usize; node_count];
        for &(u, v, _) in &merged {
            counts[u as usize] += 1;
            counts[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0usize);
        for c in &counts {
            offsets.push(offsets.last().unwrap() + c);
        }
        let total_entries = *offsets.last().unwrap();
        let mut neighbors = vec![0u32; total_entries];
        let mut weights = vec![0f64; total_entries];
        let mut cursor = offsets[..node_count].to_vec();
        for &(u, v, w) in &merged {
            neighbors[cursor[u as usize]] = v;
            weights[cursor[u as usize]] = w;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            weights[cursor[v as usize]] = w;
            cursor[v as usize] += 1;
        }

        let mut degrees = vec![0f64; node_count];
        for v in 0..node_count {
            degrees[v] = weights[offsets[v]..offsets[v + 1]].iter().sum();
        }
        let total_volume = degrees.iter().sum();
        let weighted = merged.iter().any(|&(_, _, w)| w != 1.0);

        Ok((
            Graph {
                offsets,
                neighbors,
                weights,
                degrees,
                total_volume,
                weighted,
            },
            stats,
        ))
    }

    pub fn node_count(&self) -> usize {
        self.degrees.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Weighted degree d_v: the sum of weights of edges incident to `v`.
    pub fn degree(&self, v: u32) -> f64 {
        self.degrees[v as usize]
    }

    /// vol(V) = sum of all weighted degrees.
    pub fn total_volume(&self) -> f64 {
        self.total_volume
    }

    /// True when any edge weight differs from 1.
    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn contains_node(&self, v: u32) -> bool {
        (v as usize) < self.node_count()
    }

    /// Neighbors of `v` with edge weights.
    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = (u32, f64)> + '_ {
        let lo = self.offsets[v as usize];
        let hi = self.offsets[v as usize + 1];
        self.neighbors[lo..hi]
            .iter()
            .copied()
            .zip(self.weights[lo..hi].iter().copied())
    }

    /// All undirected edges with `u < v`, each exactly once.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        (0..self.node_count() as u32)
            .flat_map(move |u| self.neighbors(u).map(move |(v, w)| (u, v, w)))
            .filter(|&(u, v, _)| u < v)
    }

    /// Conductance φ(S) = ∂S / min(vol(S), vol(S̄)).
    ///
    /// Undefined (an error) for the empty set and the full vertex set, where
    /// the smaller side has volume zero.
    pub fn conductance(&self, s: &NodeSet) -> Result<f64> {
        if s.is_empty() || s.len() == self.node_count() {
            return Err(Error::UndefinedConductance);
        }
        let small = s.volume().min(self.total_volume - s.volume());
        if small <= 0.0 {
            return Err(Error::UndefinedConductance);
        }
        Ok(s.boundary() / small)
    }

    /// Neigh(S): nodes outside `s` adjacent to at least one member of `s`.
    pub fn neighborhood(&self, s: &NodeSet) -> NodeSet {
        let mut out: Vec<u32> = Vec::new();
        let mut seen: HashSet<u32> = HashSet::new();
        for &v in s.members() {
            for (nbr, _) in self.neighbors(v) {
                if !s.contains(nbr) && seen.insert(nbr) {
                    out.push(nbr);
                }
            }
        }
        NodeSet::from_ids(self, out).expect("neighbors of valid nodes are valid")
    }
}

/// A set of vertex ids with cached volume and boundary weight.
///
/// Both caches are computed against the graph passed at construction; a
/// `NodeSet` must only be used with that graph.
#[derive(Debug, Clone)]
pub struct NodeSet {
    ids: Vec<u32>,
    lookup: HashSet<u32>,
    volume: f64,
    boundary: f64,
}

impl NodeSet {
    /// Builds a set from ids, validating them against `g`, deduplicating, and
    /// caching vol(S) and ∂S.
    pub fn from_ids(g: &Graph, ids: impl IntoIterator<Item = u32>) -> Result<NodeSet> {
        let mut lookup: HashSet<u32> = HashSet::new();
        let mut members: Vec<u32> = Vec::new();
        for id in ids {
            if !g.contains_node(id) {
                return Err(Error::InvalidNode {
                    id,
                    node_count: g.node_count(),
                });
            }
            if lookup.insert(id) {
                members.push(id);
            }
        }
        members.sort_unstable();
        let mut volume = 0.0;
        let mut boundary = 0.0;
        for &v in &members {
            volume += g.degree(v);
            for (nbr, w) in g.neighbors(v) {
                if !lookup.contains(&nbr) {
                    boundary += w;
                }
            }
        }
        Ok(NodeSet {
            ids: members,
            lookup,
            volume,
            boundary,
        })
    }

    /// Member ids in ascending order.
    pub fn members(&self) -> &[u32] {
        &self.ids
    }

    pub fn contains(&self, v: u32) -> bool {
        self.lookup.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// vol(S) = Σ_{s∈S} d_s, cached at construction.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// ∂S: total weight of edges with exactly one endpoint in S, cached at
    /// construction.
    pub fn boundary(&self) -> f64 {
        self.boundary
    }

    /// The complement set S̄ over the same graph.
    pub fn complement(&self, g: &Graph) -> NodeSet {
        let ids = (0..g.node_count() as u32).filter(|v| !self.contains(*v));
        NodeSet::from_ids(g, ids).expect("complement ids are valid")
    }
}

//! Shared fixtures and a small deterministic RNG for unit tests.

use crate::graph::Graph;

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3, unit weights.
pub(crate) fn barbell() -> Graph {
    let edges = [
        (0, 1, 1.0),
        (0, 2, 1.0),
        (1, 2, 1.0),
        (2, 3, 1.0),
        (3, 4, 1.0),
        (3, 5, 1.0),
        (4, 5, 1.0),
    ];
    Graph::from_edges(6, edges).unwrap().0
}

/// Path 0-1-2-3 with unit weights.
pub(crate) fn path4() -> Graph {
    Graph::from_edges(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])
        .unwrap()
        .0
}

/// xorshift64* generator; deterministic across platforms.
pub(crate) struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn gen_range(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn gen_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Random connected unit-weight graph with `n` nodes.
pub(crate) fn random_connected_graph(rng: &mut XorShift, n: usize) -> Graph {
    loop {
        let p = 0.25 + 0.45 * rng.gen_f64();
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                if rng.gen_f64() < p {
                    edges.push((u, v, 1.0));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let (g, _) = Graph::from_edges(n, edges).unwrap();
        if connected(&g) {
            return g;
        }
    }
}

/// Random connected graph with weights spread across two orders of magnitude.
pub(crate) fn random_weighted_connected_graph(rng: &mut XorShift, n: usize) -> Graph {
    loop {
        let p = 0.3 + 0.4 * rng.gen_f64();
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                if rng.gen_f64() < p {
                    edges.push((u, v, 0.1 + 9.9 * rng.gen_f64()));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let (g, _) = Graph::from_edges(n, edges).unwrap();
        if connected(&g) {
            return g;
        }
    }
}

fn connected(g: &Graph) -> bool {
    let n = g.node_count();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for (nbr, _) in g.neighbors(v) {
            if !seen[nbr as usize] {
                seen[nbr as usize] = true;
                count += 1;
                stack.push(nbr);
            }
        }
    }
    count == n
}

/// Random seed set with vol(R) <= vol(complement); retries until found.
pub(crate) fn random_valid_seed(rng: &mut XorShift, g: &Graph) -> crate::graph::NodeSet {
    let n = g.node_count();
    loop {
        let k = 1 + rng.gen_range((n / 2).max(1));
        let mut ids = Vec::new();
        while ids.len() < k {
            let v = rng.gen_range(n) as u32;
            if !ids.contains(&v) {
                ids.push(v);
            }
        }
        let s = crate::graph::NodeSet::from_ids(g, ids).unwrap();
        if s.volume() > 0.0 && s.volume() <= g.total_volume() - s.volume() {
            return s;
        }
    }
}

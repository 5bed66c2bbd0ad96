//! Instance generators shared by the integration suites.

use flowcut::{Graph, NodeSet};

/// xorshift64*; deterministic across platforms.
pub struct XorShift(u64);

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

pub fn connected(g: &Graph) -> bool {
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

/// Random connected unit-weight graph on `n` nodes.
pub fn random_connected_graph(rng: &mut XorShift, n: usize) -> Graph {
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

/// Random seed set with positive volume and vol(R) <= vol(complement).
pub fn random_valid_seed(rng: &mut XorShift, g: &Graph) -> NodeSet {
    let n = g.node_count();
    loop {
        let k = 1 + rng.gen_range((n / 2).max(1));
        let mut ids: Vec<u32> = Vec::new();
        while ids.len() < k {
            let v = rng.gen_range(n) as u32;
            if !ids.contains(&v) {
                ids.push(v);
            }
        }
        let s = NodeSet::from_ids(g, ids).unwrap();
        if s.volume() > 0.0 && s.volume() <= g.total_volume() - s.volume() {
            return s;
        }
    }
}

/// Ring of `cliques` cliques of `clique_size` nodes: clique c's last member
/// joins clique c+1's first member. Edge count is
/// cliques * (clique_size choose 2 + 1).
pub fn ring_of_cliques(cliques: usize, clique_size: usize) -> Graph {
    let n = cliques * clique_size;
    let k = clique_size as u32;
    let edges = (0..cliques).flat_map(move |c| {
        let base = (c * clique_size) as u32;
        let next_base = (((c + 1) % cliques) * clique_size) as u32;
        (0..k)
            .flat_map(move |i| ((i + 1)..k).map(move |j| (base + i, base + j, 1.0)))
            .chain(std::iter::once((base + k - 1, next_base, 1.0)))
    });
    Graph::from_edges(n, edges).unwrap().0
}

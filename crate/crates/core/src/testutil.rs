//! Deterministic helpers for unit tests: a tiny xorshift generator and
//! labeled-graph enumeration.

use crate::graph::Graph;

pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> XorShift {
        XorShift(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    /// True with probability p.
    pub fn chance(&mut self, p: f64) -> bool {
        (self.next() >> 11) as f64 / ((1u64 << 53) as f64) < p
    }
}

/// All unordered pairs (u,v), u < v, in lexicographic order.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask & (1 << k) != 0)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edge_list(n, &edges).expect("pairs are valid")
}

/// Every labeled graph on n vertices (2^(n choose 2) of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * (n - 1) / 2;
    (0u64..(1 << bits)).map(move |mask| graph_from_mask(n, mask))
}

pub fn random_graph(rng: &mut XorShift, n: usize, p: f64) -> Graph {
    let pairs = pair_list(n);
    let edges: Vec<_> = pairs.into_iter().filter(|_| rng.chance(p)).collect();
    Graph::from_edge_list(n, &edges).expect("pairs are valid")
}

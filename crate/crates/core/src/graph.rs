//! Simple graphs on labeled vertices 1..=n, stored as bitset adjacency rows.
//!
//! Vertices are 1-indexed everywhere in the public API; internally vertex v
//! occupies bit v-1 of a u64, which caps graphs at 62 vertices (enough for
//! everything downstream of here, which is far more constrained anyway).

use crate::error::{Error, Result};
use std::fmt;

/// Default cap on the number of vertices accepted by graph constructors.
pub const DEFAULT_MAX_VERTICES: usize = 24;
/// Hard cap imposed by the u64 bitset representation.
pub const HARD_MAX_VERTICES: usize = 62;

/// A set of vertices out of 1..=62, packed into a u64 (vertex v is bit v-1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    mask: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { mask: 0 };

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet { mask }
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn singleton(v: usize) -> VertexSet {
        assert!(v >= 1 && v <= 64, "vertex label {v} out of bitset range");
        VertexSet { mask: 1 << (v - 1) }
    }

    /// The full set {1, ..., n}.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= 64);
        if n == 0 {
            VertexSet::EMPTY
        } else {
            VertexSet { mask: u64::MAX >> (64 - n) }
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.mask & (1 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        self | VertexSet::singleton(v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet { mask: self.mask & !VertexSet::singleton(v).mask }
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(self.mask.trailing_zeros() as usize + 1)
        }
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.mask & other.mask != 0
    }

    /// Iterate the vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        iter.into_iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet { mask: self.mask | rhs.mask }
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet { mask: self.mask & rhs.mask }
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet { mask: self.mask & !rhs.mask }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Maps vertices of an induced subgraph back to their labels in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    host_of_sub: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Relabeling {
        Relabeling { host_of_sub: (1..=n).collect() }
    }

    /// Host label of subgraph vertex v.
    pub fn to_host(&self, v: usize) -> usize {
        self.host_of_sub[v - 1]
    }

    /// Subgraph label of host vertex h, if h survived.
    pub fn to_sub(&self, h: usize) -> Option<usize> {
        self.host_of_sub.iter().position(|&x| x == h).map(|i| i + 1)
    }

    pub fn set_to_host(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_host(v)).collect()
    }
}

/// An undirected simple graph on vertices 1..=n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, under the default vertex cap.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_edge_list_with_limit(n, edges, DEFAULT_MAX_VERTICES)
    }

    /// Same, with an explicit cap (still bounded by the bitset hard cap).
    pub fn from_edge_list_with_limit(
        n: usize,
        edges: &[(usize, usize)],
        max_n: usize,
    ) -> Result<Graph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let cap = max_n.min(HARD_MAX_VERTICES);
        if n > cap {
            return Err(Error::TooManyVertices { n, max: cap });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if adj[u - 1] & (1 << (v - 1)) == 0 {
                adj[u - 1] |= 1 << (v - 1);
                adj[v - 1] |= 1 << (u - 1);
                list.push((u.min(v), u.max(v)));
            }
        }
        list.sort_unstable();
        Ok(Graph { n, adj, edges: list })
    }

    /// Builds directly from adjacency rows; internal shortcut for operations
    /// that already hold a valid bitset representation.
    fn from_adj(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        let mut edges = Vec::new();
        for u in 1..=n {
            debug_assert_eq!(adj[u - 1] & !VertexSet::full(n).mask(), 0);
            debug_assert_eq!(adj[u - 1] & (1 << (u - 1)), 0);
            for v in VertexSet::from_mask(adj[u - 1]).iter() {
                debug_assert_ne!(adj[v - 1] & (1 << (u - 1)), 0);
                if v > u {
                    edges.push((u, v));
                }
            }
        }
        Graph { n, adj, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && u >= 1
            && u <= self.n
            && v >= 1
            && v <= self.n
            && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(self.adj[v - 1])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).mask();
        let adj = (1..=self.n)
            .map(|v| !self.adj[v - 1] & full & !(1u64 << (v - 1)))
            .collect();
        Graph::from_adj(self.n, adj)
    }

    /// The subgraph induced on `keep`, relabeled to 1..=|keep| preserving
    /// the order of the surviving labels.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Relabeling)> {
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for v in keep.iter() {
            self.check_vertex(v)?;
        }
        let host_of_sub: Vec<usize> = keep.to_vec();
        let m = host_of_sub.len();
        let mut adj = vec![0u64; m];
        for (i, &u) in host_of_sub.iter().enumerate() {
            for (j, &v) in host_of_sub.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok((Graph::from_adj(m, adj), Relabeling { host_of_sub }))
    }

    /// Removes a single edge, keeping every vertex.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut adj = self.adj.clone();
        adj[u - 1] &= !(1 << (v - 1));
        adj[v - 1] &= !(1 << (u - 1));
        Ok(Graph::from_adj(self.n, adj))
    }

    /// Removes the vertices in `drop` (possibly all of them) and relabels.
    pub fn delete_vertices(&self, drop: VertexSet) -> Result<(Graph, Relabeling)> {
        for v in drop.iter() {
            self.check_vertex(v)?;
        }
        let keep = self.vertices() - drop;
        if keep.is_empty() {
            return Ok((
                Graph { n: 0, adj: Vec::new(), edges: Vec::new() },
                Relabeling { host_of_sub: Vec::new() },
            ));
        }
        self.induced(keep)
    }

    /// True if no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v - 1] & set.mask() == 0)
    }

    /// Connected components of the subgraph induced on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = within;
        while let Some(s) = left.min_vertex() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | (self.neighbors(v) & left);
                }
                next = next - comp;
                comp = comp | next;
                frontier = next;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// All maximal independent sets, via maximal-clique search on the
    /// complement (Bron-Kerbosch with pivoting).
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let full = VertexSet::full(self.n).mask();
        let nonadj: Vec<u64> = (1..=self.n)
            .map(|v| !self.adj[v - 1] & full & !(1u64 << (v - 1)))
            .collect();
        let mut out = Vec::new();
        if self.n > 0 {
            bron_kerbosch(&nonadj, 0, full, 0, &mut out);
        }
        out
    }

    /// n minus the smallest size of a maximal independent set.
    pub fn big_height(&self) -> Result<usize> {
        if self.edges.is_empty() {
            return Err(Error::EdgelessGraph);
        }
        let smallest = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| s.len())
            .min()
            .expect("a graph with an edge has a maximal independent set");
        Ok(self.n - smallest)
    }
}

fn bron_kerbosch(nonadj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 && x == 0 {
        out.push(VertexSet::from_mask(r));
        return;
    }
    // Pivot on the vertex covering the most of p.
    let pivot = VertexSet::from_mask(p | x)
        .iter()
        .max_by_key(|&u| (p & nonadj[u - 1]).count_ones())
        .unwrap();
    let cand = p & !nonadj[pivot - 1];
    for v in VertexSet::from_mask(cand).iter() {
        let bit = 1u64 << (v - 1);
        bron_kerbosch(nonadj, r | bit, p & nonadj[v - 1], x & nonadj[v - 1], out);
        p &= !bit;
        x |= bit;
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &edges).expect("valid path")
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    Graph::from_edge_list(n, &edges).expect("valid cycle")
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid complete graph")
}

/// Star with center 1 and the given number of leaves.
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
    Graph::from_edge_list(leaves + 1, &edges).expect("valid star")
}

/// The 11-vertex graph of Katzman whose Betti table depends on the field
/// characteristic.  Vertex numbering: a0 = 1, a1..a5 = 2..6, b1..b5 = 7..11.
pub fn katzman_graph() -> Graph {
    let a = |i: usize| i + 1; // a_i for i in 1..=5
    let b = |i: usize| i + 6; // b_i for i in 1..=5
    let mut edges = vec![];
    for i in 1..=5 {
        edges.push((1, a(i))); // hub a0-ai
        edges.push((a(i), b(i))); // spoke ai-bi
        edges.push((b(i), b(i % 5 + 1))); // pentagon b1..b5
    }
    // Pentagram on a1..a5 and the five skew edges.
    for (x, y) in [(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)] {
        edges.push((a(x), a(y)));
    }
    for (x, y) in [(1, 5), (5, 4), (4, 3), (3, 2), (2, 1)] {
        edges.push((a(x), b(y)));
    }
    Graph::from_edge_list(11, &edges).expect("valid graph")
}

/// Named example graphs, usable from tests and the command line.
pub fn builtin(name: &str) -> Option<Graph> {
    match name {
        "k2" => Some(complete_graph(2)),
        "k3" => Some(complete_graph(3)),
        "p3" => Some(path_graph(3)),
        "p4" => Some(path_graph(4)),
        "c4" => Some(cycle_graph(4)),
        "c5" => Some(cycle_graph(5)),
        "c6" => Some(cycle_graph(6)),
        "star3" => Some(star_graph(3)),
        "2k2" => Graph::from_edge_list(4, &[(1, 2), (3, 4)]).ok(),
        "katzman" => Some(katzman_graph()),
        _ => None,
    }
}

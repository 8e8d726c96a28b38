//! Multigraded Betti numbers of R/I(G): β_{i,σ} is the dimension of
//! H̃_{|σ|-i-1} of the independence complex restricted to σ.  Also the
//! derived invariants pdim and reg, cross-characteristic comparison, and the
//! deletion long-exact-sequence dimension inequality.

use crate::complex::{independence_complex_with_limit, independence_homology, reduced_homology_dims};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::Field;
use std::collections::BTreeMap;

/// Default cap on n for full-table computations (2^n multidegrees).
pub const DEFAULT_MAX_TABLE_VERTICES: usize = 16;

/// All nonzero β_{i,σ} of R/I(G) over one field, keyed by (σ, i).  The
/// degree σ = ∅ is never stored: β_{0,∅} = 1 always and every other entry
/// in that degree vanishes.  Betti numbers live only in squarefree degrees,
/// so subsets of the vertex set are the whole story.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: Field,
    entries: BTreeMap<(VertexSet, usize), usize>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, sigma: VertexSet) -> usize {
        self.entries.get(&(sigma, i)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// (σ, i, dimension) triples, σ ascending as bitmasks then i ascending.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, usize, usize)> + '_ {
        self.entries.iter().map(|(&(s, i), &d)| (s, i, d))
    }

    /// Coarsely graded table: (i, j) → Σ over |σ| = j of β_{i,σ}.
    pub fn graded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (s, i, d) in self.iter() {
            *out.entry((i, s.len())).or_insert(0) += d;
        }
        out
    }

    /// Largest homological index with a nonzero entry; 0 for an edgeless
    /// graph (R/I(G) = R is free).
    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(_, i)| i).max().unwrap_or(0)
    }

    /// Largest |σ| − i over nonzero entries; 0 when there are none.
    pub fn reg(&self) -> usize {
        self.entries
            .keys()
            .map(|&(s, i)| s.len() - i)
            .max()
            .unwrap_or(0)
    }
}

/// One multigraded Betti number: dim H̃_{|σ|-i-1}(Δ(G)_σ) over the field.
pub fn betti_entry(g: &Graph, sigma: VertexSet, i: usize, field: Field) -> Result<usize> {
    if sigma.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let c = crate::complex::independence_complex(g, sigma)?;
    let dims = reduced_homology_dims(&c, field)?;
    Ok(dims.dim(sigma.len() as isize - i as isize - 1))
}

pub fn betti_table(g: &Graph, field: Field) -> Result<BettiTable> {
    betti_table_with_limit(g, field, DEFAULT_MAX_TABLE_VERTICES)
}

pub fn betti_table_with_limit(g: &Graph, field: Field, max_n: usize) -> Result<BettiTable> {
    let n = g.vertex_count();
    if n > max_n {
        return Err(Error::GuardExceeded {
            what: "Betti table vertex count",
            value: n,
            limit: max_n,
        });
    }
    let mut entries = BTreeMap::new();
    for mask in 1u64..(1u64 << n) {
        let sigma = VertexSet::from_mask(mask);
        let c = independence_complex_with_limit(g, sigma, max_n.max(crate::complex::DEFAULT_MAX_COMPLEX_VERTICES))?;
        let dims = reduced_homology_dims(&c, field)?;
        let size = sigma.len() as isize;
        for (degree, dim) in dims.nonzero() {
            let i = size - degree - 1;
            assert!(i >= 1, "nonzero Betti number at homological index {i}");
            entries.insert((sigma, i as usize), dim);
        }
    }
    Ok(BettiTable { n, field, entries })
}

/// (pdim, reg) of R/I(G) over the field.
pub fn pdim_reg(g: &Graph, field: Field) -> Result<(usize, usize)> {
    let t = betti_table(g, field)?;
    Ok((t.pdim(), t.reg()))
}

#[derive(Clone, Debug)]
pub struct FieldReport {
    pub field: Field,
    pub pdim: usize,
    pub reg: usize,
    pub table: BettiTable,
}

/// Betti tables of the same graph over several fields, with difference
/// flags.
#[derive(Clone, Debug)]
pub struct CharComparison {
    pub reports: Vec<FieldReport>,
}

impl CharComparison {
    /// True iff every pair of fields produced entry-identical tables.
    pub fn tables_identical(&self) -> bool {
        self.reports
            .windows(2)
            .all(|w| w[0].table.entries == w[1].table.entries)
    }

    /// True iff (pdim, reg) agree across all fields.
    pub fn invariants_agree(&self) -> bool {
        self.reports
            .windows(2)
            .all(|w| (w[0].pdim, w[0].reg) == (w[1].pdim, w[1].reg))
    }

    pub fn characteristic_dependent(&self) -> bool {
        !self.tables_identical()
    }
}

pub fn char_compare(g: &Graph, fields: &[Field]) -> Result<CharComparison> {
    char_compare_with_limit(g, fields, DEFAULT_MAX_TABLE_VERTICES)
}

pub fn char_compare_with_limit(g: &Graph, fields: &[Field], max_n: usize) -> Result<CharComparison> {
    let mut reports = Vec::new();
    for &field in fields {
        let table = betti_table_with_limit(g, field, max_n)?;
        reports.push(FieldReport { field, pdim: table.pdim(), reg: table.reg(), table });
    }
    Ok(CharComparison { reports })
}

/// Dimension consequence of the deletion long exact sequence: with
/// G1 = G − e (edge only) and G2 = G − (N(u) ∪ N(v)) (vertices),
/// dim H̃_{r-1}(ΔG) ≤ dim H̃_{r-1}(ΔG1) + dim H̃_{r-2}(ΔG2).
pub fn les_dim_check(g: &Graph, e: (usize, usize), r: usize, field: Field) -> Result<bool> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let g1 = g.delete_edge(u, v)?;
    let (g2, _) = g.delete_vertices(g.neighbors(u) | g.neighbors(v))?;
    let lhs = independence_homology(g, field)?.dim(r as isize - 1);
    let h1 = independence_homology(&g1, field)?.dim(r as isize - 1);
    let h2 = independence_homology(&g2, field)?.dim(r as isize - 2);
    Ok(lhs <= h1 + h2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, star_graph, Graph};
    use crate::testutil::{all_graphs, random_graph, XorShift};

    fn vs(vals: &[usize]) -> VertexSet {
        vals.iter().copied().collect()
    }

    const F2: Field = Field::Prime(2);
    const F3: Field = Field::Prime(3);

    #[test]
    fn betti_entry_examples() {
        let k2 = complete_graph(2);
        assert_eq!(betti_entry(&k2, vs(&[1, 2]), 1, Field::Rationals).unwrap(), 1);

        let k3 = complete_graph(3);
        assert_eq!(betti_entry(&k3, VertexSet::full(3), 2, Field::Rationals).unwrap(), 2);

        let c4 = cycle_graph(4);
        assert_eq!(betti_entry(&c4, VertexSet::full(4), 3, Field::Rationals).unwrap(), 1);
        assert_eq!(betti_entry(&c4, VertexSet::full(4), 2, Field::Rationals).unwrap(), 0);
        assert_eq!(betti_entry(&c4, VertexSet::full(4), 9, Field::Rationals).unwrap(), 0);

        assert_eq!(
            betti_entry(&k2, VertexSet::EMPTY, 1, Field::Rationals),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn k2_table_is_a_single_entry() {
        let t = betti_table(&complete_graph(2), Field::Rationals).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(1, vs(&[1, 2])), 1);
        assert_eq!((t.pdim(), t.reg()), (1, 1));
    }

    #[test]
    fn c4_table() {
        let t = betti_table(&cycle_graph(4), Field::Rationals).unwrap();
        // Four edges at i=1, four 3-subsets at i=2, the full set at i=3.
        assert_eq!(t.len(), 9);
        assert_eq!(t.get(1, vs(&[1, 2])), 1);
        assert_eq!(t.get(1, vs(&[1, 3])), 0);
        assert_eq!(t.get(2, vs(&[1, 2, 3])), 1);
        assert_eq!(t.get(3, VertexSet::full(4)), 1);
        let graded: Vec<_> = t.graded().into_iter().collect();
        assert_eq!(graded, vec![((1, 2), 4), ((2, 3), 4), ((3, 4), 1)]);
        assert_eq!((t.pdim(), t.reg()), (3, 1));
    }

    #[test]
    fn star_invariants() {
        assert_eq!(pdim_reg(&star_graph(3), Field::Rationals).unwrap(), (3, 1));
    }

    #[test]
    fn edgeless_table_is_empty() {
        let g = Graph::from_edge_list(3, &[]).unwrap();
        let t = betti_table(&g, Field::Rationals).unwrap();
        assert!(t.is_empty());
        assert_eq!((t.pdim(), t.reg()), (0, 0));
    }

    #[test]
    fn table_guard() {
        let g = Graph::from_edge_list_with_limit(17, &[(1, 2)], 17).unwrap();
        assert!(matches!(
            betti_table(&g, Field::Rationals),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn char_compare_small_graphs_field_independent() {
        for g in [cycle_graph(4), complete_graph(2)] {
            let cmp = char_compare(&g, &[Field::Rationals, F2, F3]).unwrap();
            assert!(cmp.tables_identical());
            assert!(cmp.invariants_agree());
            assert!(!cmp.characteristic_dependent());
        }
    }

    #[test]
    fn les_examples() {
        let c4 = cycle_graph(4);
        assert!(les_dim_check(&c4, (1, 2), 1, Field::Rationals).unwrap());
        let k2 = complete_graph(2);
        assert!(les_dim_check(&k2, (1, 2), 1, Field::Rationals).unwrap());
        let c5 = cycle_graph(5);
        for &e in c5.edges() {
            for r in 0..=4 {
                assert!(les_dim_check(&c5, e, r, Field::Rationals).unwrap());
            }
        }
        assert_eq!(
            les_dim_check(&c4, (1, 3), 1, Field::Rationals),
            Err(Error::NotAnEdge { u: 1, v: 3 })
        );
    }

    #[test]
    fn les_exhaustive_tiny() {
        // Acceptance covers n <= 6; keep the unit-level version small.
        for n in 2..=4 {
            for g in all_graphs(n) {
                for &e in g.edges() {
                    for r in 0..=n {
                        assert!(
                            les_dim_check(&g, e, r, Field::Rationals).unwrap(),
                            "{:?} e={:?} r={}",
                            g,
                            e,
                            r
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn betti_depends_only_on_induced_subgraph() {
        let mut rng = XorShift::new(0x5EED_0010);
        for _ in 0..40 {
            let n = 4 + (rng.next() % 4) as usize;
            let g = random_graph(&mut rng, n, 0.5);
            let mask = 1 + rng.next() % ((1 << n) - 1);
            let sigma = VertexSet::from_mask(mask);
            let (sub, _) = g.induced(sigma).unwrap();
            for i in 1..=sigma.len() {
                assert_eq!(
                    betti_entry(&g, sigma, i, Field::Rationals).unwrap(),
                    betti_entry(&sub, sub.vertices(), i, Field::Rationals).unwrap()
                );
            }
        }
    }

    #[test]
    fn betti_invariant_under_relabeling() {
        let mut rng = XorShift::new(0x5EED_0011);
        for _ in 0..25 {
            let n = 4 + (rng.next() % 3) as usize;
            let g = random_graph(&mut rng, n, 0.5);
            // Rotate labels: v → v % n + 1.
            let rotate = |v: usize| v % n + 1;
            let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (rotate(u), rotate(v))).collect();
            let h = Graph::from_edge_list(n, &edges).unwrap();
            let tg = betti_table(&g, Field::Rationals).unwrap();
            let th = betti_table(&h, Field::Rationals).unwrap();
            for (sigma, i, d) in tg.iter() {
                let image: VertexSet = sigma.iter().map(rotate).collect();
                assert_eq!(th.get(i, image), d);
            }
            assert_eq!(tg.len(), th.len());
        }
    }

    #[test]
    fn stored_entries_are_wellformed() {
        let mut rng = XorShift::new(0x5EED_0012);
        for _ in 0..20 {
            let g = random_graph(&mut rng, 6, 0.5);
            let t = betti_table(&g, F2).unwrap();
            let mut pdim = 0;
            let mut reg = 0;
            for (sigma, i, d) in t.iter() {
                assert!(d > 0);
                assert!(i >= 1 && i <= sigma.len());
                pdim = pdim.max(i);
                reg = reg.max(sigma.len() - i);
            }
            assert_eq!(t.pdim(), pdim);
            assert_eq!(t.reg(), reg);
        }
    }
}

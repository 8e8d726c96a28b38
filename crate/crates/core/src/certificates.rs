//! Strongly disjoint families of complete bipartite subgraphs: 3-disjoint
//! edges, the induced matching number, block bipartitions, exhaustive family
//! search, the d invariant, proof-following certificate extraction, and the
//! Betti-number/family equivalence sweep.

use crate::complex::{independence_complex, independence_homology};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hochster::{betti_table, BettiTable};
use crate::linalg::Field;
use crate::wchordal::{copair_edges, is_weakly_chordal, nv_bipartition};
use std::collections::HashMap;

/// Default cap on |σ| for family searches and on n for sweeps.
pub const DEFAULT_MAX_FAMILY_VERTICES: usize = 16;
/// Cap on edge count for the induced-matching search (fits a u128 mask).
pub const MAX_MATCHING_EDGES: usize = 120;

/// A complete bipartite subgraph of a host graph, not necessarily induced:
/// every x-y pair is an edge, while edges inside a side are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteBipartite {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl CompleteBipartite {
    pub fn vertices(&self) -> VertexSet {
        self.x | self.y
    }

    /// Does the edge have one endpoint on each side?
    pub fn crosses(&self, e: (usize, usize)) -> bool {
        (self.x.contains(e.0) && self.y.contains(e.1))
            || (self.x.contains(e.1) && self.y.contains(e.0))
    }
}

/// Vertex-disjoint complete bipartite blocks B_1..B_r with representative
/// cross edges e_1..e_r that are pairwise 3-disjoint in the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyDisjointFamily {
    pub blocks: Vec<CompleteBipartite>,
    pub reps: Vec<(usize, usize)>,
}

impl StronglyDisjointFamily {
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    /// Union of the block vertex sets.
    pub fn covered(&self) -> VertexSet {
        self.blocks
            .iter()
            .fold(VertexSet::EMPTY, |a, b| a | b.vertices())
    }

    /// Σ|V(B_i)| − r, the quantity the d invariant maximizes.
    pub fn weight(&self) -> usize {
        self.covered().len() - self.r()
    }
}

/// Why a claimed family fails verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyViolation {
    RepCountMismatch { blocks: usize, reps: usize },
    EmptySide { block: usize },
    SidesIntersect { block: usize },
    MissingCrossEdge { block: usize, x: usize, y: usize },
    BlocksIntersect { a: usize, b: usize },
    RepDoesNotCross { block: usize },
    RepNotAnEdge { block: usize },
    RepsNot3Disjoint { a: usize, b: usize },
}

impl std::fmt::Display for FamilyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyViolation::RepCountMismatch { blocks, reps } => {
                write!(f, "{blocks} blocks but {reps} representative edges")
            }
            FamilyViolation::EmptySide { block } => write!(f, "block {block} has an empty side"),
            FamilyViolation::SidesIntersect { block } => {
                write!(f, "block {block} has overlapping sides")
            }
            FamilyViolation::MissingCrossEdge { block, x, y } => {
                write!(f, "block {block} cross pair {{{x},{y}}} is not an edge")
            }
            FamilyViolation::BlocksIntersect { a, b } => write!(f, "blocks {a} and {b} intersect"),
            FamilyViolation::RepDoesNotCross { block } => {
                write!(f, "representative of block {block} does not cross its bipartition")
            }
            FamilyViolation::RepNotAnEdge { block } => {
                write!(f, "representative of block {block} is not an edge")
            }
            FamilyViolation::RepsNot3Disjoint { a, b } => {
                write!(f, "representatives {a} and {b} are not 3-disjoint")
            }
        }
    }
}

/// True iff e and f have four distinct endpoints and no edge joins an
/// endpoint of e to an endpoint of f.
pub fn is_3_disjoint(g: &Graph, e: (usize, usize), f: (usize, usize)) -> Result<bool> {
    for (u, v) in [e, f] {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
    }
    Ok(pairs_3_disjoint(g, e, f))
}

fn pairs_3_disjoint(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    for a in [e.0, e.1] {
        for b in [f.0, f.1] {
            if a == b || g.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}

/// Maximum number of pairwise 3-disjoint edges, by branch and bound.
pub fn induced_matching_number(g: &Graph) -> Result<usize> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    if edges.len() > MAX_MATCHING_EDGES {
        return Err(Error::GuardExceeded {
            what: "induced matching edge count",
            value: edges.len(),
            limit: MAX_MATCHING_EDGES,
        });
    }
    let m = edges.len();
    let mut compat = vec![0u128; m];
    for i in 0..m {
        for j in i + 1..m {
            if pairs_3_disjoint(g, edges[i], edges[j]) {
                compat[i] |= 1 << j;
                compat[j] |= 1 << i;
            }
        }
    }
    fn search(cands: u128, compat: &[u128], size: usize, best: &mut usize) {
        if size + cands.count_ones() as usize <= *best {
            return;
        }
        if cands == 0 {
            *best = (*best).max(size);
            return;
        }
        let k = cands.trailing_zeros() as usize;
        search(cands & compat[k], compat, size + 1, best);
        search(cands & !(1 << k), compat, size, best);
    }
    let mut best = 0;
    search((1u128 << m) - 1, &compat, 0, &mut best);
    Ok(best)
}

/// All complete bipartite splits of the block, up to swapping sides.  A
/// split is valid iff each side is a union of connected components of the
/// complement graph restricted to the block; the result is empty iff that
/// restriction is connected.
pub fn block_bipartitions(g: &Graph, block: VertexSet) -> Result<Vec<(VertexSet, VertexSet)>> {
    for v in block.iter() {
        if v > g.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
    }
    if block.len() < 2 {
        return Err(Error::TooFewVertices { need: 2, got: block.len() });
    }
    let comps = g.complement().components_within(block);
    let k = comps.len();
    if k < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    // comps[0] stays on the X side, killing the swap symmetry.
    for bits in 0..(1u64 << (k - 1)) - 1 {
        let mut x = comps[0];
        for (i, &c) in comps.iter().enumerate().skip(1) {
            if bits & (1 << (i - 1)) != 0 {
                x = x | c;
            }
        }
        out.push((x, block - x));
    }
    Ok(out)
}

/// Search state shared across family queries on one graph: complement
/// components per block, memoized by block mask.
struct FamilySearch<'g> {
    g: &'g Graph,
    cg: Graph,
    comps: HashMap<u64, Vec<VertexSet>>,
}

impl<'g> FamilySearch<'g> {
    fn new(g: &'g Graph) -> FamilySearch<'g> {
        FamilySearch { g, cg: g.complement(), comps: HashMap::new() }
    }

    fn comps(&mut self, block: VertexSet) -> &[VertexSet] {
        let cg = &self.cg;
        self.comps
            .entry(block.mask())
            .or_insert_with(|| cg.components_within(block))
    }

    fn feasible(&mut self, block: VertexSet) -> bool {
        block.len() >= 2 && self.comps(block).len() >= 2
    }

    fn comp_of(&mut self, block: VertexSet, v: usize) -> usize {
        self.comps(block)
            .iter()
            .position(|c| c.contains(v))
            .expect("vertex lies in its block")
    }

    /// First valid family partitioning sigma into exactly r blocks, in the
    /// canonical search order (vertices assigned ascending, earlier blocks
    /// preferred).
    fn find(&mut self, sigma: VertexSet, r: usize) -> Option<StronglyDisjointFamily> {
        if r == 0 || sigma.len() < 2 * r {
            return None;
        }
        let mut blocks = Vec::with_capacity(r);
        self.assign(sigma, r, &mut blocks)
    }

    fn assign(
        &mut self,
        remaining: VertexSet,
        r: usize,
        blocks: &mut Vec<VertexSet>,
    ) -> Option<StronglyDisjointFamily> {
        let Some(v) = remaining.min_vertex() else {
            if blocks.len() != r || !blocks.iter().all(|&b| b.len() >= 2) {
                return None;
            }
            let blocks = blocks.clone();
            if !blocks.iter().all(|&b| self.feasible(b)) {
                return None;
            }
            return self.choose_reps(&blocks);
        };
        // Cheap count prune: every block still needs to reach size 2.
        let deficit: usize = blocks.iter().map(|b| 2usize.saturating_sub(b.len())).sum::<usize>()
            + 2 * (r - blocks.len());
        if remaining.len() < deficit {
            return None;
        }
        let rest = remaining.without(v);
        for idx in 0..blocks.len() {
            blocks[idx] = blocks[idx].with(v);
            if let Some(found) = self.assign(rest, r, blocks) {
                return Some(found);
            }
            blocks[idx] = blocks[idx].without(v);
        }
        if blocks.len() < r {
            blocks.push(VertexSet::singleton(v));
            if let Some(found) = self.assign(rest, r, blocks) {
                return Some(found);
            }
            blocks.pop();
        }
        None
    }

    /// Backtracking over representative edges, lexicographic per block,
    /// keeping the chosen set pairwise 3-disjoint.
    fn choose_reps(&mut self, blocks: &[VertexSet]) -> Option<StronglyDisjointFamily> {
        fn rec(
            ctx: &mut FamilySearch<'_>,
            blocks: &[VertexSet],
            idx: usize,
            chosen: &mut Vec<(usize, usize)>,
        ) -> bool {
            if idx == blocks.len() {
                return true;
            }
            let block = blocks[idx];
            let verts = block.to_vec();
            for (ai, &a) in verts.iter().enumerate() {
                for &b in &verts[ai + 1..] {
                    if ctx.comp_of(block, a) == ctx.comp_of(block, b) {
                        continue;
                    }
                    debug_assert!(ctx.g.has_edge(a, b));
                    if chosen.iter().any(|&e| !pairs_3_disjoint(ctx.g, e, (a, b))) {
                        continue;
                    }
                    chosen.push((a, b));
                    if rec(ctx, blocks, idx + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        let mut reps = Vec::with_capacity(blocks.len());
        if !rec(self, blocks, 0, &mut reps) {
            return None;
        }
        let built: Vec<CompleteBipartite> = blocks
            .iter()
            .zip(&reps)
            .map(|(&block, &(a, _))| {
                let ci = self.comp_of(block, a);
                let x = self.comps(block)[ci];
                CompleteBipartite { x, y: block - x }
            })
            .collect();
        let fam = StronglyDisjointFamily { blocks: built, reps };
        debug_assert!(verify_family(self.g, &fam).is_ok());
        Some(fam)
    }
}

fn check_family_query(g: &Graph, sigma: VertexSet, r: usize) -> Result<()> {
    if sigma.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    for v in sigma.iter() {
        if v > g.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
    }
    if r == 0 {
        return Err(Error::ZeroBlocks);
    }
    if sigma.len() > DEFAULT_MAX_FAMILY_VERTICES {
        return Err(Error::GuardExceeded {
            what: "family search vertex count",
            value: sigma.len(),
            limit: DEFAULT_MAX_FAMILY_VERTICES,
        });
    }
    Ok(())
}

/// Finds a strongly disjoint family of exactly r blocks covering sigma
/// exactly, or reports that none exists.  Deterministic: the first witness
/// in the canonical search order.
pub fn family_exists(g: &Graph, sigma: VertexSet, r: usize) -> Result<Option<StronglyDisjointFamily>> {
    check_family_query(g, sigma, r)?;
    Ok(FamilySearch::new(g).find(sigma, r))
}

/// Checks every strongly-disjoint-family invariant against the host graph.
pub fn verify_family(g: &Graph, fam: &StronglyDisjointFamily) -> std::result::Result<(), FamilyViolation> {
    if fam.blocks.len() != fam.reps.len() {
        return Err(FamilyViolation::RepCountMismatch {
            blocks: fam.blocks.len(),
            reps: fam.reps.len(),
        });
    }
    for (bi, block) in fam.blocks.iter().enumerate() {
        if block.x.is_empty() || block.y.is_empty() {
            return Err(FamilyViolation::EmptySide { block: bi });
        }
        if block.x.intersects(block.y) {
            return Err(FamilyViolation::SidesIntersect { block: bi });
        }
        for x in block.x.iter() {
            for y in block.y.iter() {
                if !g.has_edge(x, y) {
                    return Err(FamilyViolation::MissingCrossEdge { block: bi, x, y });
                }
            }
        }
    }
    for a in 0..fam.blocks.len() {
        for b in a + 1..fam.blocks.len() {
            if fam.blocks[a].vertices().intersects(fam.blocks[b].vertices()) {
                return Err(FamilyViolation::BlocksIntersect { a, b });
            }
        }
    }
    for (bi, (&rep, block)) in fam.reps.iter().zip(&fam.blocks).enumerate() {
        if !g.has_edge(rep.0, rep.1) {
            return Err(FamilyViolation::RepNotAnEdge { block: bi });
        }
        if !block.crosses(rep) {
            return Err(FamilyViolation::RepDoesNotCross { block: bi });
        }
    }
    for a in 0..fam.reps.len() {
        for b in a + 1..fam.reps.len() {
            if !pairs_3_disjoint(g, fam.reps[a], fam.reps[b]) {
                return Err(FamilyViolation::RepsNot3Disjoint { a, b });
            }
        }
    }
    Ok(())
}

/// Maximum of Σ|V(B_i)| − r over all strongly disjoint families, with a
/// witness.  Searches candidate values descending, so the first hit wins.
pub fn d_invariant(g: &Graph) -> Result<(usize, StronglyDisjointFamily)> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let n = g.vertex_count();
    if n > DEFAULT_MAX_FAMILY_VERTICES {
        return Err(Error::GuardExceeded {
            what: "d invariant vertex count",
            value: n,
            limit: DEFAULT_MAX_FAMILY_VERTICES,
        });
    }
    let mut ctx = FamilySearch::new(g);
    for value in (1..n).rev() {
        for r in 1..=value {
            let m = value + r;
            if m > n {
                continue;
            }
            for mask in 1u64..(1 << n) {
                if mask.count_ones() as usize != m {
                    continue;
                }
                if let Some(fam) = ctx.find(VertexSet::from_mask(mask), r) {
                    return Ok((value, fam));
                }
            }
        }
    }
    Err(Error::ProofObligation {
        context: "a graph with an edge admits the single-edge family".to_string(),
    })
}

/// Builds a family of r blocks covering sigma by recursing through co-pair
/// edge deletions, given that β_{|σ|-r,σ}(R/I(G)) ≠ 0 over the field and G
/// is weakly chordal.  Each recursion step either drops a co-pair edge
/// (keeping the homology degree) or cuts out a joint neighborhood (dropping
/// the degree by one and contributing one block).
pub fn extract_certificate(
    g: &Graph,
    sigma: VertexSet,
    r: usize,
    field: Field,
) -> Result<StronglyDisjointFamily> {
    check_family_query(g, sigma, r)?;
    if !is_weakly_chordal(g)? {
        return Err(Error::NotWeaklyChordal);
    }
    let c = independence_complex(g, sigma)?;
    let beta = crate::complex::reduced_homology_dims(&c, field)?.dim(r as isize - 1);
    if beta == 0 {
        return Err(Error::BettiVanishes);
    }
    let (gs, relab) = g.induced(sigma)?;
    let inner = extract_inner(&gs, r, field)?;
    let fam = StronglyDisjointFamily {
        blocks: inner
            .blocks
            .iter()
            .map(|b| CompleteBipartite {
                x: relab.set_to_host(b.x),
                y: relab.set_to_host(b.y),
            })
            .collect(),
        reps: inner
            .reps
            .iter()
            .map(|&(a, b)| (relab.to_host(a), relab.to_host(b)))
            .collect(),
    };
    if let Err(v) = verify_family(g, &fam) {
        return Err(Error::ProofObligation {
            context: format!("extracted family fails verification: {v}"),
        });
    }
    if fam.covered() != sigma || fam.r() != r {
        return Err(Error::ProofObligation {
            context: "extracted family does not cover sigma with r blocks".to_string(),
        });
    }
    Ok(fam)
}

/// The recursion proper, over the whole vertex set of the current graph.
fn extract_inner(g: &Graph, r: usize, field: Field) -> Result<StronglyDisjointFamily> {
    let n = g.vertex_count();
    let obligation = |context: String| Error::ProofObligation { context };
    if r == 0 {
        if n == 0 {
            return Ok(StronglyDisjointFamily { blocks: Vec::new(), reps: Vec::new() });
        }
        return Err(obligation(format!("r = 0 reached with {n} vertices uncovered")));
    }
    if n == 0 {
        return Err(obligation("no vertices left but blocks still required".to_string()));
    }
    if !is_weakly_chordal(g)? {
        return Err(obligation("weak chordality lost during recursion".to_string()));
    }
    if g.edge_count() == n * (n - 1) / 2 {
        // Complete graph: the only nonvanishing degree forces r = 1; take
        // the star at the smallest vertex.
        if r != 1 {
            return Err(obligation(format!("complete graph reached with r = {r}")));
        }
        if n < 2 {
            return Err(obligation("complete graph on one vertex has no edge".to_string()));
        }
        let x = VertexSet::singleton(1);
        let y = g.vertices() - x;
        let rep = (1, y.min_vertex().expect("n >= 2"));
        return Ok(StronglyDisjointFamily {
            blocks: vec![CompleteBipartite { x, y }],
            reps: vec![rep],
        });
    }
    let Some(&e) = copair_edges(g).first() else {
        return Err(obligation("incomplete weakly chordal graph without a co-pair edge".to_string()));
    };
    let (u, v) = e;
    let g1 = g.delete_edge(u, v)?;
    let h1 = independence_homology(&g1, field)?.dim(r as isize - 1);
    if h1 != 0 {
        let fam = extract_inner(&g1, r, field)?;
        // The deleted edge is back; the blocks only gain edges, but the
        // representatives must be re-checked for 3-disjointness.
        for a in 0..fam.reps.len() {
            for b in a + 1..fam.reps.len() {
                if !pairs_3_disjoint(g, fam.reps[a], fam.reps[b]) {
                    return Err(obligation(format!(
                        "family from edge-deleted graph not strongly disjoint once {{{u},{v}}} returns"
                    )));
                }
            }
        }
        return Ok(fam);
    }
    let (g2, relab) = g.delete_vertices(g.neighbors(u) | g.neighbors(v))?;
    let h2 = independence_homology(&g2, field)?.dim(r as isize - 2);
    if h2 == 0 {
        return Err(obligation(format!(
            "both deletion branches vanish at edge {{{u},{v}}}, r = {r}"
        )));
    }
    let sub = extract_inner(&g2, r - 1, field)?;
    let mut blocks: Vec<CompleteBipartite> = sub
        .blocks
        .iter()
        .map(|b| CompleteBipartite {
            x: relab.set_to_host(b.x),
            y: relab.set_to_host(b.y),
        })
        .collect();
    let mut reps: Vec<(usize, usize)> = sub
        .reps
        .iter()
        .map(|&(a, b)| (relab.to_host(a), relab.to_host(b)))
        .collect();
    let p = nv_bipartition(g, e)?;
    blocks.push(CompleteBipartite { x: p.x, y: p.y });
    reps.push(e);
    Ok(StronglyDisjointFamily { blocks, reps })
}

/// Per-direction mismatches between nonvanishing Betti numbers and family
/// existence, over all ∅ ≠ σ ⊆ V and 1 ≤ r ≤ |σ|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub weakly_chordal: bool,
    /// Cells (σ, r) with a family but β_{|σ|-r,σ} = 0.  Must be empty for
    /// every graph.
    pub sufficiency_violations: Vec<(VertexSet, usize)>,
    /// Cells (σ, r) with β_{|σ|-r,σ} ≠ 0 but no family.  Must be empty
    /// whenever the graph is weakly chordal.
    pub necessity_violations: Vec<(VertexSet, usize)>,
}

impl EquivalenceReport {
    pub fn clean(&self) -> bool {
        self.sufficiency_violations.is_empty() && self.necessity_violations.is_empty()
    }

    /// No violations in the directions that are guaranteed to hold:
    /// sufficiency everywhere, necessity only under weak chordality.
    pub fn applicable_ok(&self) -> bool {
        self.sufficiency_violations.is_empty()
            && (!self.weakly_chordal || self.necessity_violations.is_empty())
    }
}

/// Compares β_{|σ|-r,σ} ≠ 0 with family existence on every cell.
pub fn verify_equivalence(g: &Graph, field: Field) -> Result<EquivalenceReport> {
    let table: BettiTable = betti_table(g, field)?;
    let weakly_chordal = is_weakly_chordal(g)?;
    let n = g.vertex_count();
    let mut ctx = FamilySearch::new(g);
    let mut sufficiency_violations = Vec::new();
    let mut necessity_violations = Vec::new();
    for mask in 1u64..(1 << n) {
        let sigma = VertexSet::from_mask(mask);
        let size = sigma.len();
        for r in 1..=size {
            let beta_nonzero = size - r >= 1 && table.get(size - r, sigma) != 0;
            let found = ctx.find(sigma, r).is_some();
            match (beta_nonzero, found) {
                (false, true) => sufficiency_violations.push((sigma, r)),
                (true, false) => necessity_violations.push((sigma, r)),
                _ => {}
            }
        }
    }
    Ok(EquivalenceReport { weakly_chordal, sufficiency_violations, necessity_violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{builtin, complete_graph, cycle_graph, path_graph, star_graph, Graph};
    use crate::testutil::{random_graph, XorShift};

    fn vs(vals: &[usize]) -> VertexSet {
        vals.iter().copied().collect()
    }

    #[test]
    fn three_disjointness() {
        let two_k2 = builtin("2k2").unwrap();
        assert!(is_3_disjoint(&two_k2, (1, 2), (3, 4)).unwrap());
        let p4 = path_graph(4);
        assert!(!is_3_disjoint(&p4, (1, 2), (3, 4)).unwrap());
        let c6 = cycle_graph(6);
        assert!(is_3_disjoint(&c6, (1, 2), (4, 5)).unwrap());
        assert!(matches!(
            is_3_disjoint(&c6, (1, 3), (4, 5)),
            Err(Error::NotAnEdge { .. })
        ));
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(induced_matching_number(&complete_graph(2)).unwrap(), 1);
        assert_eq!(induced_matching_number(&cycle_graph(4)).unwrap(), 1);
        assert_eq!(induced_matching_number(&cycle_graph(5)).unwrap(), 1);
        assert_eq!(induced_matching_number(&builtin("2k2").unwrap()).unwrap(), 2);
        assert_eq!(induced_matching_number(&path_graph(4)).unwrap(), 1);
        assert_eq!(induced_matching_number(&cycle_graph(6)).unwrap(), 2);
        assert_eq!(induced_matching_number(&star_graph(5)).unwrap(), 1);
        let edgeless = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(induced_matching_number(&edgeless), Err(Error::EdgelessGraph));
    }

    #[test]
    fn block_bipartition_examples() {
        let c4 = cycle_graph(4);
        assert_eq!(
            block_bipartitions(&c4, VertexSet::full(4)).unwrap(),
            vec![(vs(&[1, 3]), vs(&[2, 4]))]
        );
        assert_eq!(
            block_bipartitions(&complete_graph(2), VertexSet::full(2)).unwrap(),
            vec![(vs(&[1]), vs(&[2]))]
        );
        let p3 = path_graph(3);
        assert_eq!(
            block_bipartitions(&p3, VertexSet::full(3)).unwrap(),
            vec![(vs(&[1, 3]), vs(&[2]))]
        );
        // Complement restriction connected: no bipartition.
        let two_k2 = builtin("2k2").unwrap();
        assert_eq!(block_bipartitions(&two_k2, vs(&[1, 3])).unwrap(), vec![]);
        assert_eq!(
            block_bipartitions(&c4, vs(&[1])),
            Err(Error::TooFewVertices { need: 2, got: 1 })
        );
    }

    /// All bipartitions by brute force: every split of the block into two
    /// nonempty sides with all cross pairs edges, canonicalized so the side
    /// containing the smallest vertex comes first.
    fn block_bipartitions_brute(g: &Graph, block: VertexSet) -> Vec<(VertexSet, VertexSet)> {
        let verts = block.to_vec();
        let b = verts.len();
        let mut out = Vec::new();
        for bits in 0u64..(1 << (b - 1)) {
            // Smallest vertex always on the X side.
            let mut x = VertexSet::singleton(verts[0]);
            for (i, &v) in verts.iter().enumerate().skip(1) {
                if bits & (1 << (i - 1)) != 0 {
                    x = x.with(v);
                }
            }
            let y = block - x;
            if y.is_empty() {
                continue;
            }
            let ok = x.iter().all(|a| y.iter().all(|c| g.has_edge(a, c)));
            if ok {
                out.push((x, y));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn block_bipartitions_match_brute_force_small() {
        let mut rng = XorShift::new(0x5EED_0020);
        for _ in 0..60 {
            let n = 3 + (rng.next() % 4) as usize; // 3..=6
            let g = random_graph(&mut rng, n, 0.5);
            for mask in 1u64..(1 << n) {
                let block = VertexSet::from_mask(mask);
                if block.len() < 2 {
                    continue;
                }
                let mut fast = block_bipartitions(&g, block).unwrap();
                fast.sort();
                assert_eq!(fast, block_bipartitions_brute(&g, block), "{:?} {:?}", g, block);
            }
        }
    }

    #[test]
    fn family_exists_examples() {
        let c4 = cycle_graph(4);
        let fam = family_exists(&c4, VertexSet::full(4), 1).unwrap().unwrap();
        assert_eq!(fam.blocks, vec![CompleteBipartite { x: vs(&[1, 3]), y: vs(&[2, 4]) }]);
        assert_eq!(fam.reps, vec![(1, 2)]);
        assert!(verify_family(&c4, &fam).is_ok());

        assert!(family_exists(&c4, VertexSet::full(4), 2).unwrap().is_none());

        let k2 = complete_graph(2);
        let fam = family_exists(&k2, VertexSet::full(2), 1).unwrap().unwrap();
        assert_eq!(fam.blocks, vec![CompleteBipartite { x: vs(&[1]), y: vs(&[2]) }]);

        let two_k2 = builtin("2k2").unwrap();
        let fam = family_exists(&two_k2, VertexSet::full(4), 2).unwrap().unwrap();
        assert_eq!(fam.covered(), VertexSet::full(4));
        assert_eq!(fam.r(), 2);
        assert!(verify_family(&two_k2, &fam).is_ok());

        assert_eq!(
            family_exists(&c4, VertexSet::EMPTY, 1),
            Err(Error::EmptyVertexSet)
        );
        assert_eq!(family_exists(&c4, VertexSet::full(4), 0), Err(Error::ZeroBlocks));
    }

    #[test]
    fn verify_family_reasons() {
        let p4 = path_graph(4);
        let fam = StronglyDisjointFamily {
            blocks: vec![
                CompleteBipartite { x: vs(&[1]), y: vs(&[2]) },
                CompleteBipartite { x: vs(&[3]), y: vs(&[4]) },
            ],
            reps: vec![(1, 2), (3, 4)],
        };
        assert_eq!(
            verify_family(&p4, &fam),
            Err(FamilyViolation::RepsNot3Disjoint { a: 0, b: 1 })
        );

        let c4 = cycle_graph(4);
        let overlapping = StronglyDisjointFamily {
            blocks: vec![
                CompleteBipartite { x: vs(&[1]), y: vs(&[2]) },
                CompleteBipartite { x: vs(&[2]), y: vs(&[3]) },
            ],
            reps: vec![(1, 2), (2, 3)],
        };
        assert_eq!(
            verify_family(&c4, &overlapping),
            Err(FamilyViolation::BlocksIntersect { a: 0, b: 1 })
        );

        let not_bipartite = StronglyDisjointFamily {
            blocks: vec![CompleteBipartite { x: vs(&[1]), y: vs(&[3]) }],
            reps: vec![(1, 3)],
        };
        assert_eq!(
            verify_family(&c4, &not_bipartite),
            Err(FamilyViolation::MissingCrossEdge { block: 0, x: 1, y: 3 })
        );
    }

    #[test]
    fn d_invariant_examples() {
        let (d, fam) = d_invariant(&cycle_graph(4)).unwrap();
        assert_eq!(d, 3);
        assert_eq!(fam.weight(), 3);
        assert_eq!(d_invariant(&complete_graph(2)).unwrap().0, 1);
        assert_eq!(d_invariant(&star_graph(3)).unwrap().0, 3);
        assert_eq!(d_invariant(&builtin("2k2").unwrap()).unwrap().0, 2);
        let edgeless = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(d_invariant(&edgeless), Err(Error::EdgelessGraph));
    }

    #[test]
    fn extract_examples() {
        let k2 = complete_graph(2);
        let fam = extract_certificate(&k2, VertexSet::full(2), 1, Field::Rationals).unwrap();
        assert_eq!(fam.blocks, vec![CompleteBipartite { x: vs(&[1]), y: vs(&[2]) }]);

        let c4 = cycle_graph(4);
        let fam = extract_certificate(&c4, VertexSet::full(4), 1, Field::Rationals).unwrap();
        assert_eq!(fam.r(), 1);
        assert_eq!(fam.covered(), VertexSet::full(4));
        assert_eq!(fam.blocks[0], CompleteBipartite { x: vs(&[1, 3]), y: vs(&[2, 4]) });

        let two_k2 = builtin("2k2").unwrap();
        let fam = extract_certificate(&two_k2, VertexSet::full(4), 2, Field::Rationals).unwrap();
        assert_eq!(fam.r(), 2);
        assert_eq!(fam.covered(), VertexSet::full(4));
        assert!(verify_family(&two_k2, &fam).is_ok());
    }

    #[test]
    fn extract_errors() {
        let c5 = cycle_graph(5);
        assert_eq!(
            extract_certificate(&c5, VertexSet::full(5), 2, Field::Rationals),
            Err(Error::NotWeaklyChordal)
        );
        let c4 = cycle_graph(4);
        assert_eq!(
            extract_certificate(&c4, VertexSet::full(4), 2, Field::Rationals),
            Err(Error::BettiVanishes)
        );
    }

    #[test]
    fn extract_matches_table_on_random_weakly_chordal() {
        let mut rng = XorShift::new(0x5EED_0021);
        let mut done = 0;
        while done < 8 {
            let n = 4 + (rng.next() % 4) as usize; // 4..=7
            let g = random_graph(&mut rng, n, 0.5);
            if !is_weakly_chordal(&g).unwrap() {
                continue;
            }
            done += 1;
            let table = betti_table(&g, Field::Rationals).unwrap();
            for (sigma, i, _) in table.iter() {
                let r = sigma.len() - i;
                if r == 0 {
                    continue;
                }
                let fam = extract_certificate(&g, sigma, r, Field::Rationals).unwrap();
                assert_eq!(fam.r(), r);
                assert_eq!(fam.covered(), sigma);
                assert!(verify_family(&g, &fam).is_ok());
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let rep = verify_equivalence(&cycle_graph(4), Field::Rationals).unwrap();
        assert!(rep.weakly_chordal);
        assert!(rep.clean());

        let rep = verify_equivalence(&complete_graph(2), Field::Rationals).unwrap();
        assert!(rep.clean());

        // The pentagon: β at (full, r=2) with no family, and nothing else.
        let rep = verify_equivalence(&cycle_graph(5), Field::Rationals).unwrap();
        assert!(!rep.weakly_chordal);
        assert!(rep.sufficiency_violations.is_empty());
        assert_eq!(rep.necessity_violations, vec![(VertexSet::full(5), 2)]);
        assert!(rep.applicable_ok());
    }

    #[test]
    fn sufficiency_on_random_graphs() {
        let mut rng = XorShift::new(0x5EED_0022);
        for _ in 0..25 {
            let n = 3 + (rng.next() % 3) as usize; // 3..=5
            let g = random_graph(&mut rng, n, 0.5);
            let rep = verify_equivalence(&g, Field::Rationals).unwrap();
            assert!(rep.sufficiency_violations.is_empty(), "{:?}", g);
        }
    }
}

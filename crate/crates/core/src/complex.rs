//! Simplicial complexes (faces grouped by cardinality) and reduced homology
//! dimensions over a chosen field, computed from two boundary ranks per
//! degree.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::{exact_rank, Field, SparseIntMatrix};

/// Default cap on |sigma| for a single independence complex.
pub const DEFAULT_MAX_COMPLEX_VERTICES: usize = 20;
/// Cap on the total number of faces in any complex fed to homology.
pub const MAX_TOTAL_FACES: usize = 1 << 20;

/// Faces stored as bitmasks, bucketed by cardinality: `faces[k]` holds the
/// sorted masks of the k-vertex faces, with `faces[0] = [0]` (the empty
/// face) for every nonempty complex.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// Downward closure of the given faces.  An empty iterator produces the
    /// complex with no faces at all (which homology rejects); any face at
    /// all, even the empty one, brings the empty face with it.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(faces: I) -> SimplicialComplex {
        let mut buckets: Vec<std::collections::BTreeSet<u64>> = Vec::new();
        for f in faces {
            let m = f.mask();
            // Walk all subsets of m, including 0.
            let mut sub = m;
            loop {
                let card = sub.count_ones() as usize;
                if buckets.len() <= card {
                    buckets.resize_with(card + 1, Default::default);
                }
                buckets[card].insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        SimplicialComplex {
            faces: buckets.into_iter().map(|b| b.into_iter().collect()).collect(),
        }
    }

    fn from_buckets(faces: Vec<Vec<u64>>) -> SimplicialComplex {
        debug_assert!(faces.iter().all(|b| b.windows(2).all(|w| w[0] < w[1])));
        SimplicialComplex { faces }
    }

    /// Union of all vertices appearing in faces.
    pub fn ground(&self) -> VertexSet {
        VertexSet::from_mask(self.faces.iter().flatten().fold(0, |a, &m| a | m))
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(|b| b.len()).sum()
    }

    /// Largest face cardinality, if there are faces at all.
    pub fn top_card(&self) -> Option<usize> {
        if self.faces.is_empty() {
            None
        } else {
            Some(self.faces.len() - 1)
        }
    }

    /// Dimension of the complex: -1 for {∅}, none if there are no faces.
    pub fn dim(&self) -> Option<isize> {
        self.top_card().map(|k| k as isize - 1)
    }

    /// Masks of the faces with exactly k vertices, sorted ascending.
    pub fn faces_of_card(&self, k: usize) -> &[u64] {
        self.faces.get(k).map_or(&[], |b| b.as_slice())
    }

    pub fn has_face(&self, f: VertexSet) -> bool {
        self.faces_of_card(f.len()).binary_search(&f.mask()).is_ok()
    }

    /// The subcomplex of faces contained in `keep`.
    pub fn restrict(&self, keep: VertexSet) -> SimplicialComplex {
        let km = keep.mask();
        let mut faces: Vec<Vec<u64>> = self
            .faces
            .iter()
            .map(|b| b.iter().copied().filter(|&m| m & !km == 0).collect())
            .collect();
        while faces.last().is_some_and(|b| b.is_empty()) {
            faces.pop();
        }
        SimplicialComplex::from_buckets(faces)
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex({} faces, dim {:?})", self.face_count(), self.dim())
    }
}

/// The independence complex of G restricted to sigma: faces are the
/// independent subsets of sigma.
pub fn independence_complex(g: &Graph, sigma: VertexSet) -> Result<SimplicialComplex> {
    independence_complex_with_limit(g, sigma, DEFAULT_MAX_COMPLEX_VERTICES)
}

pub fn independence_complex_with_limit(
    g: &Graph,
    sigma: VertexSet,
    max_vertices: usize,
) -> Result<SimplicialComplex> {
    for v in sigma.iter() {
        if v > g.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
    }
    if sigma.len() > max_vertices {
        return Err(Error::GuardExceeded {
            what: "independence complex vertex count",
            value: sigma.len(),
            limit: max_vertices,
        });
    }
    let mut buckets: Vec<Vec<u64>> = vec![vec![0]];
    let mut total = 1usize;
    // Depth-first over independent sets, adding vertices in ascending order.
    let mut stack: Vec<(u64, usize, VertexSet)> = vec![(0, 0, sigma)];
    while let Some((face, card, cands)) = stack.pop() {
        for v in cands.iter() {
            let extended = face | VertexSet::singleton(v).mask();
            if buckets.len() <= card + 1 {
                buckets.push(Vec::new());
            }
            buckets[card + 1].push(extended);
            total += 1;
            if total > MAX_TOTAL_FACES {
                return Err(Error::GuardExceeded {
                    what: "total face count",
                    value: total,
                    limit: MAX_TOTAL_FACES,
                });
            }
            // Candidates after v: strictly larger and not adjacent to v.
            let next = cands.mask() & (u64::MAX << v) & !g.neighbors(v).mask();
            if next != 0 {
                stack.push((extended, card + 1, VertexSet::from_mask(next)));
            }
        }
    }
    for b in &mut buckets {
        b.sort_unstable();
    }
    Ok(SimplicialComplex::from_buckets(buckets))
}

/// Reduced homology of the full independence complex of a graph.  A graph
/// with no vertices yields the complex {∅}, whose only homology is
/// H̃_{-1} = 1.
pub fn independence_homology(g: &Graph, field: Field) -> Result<HomologyDims> {
    let c = independence_complex(g, g.vertices())?;
    reduced_homology_dims(&c, field)
}

/// Reduced homology dimensions: `dim(d)` is dim H̃_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<usize>, // dims[k] = dim H̃_{k-1}
}

impl HomologyDims {
    pub fn dim(&self, degree: isize) -> usize {
        let k = degree + 1;
        if k < 0 {
            return 0;
        }
        self.dims.get(k as usize).copied().unwrap_or(0)
    }

    /// Highest degree with nonzero homology.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.dims
            .iter()
            .rposition(|&d| d != 0)
            .map(|k| k as isize - 1)
    }

    /// (degree, dimension) pairs for the nonzero groups, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(k, &d)| (k as isize - 1, d))
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Boundary map from k-vertex faces to (k-1)-vertex faces, with signs from
/// ascending vertex order; k = 1 is the augmentation (vertices map to the
/// empty face).
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> SparseIntMatrix {
    assert!(k >= 1 && Some(k) <= c.top_card(), "no boundary map at cardinality {k}");
    let domain = c.faces_of_card(k);
    let codomain = c.faces_of_card(k - 1);
    let mut m = SparseIntMatrix::new(codomain.len(), domain.len());
    for (col, &face) in domain.iter().enumerate() {
        for (j, v) in VertexSet::from_mask(face).iter().enumerate() {
            let sub = face & !(1u64 << (v - 1));
            let row = codomain
                .binary_search(&sub)
                .expect("complex is downward closed");
            m.push(row, col, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Reduced homology over the field, from ranks of consecutive boundary maps:
/// dim H̃_{k-1} = #k-faces − rank ∂_k − rank ∂_{k+1}.  The complex {∅} has
/// H̃_{-1} = 1; any complex with a vertex has H̃_{-1} = 0.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: Field) -> Result<HomologyDims> {
    let Some(top) = c.top_card() else {
        return Err(Error::EmptyComplex);
    };
    let total = c.face_count();
    if total > MAX_TOTAL_FACES {
        return Err(Error::GuardExceeded {
            what: "total face count",
            value: total,
            limit: MAX_TOTAL_FACES,
        });
    }
    let counts: Vec<isize> = (0..=top).map(|k| c.faces_of_card(k).len() as isize).collect();
    let mut ranks = vec![0isize; top + 2]; // ranks[k] = rank ∂_k, with ranks[0] = ranks[top+1] = 0
    for k in 1..=top {
        ranks[k] = exact_rank(&boundary_matrix(c, k), field)? as isize;
    }
    let mut dims = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let d = counts[k] - ranks[k] - ranks[k + 1];
        assert!(d >= 0, "negative homology dimension at degree {}", k as isize - 1);
        dims.push(d as usize);
    }
    // Alternating sums of face counts and homology dimensions must agree.
    let chi_faces: isize = counts
        .iter()
        .enumerate()
        .map(|(k, &m)| if k % 2 == 0 { -m } else { m })
        .sum();
    let chi_homology: isize = dims
        .iter()
        .enumerate()
        .map(|(k, &d)| if k % 2 == 0 { -(d as isize) } else { d as isize })
        .sum();
    assert_eq!(chi_faces, chi_homology, "Euler characteristic mismatch");
    Ok(HomologyDims { dims })
}

use std::fmt;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex label fell outside 1..=n.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joined a vertex to itself.
    SelfLoop { vertex: usize },
    /// A graph was requested with zero vertices.
    NoVertices,
    /// A vertex count exceeded what the bitset representation supports.
    TooManyVertices { n: usize, max: usize },
    /// An operation needed a nonempty vertex set.
    EmptyVertexSet,
    /// A vertex set was smaller than the operation requires.
    TooFewVertices { need: usize, got: usize },
    /// A family search was asked for zero blocks.
    ZeroBlocks,
    /// A pair of vertices was required to be an edge but is not.
    NotAnEdge { u: usize, v: usize },
    /// An operation is undefined on a graph with no edges.
    EdgelessGraph,
    /// Two vertices were required to be non-adjacent but are adjacent.
    VerticesAdjacent { u: usize, v: usize },
    /// Two vertex arguments were required to be distinct.
    SameVertex { vertex: usize },
    /// A size limit guarding against runaway computation was exceeded.
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    /// A field characteristic was not a prime.
    NotPrime { modulus: u32 },
    /// A simplicial complex with no faces at all was supplied.
    EmptyComplex,
    /// The graph is not weakly chordal, so the requested routine does not apply.
    NotWeaklyChordal,
    /// The given edge is not a co-pair edge of the graph.
    NotCopairEdge { u: usize, v: usize },
    /// A certificate was requested for a Betti number that vanishes.
    BettiVanishes,
    /// An internal step that theory guarantees must succeed failed; this
    /// indicates a bug, and the context string says where.
    ProofObligation { context: String },
    /// Input text could not be parsed.
    Parse { line: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::NoVertices => write!(f, "graph must have at least one vertex"),
            Error::TooManyVertices { n, max } => {
                write!(f, "{n} vertices exceeds the supported maximum {max}")
            }
            Error::EmptyVertexSet => write!(f, "vertex set must be nonempty"),
            Error::TooFewVertices { need, got } => {
                write!(f, "vertex set needs at least {need} vertices, got {got}")
            }
            Error::ZeroBlocks => write!(f, "family must have at least one block"),
            Error::NotAnEdge { u, v } => write!(f, "{{{u},{v}}} is not an edge"),
            Error::EdgelessGraph => write!(f, "operation undefined on an edgeless graph"),
            Error::VerticesAdjacent { u, v } => write!(f, "vertices {u} and {v} are adjacent"),
            Error::SameVertex { vertex } => write!(f, "expected two distinct vertices, got {vertex} twice"),
            Error::GuardExceeded { what, value, limit } => {
                write!(f, "guard exceeded: {what} = {value} > limit {limit} (raise the limit explicitly to proceed)")
            }
            Error::NotPrime { modulus } => write!(f, "{modulus} is not prime"),
            Error::EmptyComplex => write!(f, "complex has no faces"),
            Error::NotWeaklyChordal => write!(f, "graph is not weakly chordal"),
            Error::NotCopairEdge { u, v } => write!(f, "{{{u},{v}}} is not a co-pair edge"),
            Error::BettiVanishes => write!(f, "the requested Betti number is zero"),
            Error::ProofObligation { context } => {
                write!(f, "internal invariant violated ({context}); this is a bug")
            }
            Error::Parse { line: 0, msg } => write!(f, "parse error: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error on line {line}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by the graph types, solvers, constructions and formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} requires at least {min}, got {got}")]
    SizeTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("loop at vertex {v} is not allowed")]
    LoopEdge { v: usize },

    #[error("vertex {v} out of range for order {order}")]
    VertexOutOfRange { v: usize, order: usize },

    #[error("opposite arcs ({u},{v}) and ({v},{u}) violate antisymmetry")]
    OppositeArcs { u: usize, v: usize },

    #[error("circulant tournament needs an odd order, got {n}")]
    CirculantEvenOrder { n: usize },

    #[error("residue set must contain exactly one of {d} and {complement} (mod {n})")]
    BadResidues {
        d: usize,
        complement: usize,
        n: usize,
    },

    #[error("{what} cap exceeded: {actual} > {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("input graph is not {expected}")]
    NotOrientationOf { expected: &'static str },

    #[error("vertex map has {got} entries, expected {expected}")]
    MapSizeMismatch { expected: usize, got: usize },

    #[error("image {image} out of range for target order {order}")]
    ImageOutOfRange { image: usize, order: usize },

    #[error("{what} does not verify as a homomorphism")]
    NotHomomorphism { what: &'static str },

    #[error("{what} is not a proper coloring of {graph}")]
    NotProperColoring {
        what: &'static str,
        graph: &'static str,
    },

    #[error("vertex {vertex}: incident arcs demand opposite direction records for color class {color}")]
    AmbiguousArcRecord { vertex: usize, color: usize },

    #[error("vertex {vertex} has {count} neighbors in color class {color}, expected at most one")]
    NonUniqueNeighbor {
        vertex: usize,
        color: usize,
        count: usize,
    },

    #[error("the lexicographic product only has layers that copy the right factor")]
    LexicographicLayer,

    #[error("pairwise map composition is undefined for the direct product; use a projection")]
    DirectComposition,

    #[error("duplicate labels in a structured target")]
    DuplicateLabels,

    #[error("format error: {0}")]
    Format(String),
}

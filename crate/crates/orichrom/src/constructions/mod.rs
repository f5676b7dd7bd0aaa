//! Constructive target graphs and the explicit homomorphisms into them.
//!
//! Every builder here returns a certificate: a structured target (an oriented
//! graph whose vertices carry decoded labels) together with vertex maps that
//! are re-verified arc by arc. Factor data (proper colorings and per-layer
//! homomorphisms) can be derived automatically from the exact solvers or
//! injected by the caller for reproducibility.

mod bipartite;
mod cartesian;
mod compose;
mod direct;
mod lexico;
mod paths;
mod square;
mod strong;

pub use bipartite::{bipartite_hom, bipartite_target, bipartite_tight_orientation};
pub use cartesian::{cartesian_upper_hom, cartesian_upper_target, CartesianFactors};
pub use compose::{product_hom_compose, projection_hom};
pub use direct::{direct_upper_hom, direct_upper_order, direct_upper_target, DirectFactors};
pub use lexico::{lexico_upper_hom, lexico_upper_target, LexicoFactors};
pub use paths::{c3_cartesian_path_hom, t7_strong_grid_hom};
pub use square::{square_color_labels, square_coloring};
pub use strong::{strong_upper_hom, strong_upper_target, StrongFactors};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// Decoded vertex label of a constructed target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// Letter vertex `a_i` (1-based).
    A(usize),
    /// Subset vertex `b_S`; the mask's bit `i` stands for element `i + 1`.
    BSubset(u32),
    /// Coordinate tuple, sentinel coordinates included.
    Tuple(Vec<u32>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(i) => write!(f, "a{i}"),
            Label::BSubset(mask) => {
                let elems: Vec<String> = (0..32)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (b + 1).to_string())
                    .collect();
                write!(f, "b{{{}}}", elems.join(","))
            }
            Label::Tuple(coords) => {
                let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// An oriented target graph whose vertices carry decoded labels. The label
/// list is index-aligned with the vertex numbering and labels are pairwise
/// distinct.
#[derive(Clone, Debug)]
pub struct StructuredTarget {
    pub graph: OrientedGraph,
    pub labels: Vec<Label>,
}

impl StructuredTarget {
    pub fn new(graph: OrientedGraph, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != graph.order() {
            return Err(Error::MapSizeMismatch {
                expected: graph.order(),
                got: labels.len(),
            });
        }
        let distinct: BTreeSet<&Label> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::DuplicateLabels);
        }
        Ok(StructuredTarget { graph, labels })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Extracts the left-factor layer of a product orientation: the orientation
/// induced on `{ [i, fixed] : i < ng }`, relabeled to `0..ng`.
pub(crate) fn left_layer_of(d: &OrientedGraph, ng: usize, nh: usize, fixed: usize) -> OrientedGraph {
    let verts: Vec<usize> = (0..ng).map(|i| i * nh + fixed).collect();
    d.induced(&verts).expect("layer vertices are in range")
}

/// Extracts the right-factor layer: the orientation induced on
/// `{ [fixed, j] : j < nh }`, relabeled to `0..nh`.
pub(crate) fn right_layer_of(d: &OrientedGraph, _ng: usize, nh: usize, fixed: usize) -> OrientedGraph {
    let verts: Vec<usize> = (0..nh).map(|j| fixed * nh + j).collect();
    d.induced(&verts).expect("layer vertices are in range")
}

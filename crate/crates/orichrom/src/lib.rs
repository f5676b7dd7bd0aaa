//! Exact tools for oriented colorings of small graphs: oriented and upper
//! oriented chromatic numbers, the four standard graph products, universal
//! tournaments, and explicit target constructions whose homomorphisms are
//! re-verified arc by arc.
//!
//! Everything is exact and deterministic. Solvers are exhaustive
//! backtracking searches guarded by explicit caps; constructions return
//! certificates (a labeled target graph plus a vertex map) rather than bare
//! numbers.
//!
//! ```
//! use orichrom::{graph, solver, Caps};
//!
//! let caps = Caps::default();
//! let c3 = graph::cycle(3)?;
//! // Some orientation of the triangle needs 3 colors, but no single
//! // 3-vertex target receives every orientation; the least one has 4.
//! assert_eq!(solver::chi_o_undirected(&c3, &caps, 1)?, 3);
//! assert_eq!(solver::chi_o_plus(&c3, 5, &caps)?, Some(4));
//! # Ok::<(), orichrom::Error>(())
//! ```

pub mod caps;
pub mod checks;
pub mod cli;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod formats;
pub mod graph;
pub mod homomorphism;
pub mod products;
pub mod report;
pub mod solver;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{OrientedGraph, UndirectedGraph};
pub use homomorphism::VertexMap;

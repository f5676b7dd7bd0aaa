//! Resource caps for the exhaustive solvers and constructions.
//!
//! Every cap violation is a distinct error, never a silently wrong answer.

/// Size limits for enumeration-heavy operations.
#[derive(Clone, Debug)]
pub struct Caps {
    /// Maximum number of edges for a full orientation sweep (2^edges graphs).
    pub orientation_edges: usize,
    /// Maximum vertex count accepted by the exact coloring solvers.
    pub solver_vertices: usize,
    /// Maximum order of candidate targets enumerated by the universal-target
    /// search.
    pub target_order: usize,
    /// Maximum `n` for the n-universal tournament search.
    pub universal_n: usize,
    /// Maximum bit width of subset labels (the `m` of subset-target builders).
    pub subset_width: usize,
    /// Maximum order of a constructed target graph.
    pub construction_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            orientation_edges: 30,
            solver_vertices: 12,
            target_order: 5,
            universal_n: 4,
            subset_width: 20,
            construction_order: 5_000,
        }
    }
}

/// Environment variable that overrides the default orientation-sweep cap.
pub const CAP_EDGES_ENV: &str = "ORICHROM_CAP_EDGES";

impl Caps {
    /// Default caps with the `ORICHROM_CAP_EDGES` override applied when set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(text) = std::env::var(CAP_EDGES_ENV) {
            if let Ok(value) = text.trim().parse::<usize>() {
                caps.orientation_edges = value;
            }
        }
        caps
    }
}

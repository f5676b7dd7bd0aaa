//! JSON run reports (schema version 1).
//!
//! Reports are deterministic given identical inputs, seed and job count;
//! `elapsed_ms` is the only field that varies between identical runs.

use serde::Serialize;

use crate::caps::Caps;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CapsEcho {
    pub orientation_edges: usize,
    pub solver_vertices: usize,
    pub target_order: usize,
    pub universal_n: usize,
    pub subset_width: usize,
    pub construction_order: usize,
}

impl From<&Caps> for CapsEcho {
    fn from(c: &Caps) -> Self {
        CapsEcho {
            orientation_edges: c.orientation_edges,
            solver_vertices: c.solver_vertices,
            target_order: c.target_order,
            universal_n: c.universal_n,
            subset_width: c.subset_width,
            construction_order: c.construction_order,
        }
    }
}

/// One command run: echo of the command and inputs, cap settings, computed
/// values, and optionally witness maps.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: serde_json::Value,
    pub caps: CapsEcho,
    pub seed: u64,
    pub jobs: usize,
    pub values: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

//! Definition-level oracles for every invariant the closed-form predictors
//! claim. Nothing in this module consults the formulas module: these are the
//! independent side of every cross-check.

mod clique;
mod coloring;
mod domination;
mod hamiltonian;
mod isomorphism;
mod metric;
mod traversal;

pub use clique::{find_clique_of_size, max_clique};
pub use coloring::{chromatic_index_exact, chromatic_number_exact, line_graph};
pub use domination::{domination_number_exact, has_dominating_set_of_size};
pub use hamiltonian::{is_hamiltonian_exact, HamiltonianResult};
pub use isomorphism::are_isomorphic;
pub use metric::metric_dimension_exact;
pub use traversal::{
    all_pairs_distances, connectivity, degrees, diameter, girth, is_eulerian, twin_classes,
    Connectivity, DegreeSummary,
};

use serde::Serialize;

/// Diameter of a graph: undefined below two vertices, infinite when
/// disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiameterValue {
    #[serde(rename = "undefined")]
    Undefined,
    #[serde(rename = "infinite")]
    Infinite,
    #[serde(rename = "finite")]
    Finite(u32),
}

impl std::fmt::Display for DiameterValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DiameterValue::Undefined => write!(f, "undefined"),
            DiameterValue::Infinite => write!(f, "infinite"),
            DiameterValue::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Girth of a graph; `Acyclic` when no cycle exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GirthValue {
    #[serde(rename = "acyclic")]
    Acyclic,
    #[serde(rename = "finite")]
    Finite(u32),
}

impl std::fmt::Display for GirthValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GirthValue::Acyclic => write!(f, "acyclic"),
            GirthValue::Finite(g) => write!(f, "{g}"),
        }
    }
}

/// The basic structural invariants, computed from definitions.
#[derive(Debug, Clone, Serialize)]
pub struct ExactInvariants {
    pub is_connected: bool,
    pub component_count: usize,
    pub diameter: DiameterValue,
    pub girth: GirthValue,
    pub degree_sequence: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_eulerian: bool,
    pub is_regular: bool,
    pub is_complete: bool,
}

/// Assemble the cheap structural invariants of a graph.
pub fn exact_invariants(g: &crate::graph::Graph) -> ExactInvariants {
    let conn = connectivity(g);
    let deg = degrees(g);
    ExactInvariants {
        is_connected: conn.is_connected,
        component_count: conn.component_count,
        diameter: diameter(g),
        girth: girth(g),
        max_degree: deg.max_degree,
        min_degree: deg.min_degree,
        degree_sequence: deg.sequence,
        is_eulerian: is_eulerian(g),
        is_regular: g.is_regular(),
        is_complete: g.is_complete(),
    }
}

//! Total zero-divisor graphs of finite commutative rings.
//!
//! The total zero-divisor graph of a commutative unital ring R has the
//! nonzero zero-divisors as vertices, with u ~ v exactly when uv = 0 and
//! u + v is again a zero-divisor (0 counts as one). This crate builds these
//! graphs for Z_m and for products of residue rings, evaluates every
//! closed-form invariant formula in that regime, constructs the certificate
//! objects (colorings, cliques, dominating/resolving sets, Hamiltonicity
//! obstructions) that prove the formulas tight, and cross-validates all of
//! it against definition-level brute-force oracles.
//!
//! Layering: `arith` and `ring` do the algebra, `graph` builds graphs,
//! `formulas` predicts invariants from factorizations alone, `exact`
//! recomputes them from definitions, `certify` builds and checks witnesses,
//! and `report` ties everything into the CLI harness.

pub mod arith;
pub mod certify;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod report;
pub mod ring;

pub use error::{Error, Result};

/// Search budgets for the exact oracles. A blown budget is always reported
/// as a resource error, never as a mathematical answer.
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Vertex cap for exact chromatic number.
    pub chi_vertices: usize,
    /// Edge cap for exact chromatic index (line-graph coloring).
    pub chi_index_edges: usize,
    /// Vertex cap for Hamiltonian search.
    pub ham_vertices: usize,
    /// Subset cap for domination search.
    pub dom_subsets: u64,
    /// Candidate cap for the twin-reduced metric dimension search.
    pub dim_candidates: u64,
    /// Node cap shared by the backtracking searches.
    pub search_nodes: u64,
    /// Element cap for full ring enumeration.
    pub ring_elements: u64,
    /// Vertex cap for dense graph construction.
    pub graph_vertices: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            chi_vertices: 64,
            chi_index_edges: 64,
            ham_vertices: 40,
            dom_subsets: 1_000_000,
            dim_candidates: 1_000_000,
            search_nodes: 20_000_000,
            ring_elements: crate::ring::DEFAULT_ELEMENT_BUDGET,
            graph_vertices: crate::graph::DEFAULT_VERTEX_BUDGET,
        }
    }
}

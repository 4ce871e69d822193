//! Hamiltonian cycle search: backtracking with degree and connectivity
//! pruning. Resource exhaustion is reported separately from a refutation.

use super::traversal::connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct HamiltonianResult {
    pub hamiltonian: bool,
    /// Vertex order of a witness cycle (closing edge back to the first).
    pub cycle: Option<Vec<usize>>,
    /// Short reason when refuted without search.
    pub note: Option<String>,
}

fn refuted(note: &str) -> HamiltonianResult {
    HamiltonianResult {
        hamiltonian: false,
        cycle: None,
        note: Some(note.to_string()),
    }
}

struct HamSearch<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl HamSearch<'_> {
    fn extend(&mut self) -> Result<bool> {
        let n = self.g.n();
        let current = *self.path.last().expect("path nonempty");
        if self.path.len() == n {
            return Ok(self.g.has_edge(current, self.path[0]));
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!(
                "Hamiltonian search exceeded {} nodes",
                self.budget
            )));
        }
        // prune: every unvisited vertex must keep at least 2 usable ends
        // (unvisited neighbors, the path head, or the path tail)
        let start = self.path[0];
        for v in 0..n {
            if self.visited[v] {
                continue;
            }
            let mut usable = 0;
            for u in self.g.neighbors(v) {
                if !self.visited[u] || u == current || u == start {
                    usable += 1;
                    if usable >= 2 {
                        break;
                    }
                }
            }
            if usable < 2 {
                return Ok(false);
            }
        }
        for v in self.g.neighbors(current) {
            if self.visited[v] {
                continue;
            }
            self.visited[v] = true;
            self.path.push(v);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[v] = false;
        }
        Ok(false)
    }
}

pub fn is_hamiltonian_exact(
    g: &Graph,
    vertex_budget: usize,
    node_budget: u64,
) -> Result<HamiltonianResult> {
    let n = g.n();
    if n > vertex_budget {
        return Err(Error::resource(format!(
            "Hamiltonian search on {n} vertices exceeds budget {vertex_budget}"
        )));
    }
    if n < 3 {
        return Ok(refuted("fewer than 3 vertices"));
    }
    if !connectivity(g).is_connected {
        return Ok(refuted("disconnected"));
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(refuted("vertex of degree < 2"));
    }
    let mut search = HamSearch {
        g,
        visited: vec![false; n],
        path: vec![0],
        nodes: 0,
        budget: node_budget,
    };
    search.visited[0] = true;
    if search.extend()? {
        Ok(HamiltonianResult {
            hamiltonian: true,
            cycle: Some(search.path),
            note: None,
        })
    } else {
        Ok(refuted("backtracking exhausted"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_total_zero_divisor_graph, DEFAULT_VERTEX_BUDGET as B};

    const NODES: u64 = 1 << 22;

    #[test]
    fn k4_is_hamiltonian() {
        let g = build_total_zero_divisor_graph(25, B).unwrap();
        let res = is_hamiltonian_exact(&g, 40, NODES).unwrap();
        assert!(res.hamiltonian);
        let cycle = res.cycle.unwrap();
        assert_eq!(cycle.len(), 4);
        for w in cycle.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
        assert!(g.has_edge(cycle[3], cycle[0]));
    }

    #[test]
    fn path_is_not_hamiltonian() {
        let g = build_total_zero_divisor_graph(8, B).unwrap();
        assert!(!is_hamiltonian_exact(&g, 40, NODES).unwrap().hamiltonian);
    }

    #[test]
    fn sixteen_is_not_hamiltonian() {
        let g = build_total_zero_divisor_graph(16, B).unwrap();
        let res = is_hamiltonian_exact(&g, 40, NODES).unwrap();
        assert!(!res.hamiltonian);
    }

    #[test]
    fn budget_error() {
        let g = build_total_zero_divisor_graph(49, B).unwrap();
        assert!(matches!(
            is_hamiltonian_exact(&g, 3, NODES),
            Err(Error::Resource(_))
        ));
    }
}

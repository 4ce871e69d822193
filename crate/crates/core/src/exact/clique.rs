//! Clique search by backtracking over candidate bitsets with degree pruning.

use crate::error::{Error, Result};
use crate::graph::Graph;

struct CliqueSearch<'a> {
    g: &'a Graph,
    k: usize,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    fn extend(&mut self, current: &mut Vec<usize>, cand: &[u64]) -> Result<bool> {
        if current.len() == self.k {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!(
                "clique search exceeded {} nodes",
                self.budget
            )));
        }
        let need = self.k - current.len();
        let avail: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
        if avail < need {
            return Ok(false);
        }
        let words = self.g.words();
        for v in bits(cand) {
            // candidates are consumed in ascending order; keep only those
            // above v so permutations of one clique are never revisited
            let mut next = vec![0u64; words];
            let row = self.g.row(v);
            for w in 0..words {
                next[w] = cand[w] & row[w];
            }
            let wv = v / 64;
            for w in next.iter_mut().take(wv) {
                *w = 0;
            }
            next[wv] &= !((1u64 << (v % 64)) | ((1u64 << (v % 64)) - 1));
            current.push(v);
            if self.extend(current, &next)? {
                return Ok(true);
            }
            current.pop();
        }
        Ok(false)
    }
}

fn bits(words: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (wi, &w) in words.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            out.push(wi * 64 + w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
    out
}

/// Find any clique of exactly `k` vertices, or None. Vertices of degree
/// < k-1 are discarded up front; the search consumes candidates in vertex
/// order, so the witness is deterministic.
pub fn find_clique_of_size(g: &Graph, k: usize, node_budget: u64) -> Result<Option<Vec<usize>>> {
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 1 {
        return Ok((g.n() > 0).then(|| vec![0]));
    }
    let words = g.words();
    let mut cand = vec![0u64; words];
    for v in 0..g.n() {
        if g.degree(v) >= k - 1 {
            cand[v / 64] |= 1 << (v % 64);
        }
    }
    let mut search = CliqueSearch {
        g,
        k,
        nodes: 0,
        budget: node_budget,
    };
    let mut current = Vec::with_capacity(k);
    Ok(search
        .extend(&mut current, &cand)?
        .then_some(current))
}

/// Maximum clique by growing k until no k-clique exists.
pub fn max_clique(g: &Graph, node_budget: u64) -> Result<Vec<usize>> {
    let mut best = Vec::new();
    for k in 1..=g.n() {
        match find_clique_of_size(g, k, node_budget)? {
            Some(c) => best = c,
            None => break,
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_total_zero_divisor_graph, DEFAULT_VERTEX_BUDGET as B};

    #[test]
    fn five_clique_in_36() {
        let g = build_total_zero_divisor_graph(36, B).unwrap();
        let clique = find_clique_of_size(&g, 5, 1 << 20).unwrap().unwrap();
        let residues: Vec<u64> = clique.iter().map(|&i| g.label(i).coords[0]).collect();
        assert_eq!(residues, vec![6, 12, 18, 24, 30]);
        for (a, &i) in clique.iter().enumerate() {
            for &j in &clique[a + 1..] {
                assert!(g.has_edge(i, j));
            }
        }
        assert!(find_clique_of_size(&g, 6, 1 << 20).unwrap().is_none());
    }

    #[test]
    fn no_4_clique_in_30() {
        let g = build_total_zero_divisor_graph(30, B).unwrap();
        assert!(find_clique_of_size(&g, 4, 1 << 20).unwrap().is_none());
        assert_eq!(max_clique(&g, 1 << 20).unwrap().len(), 3);
    }

    #[test]
    fn single_vertex_clique() {
        let g = build_total_zero_divisor_graph(12, B).unwrap();
        assert_eq!(find_clique_of_size(&g, 1, 10).unwrap(), Some(vec![0]));
    }

    #[test]
    fn budget_is_distinct_from_none() {
        let g = build_total_zero_divisor_graph(360, B).unwrap();
        match find_clique_of_size(&g, 8, 1) {
            Err(crate::error::Error::Resource(_)) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }
}

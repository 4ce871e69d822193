//! Exhaustive domination-number search over subsets in ascending size and
//! lexicographic order.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn closed_neighborhoods(g: &Graph) -> Vec<Vec<u64>> {
    let words = g.words();
    (0..g.n())
        .map(|v| {
            let mut row = g.row(v).to_vec();
            row[v / 64] |= 1 << (v % 64);
            row
        })
        .collect()
}

fn full_mask(n: usize, words: usize) -> Vec<u64> {
    let mut mask = vec![u64::MAX; words];
    if n % 64 != 0 && words > 0 {
        mask[words - 1] = (1u64 << (n % 64)) - 1;
    }
    mask
}

/// Visits k-subsets of 0..n in lexicographic order, calling `check`;
/// stops early on success. Returns Ok(None) when exhausted, and errors
/// once more than `budget` subsets were inspected.
fn search_subsets(
    n: usize,
    k: usize,
    budget: u64,
    mut check: impl FnMut(&[usize]) -> bool,
) -> Result<Option<Vec<usize>>> {
    if k > n {
        return Ok(None);
    }
    let mut subset: Vec<usize> = (0..k).collect();
    let mut inspected = 0u64;
    loop {
        inspected += 1;
        if inspected > budget {
            return Err(Error::resource(format!(
                "subset search exceeded {budget} candidates"
            )));
        }
        if check(&subset) {
            return Ok(Some(subset));
        }
        // advance to the next k-combination in lexicographic order
        let mut i = k;
        while i > 0 && subset[i - 1] == n - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return Ok(None);
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// True iff some dominating set of exactly `k` vertices exists.
pub fn has_dominating_set_of_size(g: &Graph, k: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n == 0 {
        return Ok((k == 0).then(Vec::new));
    }
    if k == 0 {
        return Ok(None);
    }
    let closed = closed_neighborhoods(g);
    let full = full_mask(n, g.words());
    search_subsets(n, k, budget, |subset| {
        let mut cover = vec![0u64; g.words()];
        for &v in subset {
            for (w, &bits) in closed[v].iter().enumerate() {
                cover[w] |= bits;
            }
        }
        cover == full
    })
}

/// Smallest dominating set, searching sizes 1..=upper_hint ascending. The
/// refutation of every smaller size is what makes the answer exact.
pub fn domination_number_exact(
    g: &Graph,
    upper_hint: usize,
    budget: u64,
) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    for k in 1..=upper_hint {
        if let Some(witness) = has_dominating_set_of_size(g, k, budget)? {
            return Ok((k, witness));
        }
    }
    Err(Error::domain(format!(
        "no dominating set of size <= {upper_hint}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_total_zero_divisor_graph, DEFAULT_VERTEX_BUDGET as B};

    #[test]
    fn star_plus_isolated_needs_three() {
        // Z~(Z_12): the star center plus both isolated vertices
        let g = build_total_zero_divisor_graph(12, B).unwrap();
        let (gamma, witness) = domination_number_exact(&g, 7, 1 << 20).unwrap();
        assert_eq!(gamma, 3);
        let residues: Vec<u64> = witness.iter().map(|&i| g.label(i).coords[0]).collect();
        assert!(residues.contains(&6));
        assert!(residues.contains(&3));
        assert!(residues.contains(&9));
    }

    #[test]
    fn complete_graph_needs_one() {
        let g = build_total_zero_divisor_graph(25, B).unwrap();
        let (gamma, _) = domination_number_exact(&g, 4, 1 << 20).unwrap();
        assert_eq!(gamma, 1);
    }

    #[test]
    fn gamma_36_is_two() {
        let g = build_total_zero_divisor_graph(36, B).unwrap();
        assert!(has_dominating_set_of_size(&g, 1, 1 << 20).unwrap().is_none());
        let (gamma, witness) = domination_number_exact(&g, 5, 1 << 20).unwrap();
        assert_eq!(gamma, 2);
        // witness dominates
        let mut covered = vec![false; g.n()];
        for &v in &witness {
            covered[v] = true;
            for u in g.neighbors(v) {
                covered[u] = true;
            }
        }
        assert!(covered.iter().all(|&c| c));
    }

    #[test]
    fn budget_error_is_distinct() {
        let g = build_total_zero_divisor_graph(360, B).unwrap();
        assert!(matches!(
            has_dominating_set_of_size(&g, 3, 5),
            Err(Error::Resource(_))
        ));
    }
}

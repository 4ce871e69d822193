//! Exact metric dimension by twin-class reduction.
//!
//! The complement of a resolving set can hold at most one vertex from each
//! class of pairwise indistinguishable vertices, and swapping two
//! indistinguishable vertices is a graph automorphism, so only one canonical
//! transversal per class subset needs checking. The search walks complement
//! sizes downward, so the first success is optimal.

use super::traversal::{all_pairs_distances, connectivity, twin_classes};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn resolves(n: usize, dist: &[u32], landmarks: &[usize]) -> bool {
    // distance vectors to the landmarks must be pairwise distinct
    let mut vectors: Vec<Vec<u32>> = (0..n)
        .map(|v| landmarks.iter().map(|&s| dist[s * n + v]).collect())
        .collect();
    vectors.sort_unstable();
    vectors.windows(2).all(|w| w[0] != w[1])
}

/// Exact metric dimension of a connected graph, with a witness resolving set.
pub fn metric_dimension_exact(g: &Graph, budget: u64) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n == 0 || !connectivity(g).is_connected {
        return Err(Error::domain(
            "metric dimension requires a connected, nonempty graph",
        ));
    }
    let classes = twin_classes(g);
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let k = classes.len();
    let dist = all_pairs_distances(g);

    let mut inspected = 0u64;
    // larger complements first => smaller resolving sets first
    for csize in (0..=k).rev() {
        let mut chosen: Vec<usize> = (0..csize).collect();
        loop {
            inspected += 1;
            if inspected > budget {
                return Err(Error::resource(format!(
                    "metric dimension search exceeded {budget} candidates"
                )));
            }
            let mut in_complement = vec![false; n];
            for &ci in &chosen {
                in_complement[reps[ci]] = true;
            }
            let landmarks: Vec<usize> = (0..n).filter(|&v| !in_complement[v]).collect();
            if resolves(n, &dist, &landmarks) {
                return Ok((landmarks.len(), landmarks));
            }
            // next csize-combination of class indices
            let mut i = csize;
            while i > 0 && chosen[i - 1] == k - csize + (i - 1) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            chosen[i - 1] += 1;
            for j in i..csize {
                chosen[j] = chosen[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set always resolves a connected graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        build_total_zero_divisor_graph, build_zero_divisor_graph, DEFAULT_VERTEX_BUDGET as B,
    };

    #[test]
    fn path_has_dimension_one() {
        let g = build_total_zero_divisor_graph(8, B).unwrap();
        let (dim, witness) = metric_dimension_exact(&g, 1 << 20).unwrap();
        assert_eq!(dim, 1);
        assert_eq!(witness.len(), 1);
    }

    #[test]
    fn complete_graph_dimension() {
        // dim(K_n) = n-1
        let g = build_total_zero_divisor_graph(25, B).unwrap();
        let (dim, _) = metric_dimension_exact(&g, 1 << 20).unwrap();
        assert_eq!(dim, 3);
    }

    #[test]
    fn dim_36_is_18() {
        let g = build_total_zero_divisor_graph(36, B).unwrap();
        let (dim, witness) = metric_dimension_exact(&g, 1 << 20).unwrap();
        assert_eq!(dim, 18);
        // the witness resolves
        let n = g.n();
        let dist = all_pairs_distances(&g);
        assert!(resolves(n, &dist, &witness));
    }

    #[test]
    fn zero_divisor_graph_dimension() {
        let g = build_zero_divisor_graph(8, B).unwrap();
        let (dim, _) = metric_dimension_exact(&g, 1 << 20).unwrap();
        assert_eq!(dim, 1);
    }

    #[test]
    fn disconnected_rejected() {
        let g = build_total_zero_divisor_graph(12, B).unwrap();
        assert!(matches!(
            metric_dimension_exact(&g, 1 << 20),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn single_vertex_dimension_zero() {
        let g = build_total_zero_divisor_graph(4, B).unwrap();
        let (dim, witness) = metric_dimension_exact(&g, 1 << 20).unwrap();
        assert_eq!(dim, 0);
        assert!(witness.is_empty());
    }
}

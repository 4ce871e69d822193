//! BFS-based invariants: connectivity, diameter, girth, degrees, Eulerian
//! test, and the indistinguishability (twin) partition.

use super::{DiameterValue, GirthValue};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct Connectivity {
    pub is_connected: bool,
    pub component_count: usize,
    /// Components as sorted vertex lists, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
}

pub fn connectivity(g: &Graph) -> Connectivity {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    Connectivity {
        is_connected: n > 0 && components.len() == 1,
        component_count: components.len(),
        components,
    }
}

/// Single-source BFS distances; usize::MAX marks unreachable.
fn bfs_distances(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[start] = 0;
    let mut frontier = vec![start];
    let mut d = 0usize;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = d;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// All-pairs distances as a flat n*n matrix of u32 (u32::MAX = unreachable).
pub fn all_pairs_distances(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut out = vec![u32::MAX; n * n];
    for s in 0..n {
        for (v, &d) in bfs_distances(g, s).iter().enumerate() {
            if d != usize::MAX {
                out[s * n + v] = d as u32;
            }
        }
    }
    out
}

pub fn diameter(g: &Graph) -> DiameterValue {
    let n = g.n();
    if n < 2 {
        return DiameterValue::Undefined;
    }
    let mut best = 0usize;
    for s in 0..n {
        for &d in &bfs_distances(g, s) {
            if d == usize::MAX {
                return DiameterValue::Infinite;
            }
            best = best.max(d);
        }
    }
    DiameterValue::Finite(best as u32)
}

/// Girth via BFS from every vertex; the shortest cycle seen across all
/// sources is the girth.
pub fn girth(g: &Graph) -> GirthValue {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            // No cycle through s can improve once below this depth.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if v != parent[u] && dist[v] >= dist[u] {
                    best = best.min(dist[u] + dist[v] + 1);
                    if best == 3 {
                        return GirthValue::Finite(3);
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        GirthValue::Acyclic
    } else {
        GirthValue::Finite(best as u32)
    }
}

#[derive(Debug, Clone)]
pub struct DegreeSummary {
    /// Descending.
    pub sequence: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
}

pub fn degrees(g: &Graph) -> DegreeSummary {
    let mut sequence: Vec<usize> = (0..g.n()).map(|i| g.degree(i)).collect();
    let max_degree = sequence.iter().copied().max().unwrap_or(0);
    let min_degree = sequence.iter().copied().min().unwrap_or(0);
    sequence.sort_unstable_by(|a, b| b.cmp(a));
    DegreeSummary {
        sequence,
        max_degree,
        min_degree,
    }
}

/// A graph is Eulerian here iff it has at least one edge, is connected on its
/// whole vertex set, and every degree is even. Isolated vertices therefore
/// rule it out.
pub fn is_eulerian(g: &Graph) -> bool {
    g.edge_count() >= 1
        && connectivity(g).is_connected
        && (0..g.n()).all(|i| g.degree(i) % 2 == 0)
}

fn indistinguishable(g: &Graph, a: usize, b: usize) -> bool {
    // N(a)\{b} == N(b)\{a}: rows may differ only at positions a and b.
    let (ra, rb) = (g.row(a), g.row(b));
    for w in 0..g.words() {
        let mut diff = ra[w] ^ rb[w];
        if a / 64 == w {
            diff &= !(1u64 << (a % 64));
        }
        if b / 64 == w {
            diff &= !(1u64 << (b % 64));
        }
        if diff != 0 {
            return false;
        }
    }
    true
}

/// Partition the vertices into maximal classes of pairwise indistinguishable
/// vertices. The relation is not transitive on arbitrary graphs; on the
/// graphs this crate builds it is, and this function checks every pair inside
/// each class and panics if the partition is inconsistent.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut assigned = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if assigned[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = vec![i];
        assigned[i] = id;
        for j in (i + 1)..n {
            if indistinguishable(g, i, j) {
                assert_eq!(
                    assigned[j],
                    usize::MAX,
                    "twin relation is not transitive: vertex {j} relates to two classes"
                );
                assigned[j] = id;
                class.push(j);
            }
        }
        classes.push(class);
    }
    for class in &classes {
        for (x, &a) in class.iter().enumerate() {
            for &b in &class[x + 1..] {
                assert!(
                    indistinguishable(g, a, b),
                    "twin relation is not transitive within a class ({a}, {b})"
                );
            }
        }
    }
    classes
}

//! Exact vertex coloring by branch and bound between a clique lower bound
//! and a greedy upper bound, and exact edge coloring via the line graph.

use super::clique::max_clique;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::ring::RingElement;

/// Greedy DSATUR coloring; returns (color count, per-vertex colors).
fn dsatur_greedy(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.n();
    let mut colors = vec![u32::MAX; n];
    let mut sat: Vec<std::collections::BTreeSet<u32>> = vec![Default::default(); n];
    let mut used = 0u32;
    for _ in 0..n {
        // highest saturation, then highest degree, then lowest index
        let v = (0..n)
            .filter(|&v| colors[v] == u32::MAX)
            .max_by_key(|&v| (sat[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let mut c = 0u32;
        while sat[v].contains(&c) {
            c += 1;
        }
        colors[v] = c;
        used = used.max(c + 1);
        for u in g.neighbors(v) {
            if colors[u] == u32::MAX {
                sat[u].insert(c);
            }
        }
    }
    (used, colors)
}

struct ColorSearch<'a> {
    g: &'a Graph,
    target: u32,
    colors: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl ColorSearch<'_> {
    fn run(&mut self, colored: usize, max_used: u32) -> Result<bool> {
        let n = self.g.n();
        if colored == n {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!(
                "coloring search exceeded {} nodes",
                self.budget
            )));
        }
        // DSATUR order: most distinctly-colored neighbors first
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if self.colors[v] != u32::MAX {
                continue;
            }
            let mut mask = 0u64;
            debug_assert!(self.target <= 64);
            for u in self.g.neighbors(v) {
                if self.colors[u] != u32::MAX {
                    mask |= 1 << self.colors[u];
                }
            }
            let key = (mask.count_ones() as usize, self.g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        let mut forbidden = 0u64;
        for u in self.g.neighbors(v) {
            if self.colors[u] != u32::MAX {
                forbidden |= 1 << self.colors[u];
            }
        }
        // allow at most one fresh color beyond those already in use
        let limit = self.target.min(max_used + 1);
        for c in 0..limit {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            if self.run(colored + 1, max_used.max(c + 1))? {
                return Ok(true);
            }
            self.colors[v] = u32::MAX;
        }
        Ok(false)
    }
}

fn colorable_with(g: &Graph, target: u32, budget: u64) -> Result<Option<Vec<u32>>> {
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut search = ColorSearch {
        g,
        target,
        colors: vec![u32::MAX; g.n()],
        nodes: 0,
        budget,
    };
    Ok(search.run(0, 0)?.then_some(search.colors))
}

/// Exact chromatic number with a witness coloring.
///
/// The lower bound is an exact maximum clique, the upper bound a DSATUR
/// greedy coloring; a backtracking decision procedure closes the gap.
pub fn chromatic_number_exact(
    g: &Graph,
    vertex_budget: usize,
    node_budget: u64,
) -> Result<(u32, Vec<u32>)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    if n > vertex_budget {
        return Err(Error::resource(format!(
            "exact coloring of {n} vertices exceeds budget {vertex_budget}"
        )));
    }
    if g.edge_count() == 0 {
        return Ok((1, vec![0; n]));
    }
    let omega = max_clique(g, node_budget)?.len() as u32;
    let (ub, greedy) = dsatur_greedy(g);
    if omega == ub {
        return Ok((ub, greedy));
    }
    for target in omega..ub {
        if let Some(colors) = colorable_with(g, target, node_budget)? {
            return Ok((target, colors));
        }
    }
    Ok((ub, greedy))
}

/// The line graph of g: one vertex per edge, adjacency iff the edges share an
/// endpoint. Labels are synthetic (edge index pairs packed into tuples).
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges = g.edges();
    let labels: Vec<RingElement> = edges
        .iter()
        .map(|&(i, j)| RingElement {
            coords: vec![i as u64, j as u64],
        })
        .collect();
    let mut lg = Graph::from_labels(GraphKind::Derived, format!("line_{}", g.name), labels);
    for (a, &(i, j)) in edges.iter().enumerate() {
        for (b, &(k, l)) in edges.iter().enumerate().skip(a + 1) {
            if i == k || i == l || j == k || j == l {
                lg.add_edge(a, b);
            }
        }
    }
    (lg, edges)
}

/// Exact chromatic index via exact vertex coloring of the line graph.
/// Returns the index and a per-edge coloring. Vizing's bound
/// (chi' in {Delta, Delta+1}) is asserted.
pub fn chromatic_index_exact(
    g: &Graph,
    edge_budget: usize,
    node_budget: u64,
) -> Result<(u32, Vec<((usize, usize), u32)>)> {
    let edges = g.edges();
    if edges.len() > edge_budget {
        return Err(Error::resource(format!(
            "exact edge coloring of {} edges exceeds budget {edge_budget}",
            edges.len()
        )));
    }
    if edges.is_empty() {
        return Ok((0, Vec::new()));
    }
    let (lg, edge_list) = line_graph(g);
    let (chi, colors) = chromatic_number_exact(&lg, edge_budget, node_budget)?;
    let delta = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as u32;
    assert!(
        chi == delta || chi == delta + 1,
        "chromatic index {chi} outside Vizing range for max degree {delta}"
    );
    Ok((
        chi,
        edge_list.into_iter().zip(colors).collect(),
    ))
}

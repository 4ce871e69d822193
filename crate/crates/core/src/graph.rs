//! Simple undirected graphs over ring elements: the total zero-divisor graph,
//! the classical zero-divisor graph, and the total graph, with dense bitset
//! adjacency, a stable vertex order, and deterministic DOT/JSON exports.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::ring::{RingElement, RingSpec};
use serde::Serialize;
use std::fmt::Write as _;

/// Default cap on vertex count for dense adjacency construction.
pub const DEFAULT_VERTEX_BUDGET: u64 = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GraphKind {
    /// u ~ v iff uv = 0 and u+v is a zero-divisor; vertices are the nonzero
    /// zero-divisors.
    #[serde(rename = "total-zero-divisor")]
    TotalZeroDivisor,
    /// u ~ v iff uv = 0; vertices are the nonzero zero-divisors.
    #[serde(rename = "zero-divisor")]
    ZeroDivisor,
    /// x ~ y iff x+y is a zero-divisor; vertices are all ring elements.
    #[serde(rename = "total")]
    Total,
    /// A graph derived from another (line graph, synthetic test graph).
    #[serde(rename = "derived")]
    Derived,
}

impl GraphKind {
    pub fn short_tag(self) -> &'static str {
        match self {
            GraphKind::TotalZeroDivisor => "tzdg",
            GraphKind::ZeroDivisor => "zdg",
            GraphKind::Total => "total",
            GraphKind::Derived => "derived",
        }
    }
}

/// Dense simple undirected graph. Vertices are ring elements in ascending
/// canonical order; adjacency is a symmetric, irreflexive bit matrix.
#[derive(Debug, Clone)]
pub struct Graph {
    pub kind: GraphKind,
    pub name: String,
    labels: Vec<RingElement>,
    words: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph over the given labels, which must already be in
    /// ascending canonical order.
    pub fn from_labels(kind: GraphKind, name: String, labels: Vec<RingElement>) -> Graph {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let n = labels.len();
        let words = n.div_ceil(64);
        Graph {
            kind,
            name,
            labels,
            words,
            adj: vec![0u64; n * words],
            edge_count: 0,
        }
    }

    fn with_labels(kind: GraphKind, name: String, labels: Vec<RingElement>) -> Graph {
        Graph::from_labels(kind, name, labels)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn label(&self, i: usize) -> &RingElement {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[RingElement] {
        &self.labels
    }

    /// Vertex index of a label, if present (labels are sorted).
    pub fn index_of(&self, label: &RingElement) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn index_of_residue(&self, r: u64) -> Option<usize> {
        self.index_of(&RingElement { coords: vec![r] })
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j);
        if !self.has_edge(i, j) {
            self.adj[i * self.words + j / 64] |= 1 << (j % 64);
            self.adj[j * self.words + i / 64] |= 1 << (i % 64);
            self.edge_count += 1;
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(i);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Edges as (i, j) with i < j, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for i in 0..self.n() {
            for j in self.neighbors(i) {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * (n.saturating_sub(1)) / 2
    }

    pub fn is_regular(&self) -> bool {
        let n = self.n();
        n == 0 || (0..n).all(|i| self.degree(i) == self.degree(0))
    }

    /// Induced subgraph on the given vertex indices; vertex order preserved.
    pub fn subgraph_induced(&self, vs: &[usize]) -> Result<Graph> {
        let mut keep = vec![false; self.n()];
        for &v in vs {
            if v >= self.n() {
                return Err(Error::domain(format!("unknown vertex index {v}")));
            }
            keep[v] = true;
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&i| keep[i]).collect();
        let labels: Vec<RingElement> = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let mut g = Graph::with_labels(self.kind, format!("{}_sub", self.name), labels);
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// The graph with the given vertices removed.
    pub fn remove_vertices(&self, vs: &[usize]) -> Result<Graph> {
        let mut drop = vec![false; self.n()];
        for &v in vs {
            if v >= self.n() {
                return Err(Error::domain(format!("unknown vertex index {v}")));
            }
            drop[v] = true;
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&i| !drop[i]).collect();
        self.subgraph_induced(&kept)
    }

    /// DOT text: one `"a" -- "b";` line per edge (a < b in vertex order),
    /// then one `"a";` line per isolated vertex. Byte-deterministic.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", self.name);
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.labels[i], self.labels[j]);
        }
        for i in 0..self.n() {
            if self.degree(i) == 0 {
                let _ = writeln!(out, "  \"{}\";", self.labels[i]);
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON text: {kind, vertex_labels, edges:[[i,j],...]} with i < j.
    /// Byte-deterministic.
    pub fn export_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonGraph<'a> {
            kind: GraphKind,
            vertex_labels: Vec<String>,
            edges: &'a [(usize, usize)],
        }
        let doc = JsonGraph {
            kind: self.kind,
            vertex_labels: self.labels.iter().map(|l| l.to_string()).collect(),
            edges: &self.edges(),
        };
        let mut text = serde_json::to_string(&doc).expect("graph serializes");
        text.push('\n');
        text
    }
}

fn residue_labels(values: impl Iterator<Item = u64>) -> Vec<RingElement> {
    values.map(|v| RingElement { coords: vec![v] }).collect()
}

/// Z~(Z_m): vertices are the nonzero zero-divisors of Z_m, u ~ v iff
/// uv = 0 (mod m) and u+v is a zero-divisor (0 included).
pub fn build_total_zero_divisor_graph(m: u64, budget: u64) -> Result<Graph> {
    build_modulus_graph(m, GraphKind::TotalZeroDivisor, budget)
}

/// The classical zero-divisor graph: u ~ v iff uv = 0 (mod m).
pub fn build_zero_divisor_graph(m: u64, budget: u64) -> Result<Graph> {
    build_modulus_graph(m, GraphKind::ZeroDivisor, budget)
}

fn build_modulus_graph(m: u64, kind: GraphKind, budget: u64) -> Result<Graph> {
    if m < 2 {
        return Err(Error::domain(format!("modulus {m} < 2")));
    }
    let vertices: Vec<u64> = (1..m).filter(|&x| gcd(x, m) > 1).collect();
    if vertices.len() as u64 > budget {
        return Err(Error::resource(format!(
            "graph on {} vertices exceeds budget {budget}",
            vertices.len()
        )));
    }
    let name = format!("{}_{}", kind.short_tag(), m);
    let mut g = Graph::with_labels(kind, name, residue_labels(vertices.iter().copied()));
    // position of each residue in the vertex list
    let mut pos = vec![usize::MAX; m as usize];
    for (i, &v) in vertices.iter().enumerate() {
        pos[v as usize] = i;
    }
    for (i, &u) in vertices.iter().enumerate() {
        // uv = 0 (mod m) iff v is a multiple of m/gcd(u,m)
        let w = m / gcd(u, m);
        let mut v = w;
        while v < m {
            if v > u {
                let ok = match kind {
                    GraphKind::ZeroDivisor => true,
                    _ => {
                        let s = (u + v) % m;
                        s == 0 || gcd(s, m) > 1
                    }
                };
                if ok {
                    g.add_edge(i, pos[v as usize]);
                }
            }
            v += w;
        }
    }
    Ok(g)
}

/// The total graph: vertices all of Z_m, x ~ y iff x+y is a zero-divisor.
pub fn build_total_graph(m: u64, budget: u64) -> Result<Graph> {
    if m < 2 {
        return Err(Error::domain(format!("modulus {m} < 2")));
    }
    if m > budget {
        return Err(Error::resource(format!(
            "total graph on {m} vertices exceeds budget {budget}"
        )));
    }
    let zset: Vec<u64> = (0..m).filter(|&s| s == 0 || gcd(s, m) > 1).collect();
    let name = format!("total_{m}");
    let mut g = Graph::with_labels(GraphKind::Total, name, residue_labels(0..m));
    for x in 0..m {
        for &s in &zset {
            let y = (s + m - x % m) % m;
            if y > x {
                g.add_edge(x as usize, y as usize);
            }
        }
    }
    Ok(g)
}

/// Graph builders over an arbitrary product ring. For a single factor [m]
/// these agree with the modulus builders.
pub fn build_total_zero_divisor_graph_ring(spec: &RingSpec, budget: u64) -> Result<Graph> {
    build_ring_graph(spec, GraphKind::TotalZeroDivisor, budget)
}

pub fn build_zero_divisor_graph_ring(spec: &RingSpec, budget: u64) -> Result<Graph> {
    build_ring_graph(spec, GraphKind::ZeroDivisor, budget)
}

pub fn build_total_graph_ring(spec: &RingSpec, budget: u64) -> Result<Graph> {
    let order = spec.check_budget(budget)?;
    let labels: Vec<RingElement> = (0..order).map(|i| spec.decode(i)).collect();
    let name = format!("total_{spec}");
    let mut g = Graph::with_labels(GraphKind::Total, name, labels);
    for a in 0..order {
        for b in (a + 1)..order {
            let s = spec.add_idx(a, b);
            if !spec.is_unit(&spec.decode(s)) {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

fn build_ring_graph(spec: &RingSpec, kind: GraphKind, budget: u64) -> Result<Graph> {
    spec.check_budget(budget)?;
    let verts: Vec<usize> = spec
        .zero_divisor_indices(budget)?
        .into_iter()
        .filter(|&i| i != 0)
        .collect();
    let labels: Vec<RingElement> = verts.iter().map(|&i| spec.decode(i)).collect();
    let name = format!("{}_{spec}", kind.short_tag());
    let mut g = Graph::with_labels(kind, name, labels);
    for (a, &x) in verts.iter().enumerate() {
        for (b, &y) in verts.iter().enumerate().skip(a + 1) {
            if spec.mul_idx(x, y) != 0 {
                continue;
            }
            let ok = match kind {
                GraphKind::ZeroDivisor => true,
                _ => {
                    let s = spec.add_idx(x, y);
                    s == 0 || !spec.is_unit(&spec.decode(s))
                }
            };
            if ok {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = DEFAULT_VERTEX_BUDGET;

    fn residue_of(g: &Graph, i: usize) -> u64 {
        g.label(i).coords[0]
    }

    fn edge_residues(g: &Graph) -> Vec<(u64, u64)> {
        g.edges()
            .into_iter()
            .map(|(i, j)| (residue_of(g, i), residue_of(g, j)))
            .collect()
    }

    #[test]
    fn tzdg_9_is_k2() {
        let g = build_total_zero_divisor_graph(9, B).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(edge_residues(&g), vec![(3, 6)]);
    }

    #[test]
    fn tzdg_8_is_path() {
        let g = build_total_zero_divisor_graph(8, B).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(edge_residues(&g), vec![(2, 4), (4, 6)]);
    }

    #[test]
    fn tzdg_12_is_star_plus_isolated() {
        let g = build_total_zero_divisor_graph(12, B).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(
            edge_residues(&g),
            vec![(2, 6), (4, 6), (6, 8), (6, 10)],
        );
        let deg3 = g.degree(g.index_of_residue(3).unwrap());
        let deg9 = g.degree(g.index_of_residue(9).unwrap());
        assert_eq!((deg3, deg9), (0, 0));
    }

    #[test]
    fn tzdg_12_has_five_edges_in_dot() {
        // Spec example counts the star's edges; the star center 6 has degree
        // 4 and the two multiples of 3 are isolated.
        let g = build_total_zero_divisor_graph(12, B).unwrap();
        let dot = g.export_dot();
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert_eq!(dot.matches(";\n").count(), 4 + 2);
        assert!(dot.contains("\"3\";"));
        assert!(dot.contains("\"9\";"));
    }

    #[test]
    fn zdg_6_is_path() {
        let g = build_zero_divisor_graph(6, B).unwrap();
        assert_eq!(edge_residues(&g), vec![(2, 3), (3, 4)]);
        let tz = build_total_zero_divisor_graph(6, B).unwrap();
        assert_eq!(tz.edge_count(), 0);
        assert_eq!(tz.n(), 3);
    }

    #[test]
    fn zdg_prime_is_empty() {
        let g = build_zero_divisor_graph(7, B).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn zdg_9_is_k2() {
        let g = build_zero_divisor_graph(9, B).unwrap();
        assert_eq!(edge_residues(&g), vec![(3, 6)]);
    }

    #[test]
    fn total_graph_4() {
        let g = build_total_graph(4, B).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(edge_residues(&g), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn total_graph_3() {
        let g = build_total_graph(3, B).unwrap();
        assert_eq!(edge_residues(&g), vec![(1, 2)]);
    }

    #[test]
    fn tzdg_edges_subset_of_zdg_and_total() {
        for m in [6u64, 8, 9, 12, 16, 24, 30, 36] {
            let tz = build_total_zero_divisor_graph(m, B).unwrap();
            let z = build_zero_divisor_graph(m, B).unwrap();
            let t = build_total_graph(m, B).unwrap();
            for (i, j) in tz.edges() {
                let (u, v) = (residue_of(&tz, i), residue_of(&tz, j));
                let (zi, zj) = (z.index_of_residue(u).unwrap(), z.index_of_residue(v).unwrap());
                assert!(z.has_edge(zi, zj), "m={m}: {u}-{v} missing in zdg");
                assert!(t.has_edge(u as usize, v as usize), "m={m}: {u}-{v} missing in total");
            }
        }
    }

    #[test]
    fn ring_builder_agrees_with_modulus_builder() {
        for m in [6u64, 8, 12, 25, 36] {
            let a = build_total_zero_divisor_graph(m, B).unwrap();
            let spec = RingSpec::new(vec![m]).unwrap();
            let b = build_total_zero_divisor_graph_ring(&spec, B).unwrap();
            assert_eq!(a.n(), b.n());
            assert_eq!(a.edges(), b.edges(), "m={m}");
        }
    }

    #[test]
    fn subgraph_and_removal() {
        let g = build_total_zero_divisor_graph(12, B).unwrap();
        let all: Vec<usize> = (0..g.n()).collect();
        let full = g.subgraph_induced(&all).unwrap();
        assert_eq!(full.edges(), g.edges());
        let none = g.remove_vertices(&all).unwrap();
        assert_eq!(none.n(), 0);
        // deleting the star center isolates everything
        let center = g.index_of_residue(6).unwrap();
        let peeled = g.remove_vertices(&[center]).unwrap();
        assert_eq!(peeled.n(), 6);
        assert_eq!(peeled.edge_count(), 0);
        assert!(g.subgraph_induced(&[999]).is_err());
    }

    #[test]
    fn exports_are_deterministic() {
        let a = build_total_zero_divisor_graph(36, B).unwrap();
        let b = build_total_zero_divisor_graph(36, B).unwrap();
        assert_eq!(a.export_dot(), b.export_dot());
        assert_eq!(a.export_json(), b.export_json());
    }

    #[test]
    fn export_shapes() {
        let k2 = build_total_zero_divisor_graph(9, B).unwrap();
        assert_eq!(k2.export_dot(), "graph \"tzdg_9\" {\n  \"3\" -- \"6\";\n}\n");
        let empty = build_total_zero_divisor_graph(5, B).unwrap();
        assert_eq!(empty.export_dot(), "graph \"tzdg_5\" {\n}\n");
        let json = k2.export_json();
        assert!(json.contains("\"kind\":\"total-zero-divisor\""));
        assert!(json.contains("\"edges\":[[0,1]]"));
    }

    #[test]
    fn tuple_labels_in_exports() {
        let spec = RingSpec::new(vec![2, 2]).unwrap();
        let g = build_total_zero_divisor_graph_ring(&spec, B).unwrap();
        let dot = g.export_dot();
        assert!(dot.contains("\"0|1\""), "{dot}");
    }
}

//! Proper edge coloring with exactly max-degree many colors for connected
//! non-complete total zero-divisor graphs over Z_m.
//!
//! Edges incident to the maximum-degree class (the associates of m/p_1) are
//! colored first, then everything else greedily; when both endpoints of an
//! edge have disjoint free colors, an alternating-path recoloring frees a
//! shared one. Since the chromatic index is at least the maximum degree,
//! a verified coloring alone proves it exact.

use super::Certificate;
use crate::arith::FactoredModulus;
use crate::error::{Error, Result};
use crate::graph::Graph;

const NO_EDGE: u32 = u32::MAX;

struct EdgeColorer<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    color_of: Vec<u32>,
    /// at[v * palette + c] = edge index carrying color c at v, or NO_EDGE
    at: Vec<u32>,
    palette: usize,
}

impl EdgeColorer<'_> {
    fn slot(&self, v: usize, c: usize) -> u32 {
        self.at[v * self.palette + c]
    }

    fn assign(&mut self, e: usize, c: usize) {
        let (u, v) = self.edges[e];
        debug_assert_eq!(self.slot(u, c), NO_EDGE);
        debug_assert_eq!(self.slot(v, c), NO_EDGE);
        self.color_of[e] = c as u32;
        self.at[u * self.palette + c] = e as u32;
        self.at[v * self.palette + c] = e as u32;
    }

    fn lowest_common_free(&self, u: usize, v: usize) -> Option<usize> {
        (0..self.palette).find(|&c| self.slot(u, c) == NO_EDGE && self.slot(v, c) == NO_EDGE)
    }

    /// Maximal alternating path from `start` on colors (a, b), beginning
    /// with a. Returns the edge list and the final vertex.
    fn chain(&self, start: usize, a: usize, b: usize) -> (Vec<usize>, usize) {
        let mut edges = Vec::new();
        let mut cur = start;
        let mut want = a;
        loop {
            let e = self.slot(cur, want);
            if e == NO_EDGE {
                return (edges, cur);
            }
            let e = e as usize;
            edges.push(e);
            let (x, y) = self.edges[e];
            cur = if x == cur { y } else { x };
            want = if want == a { b } else { a };
        }
    }

    /// Swap colors a and b along a chain (two phases so shared endpoints
    /// never clobber each other).
    fn flip(&mut self, chain: &[usize], a: usize, b: usize) {
        for &e in chain {
            let (x, y) = self.edges[e];
            let c = self.color_of[e] as usize;
            self.at[x * self.palette + c] = NO_EDGE;
            self.at[y * self.palette + c] = NO_EDGE;
        }
        for &e in chain {
            let (x, y) = self.edges[e];
            let c = self.color_of[e] as usize;
            let swapped = if c == a { b } else { a };
            self.color_of[e] = swapped as u32;
            self.at[x * self.palette + swapped] = e as u32;
            self.at[y * self.palette + swapped] = e as u32;
        }
    }

    fn color_edge(&mut self, e: usize) -> Result<()> {
        let (u, v) = self.edges[e];
        if let Some(c) = self.lowest_common_free(u, v) {
            self.assign(e, c);
            return Ok(());
        }
        let free_u: Vec<usize> = (0..self.palette)
            .filter(|&c| self.slot(u, c) == NO_EDGE)
            .collect();
        let free_v: Vec<usize> = (0..self.palette)
            .filter(|&c| self.slot(v, c) == NO_EDGE)
            .collect();
        for &a in &free_u {
            for &b in &free_v {
                // walk the (a, b)-alternating path from v; if it avoids u,
                // swapping frees color a at v
                let (chain, end) = self.chain(v, a, b);
                if end == u {
                    continue;
                }
                self.flip(&chain, a, b);
                debug_assert_eq!(self.slot(v, a), NO_EDGE);
                debug_assert_eq!(self.slot(u, a), NO_EDGE);
                self.assign(e, a);
                return Ok(());
            }
        }
        let (lu, lv) = (self.g.label(u), self.g.label(v));
        Err(Error::domain(format!(
            "edge coloring stuck at {lu}-{lv} with {} colors",
            self.palette
        )))
    }
}

/// Build a proper edge coloring of Z~(Z_m) with exactly m/p_1 - 2 colors.
/// `g` must be the total zero-divisor graph of the same modulus.
pub fn construct_edge_coloring(fm: &FactoredModulus, g: &Graph) -> Result<Certificate> {
    if !crate::formulas::predict_connected(fm)? {
        return Err(Error::domain(format!(
            "edge coloring construction requires a connected graph (m={})",
            fm.m
        )));
    }
    if fm.is_prime_square() {
        return Err(Error::domain(format!(
            "edge coloring formula excludes the complete case (m={})",
            fm.m
        )));
    }
    let m = fm.m;
    let p1 = fm.primes[0];
    let hub = m / p1;
    let palette = (hub - 2) as usize;
    let edges = g.edges();
    debug_assert_eq!(
        (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0),
        palette,
        "max degree disagrees with the palette for m={m}"
    );

    // hub-class edges first (associates s * m/p_1 in ascending s), the rest
    // in lexicographic order
    let mut order: Vec<usize> = Vec::with_capacity(edges.len());
    let mut scheduled = vec![false; edges.len()];
    let mut edges_at = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        edges_at[u].push(e);
        edges_at[v].push(e);
    }
    for s in 1..p1 {
        let hub_vertex = g
            .index_of_residue(s * hub)
            .ok_or_else(|| Error::domain(format!("{} is not a vertex of {}", s * hub, g.name)))?;
        for &e in &edges_at[hub_vertex] {
            if !scheduled[e] {
                scheduled[e] = true;
                order.push(e);
            }
        }
    }
    for e in 0..edges.len() {
        if !scheduled[e] {
            order.push(e);
        }
    }

    let mut colorer = EdgeColorer {
        g,
        color_of: vec![NO_EDGE; edges.len()],
        at: vec![NO_EDGE; g.n() * palette],
        palette,
        edges,
    };
    for e in order {
        colorer.color_edge(e)?;
    }

    let colored: Vec<(u64, u64, u32)> = colorer
        .edges
        .iter()
        .zip(&colorer.color_of)
        .map(|(&(i, j), &c)| (g.label(i).coords[0], g.label(j).coords[0], c))
        .collect();
    Ok(Certificate::EdgeColoring {
        m,
        edges: colored,
        color_count: palette as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factor;
    use crate::certify::verify_certificate;
    use crate::graph::{build_total_zero_divisor_graph, DEFAULT_VERTEX_BUDGET as B};

    #[test]
    fn small_cases_reach_max_degree() {
        for (m, want) in [(8u64, 2u64), (16, 6), (27, 7), (36, 16)] {
            let fm = factor(m).unwrap();
            let g = build_total_zero_divisor_graph(m, B).unwrap();
            let cert = construct_edge_coloring(&fm, &g).unwrap();
            assert_eq!(cert.size(), want, "m={m}");
            let v = verify_certificate(&g, &cert).unwrap();
            assert!(v.pass, "m={m}: {:?}", v.detail);
        }
    }

    #[test]
    fn scope_errors() {
        let g25 = build_total_zero_divisor_graph(25, B).unwrap();
        assert!(construct_edge_coloring(&factor(25).unwrap(), &g25).is_err());
        let g12 = build_total_zero_divisor_graph(12, B).unwrap();
        assert!(construct_edge_coloring(&factor(12).unwrap(), &g12).is_err());
    }

    #[test]
    fn every_connected_non_complete_m_to_500() {
        for m in 4..=500u64 {
            let fm = factor(m).unwrap();
            if fm.is_prime() || fm.is_prime_square() || !fm.all_exponents_at_least_two() {
                continue;
            }
            let g = build_total_zero_divisor_graph(m, B).unwrap();
            let cert = construct_edge_coloring(&fm, &g).unwrap();
            assert_eq!(cert.size(), m / fm.primes[0] - 2, "m={m}");
            let v = verify_certificate(&g, &cert).unwrap();
            assert!(v.pass, "m={m}: {:?}", v.detail);
        }
    }
}

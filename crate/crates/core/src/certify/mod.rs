//! Constructive certificates for the invariant formulas over Z_m, plus the
//! verifiers that check them against a built graph. Verification never
//! consults the formulas module, so a certificate plus its matching lower
//! bound is independent evidence that a formula value is exact.

mod edge_coloring;

pub use edge_coloring::construct_edge_coloring;

use crate::arith::{arith_profile, gcd, valuation, FactoredModulus};
use crate::error::{Error, Result};
use crate::exact::all_pairs_distances;
use crate::graph::Graph;
use serde::Serialize;

/// A verifiable witness object. Vertices are named by residue.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Pairwise adjacent vertices.
    Clique { m: u64, vertices: Vec<u64> },
    /// A proper coloring of every vertex.
    Coloring {
        m: u64,
        colors: Vec<(u64, u32)>,
        color_count: u32,
    },
    /// A proper edge coloring of every edge.
    EdgeColoring {
        m: u64,
        edges: Vec<(u64, u64, u32)>,
        color_count: u32,
    },
    /// Closed neighborhoods cover the vertex set.
    DominatingSet { m: u64, vertices: Vec<u64> },
    /// Distance vectors to these vertices separate all vertices.
    ResolvingSet { m: u64, vertices: Vec<u64> },
    /// Removing `separator` strands more components than its size; the
    /// `stranded` vertices have no neighbors outside the separator.
    HamObstruction {
        m: u64,
        separator: Vec<u64>,
        stranded: Vec<u64>,
    },
    /// a = divisor * unit (mod m): the canonical divisor of a's
    /// associatedness class.
    DivisorNormalForm {
        m: u64,
        element: u64,
        divisor: u64,
        unit: u64,
    },
}

impl Certificate {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Certificate::Clique { .. } => "clique",
            Certificate::Coloring { .. } => "coloring",
            Certificate::EdgeColoring { .. } => "edge_coloring",
            Certificate::DominatingSet { .. } => "dominating_set",
            Certificate::ResolvingSet { .. } => "resolving_set",
            Certificate::HamObstruction { .. } => "ham_obstruction",
            Certificate::DivisorNormalForm { .. } => "divisor_normal_form",
        }
    }

    /// Size summary: clique size, color count, set size, separator size.
    pub fn size(&self) -> u64 {
        match self {
            Certificate::Clique { vertices, .. }
            | Certificate::DominatingSet { vertices, .. }
            | Certificate::ResolvingSet { vertices, .. } => vertices.len() as u64,
            Certificate::Coloring { color_count, .. }
            | Certificate::EdgeColoring { color_count, .. } => u64::from(*color_count),
            Certificate::HamObstruction { separator, .. } => separator.len() as u64,
            Certificate::DivisorNormalForm { .. } => 1,
        }
    }
}

/// Outcome of checking a certificate against a graph.
#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verification {
    fn pass() -> Self {
        Verification {
            pass: true,
            detail: None,
        }
    }

    fn fail(detail: String) -> Self {
        Verification {
            pass: false,
            detail: Some(detail),
        }
    }
}

/// Write a in [1, m) as (divisor of m) * (unit mod m), the divisor being the
/// canonical representative of a's associatedness class.
pub fn associated_divisor(fm: &FactoredModulus, a: u64) -> Result<(u64, u64)> {
    let m = fm.m;
    if a == 0 || a >= m {
        return Err(Error::domain(format!(
            "associated divisor needs 1 <= a < m, got a={a}, m={m}"
        )));
    }
    // cap each valuation at the modulus exponent
    let divisor: u64 = fm
        .primes
        .iter()
        .zip(&fm.exponents)
        .map(|(&p, &e)| p.pow(valuation(a, p).min(e)))
        .product();
    if a == divisor {
        return Ok((a, 1));
    }
    // unit from the constructive normal form: over-full primes contribute
    // p^(l-e) * s_a, the rest subtract p^(e-l+1)
    let mut over = 1i128;
    let mut under = 1i128;
    let mut s_a = a;
    for (&p, &e) in fm.primes.iter().zip(&fm.exponents) {
        let l = valuation(a, p);
        for _ in 0..l {
            s_a /= p;
        }
        if l > e {
            over *= i128::from(p).pow(l - e);
        } else {
            under *= i128::from(p).pow(e - l + 1);
        }
    }
    let unit = (over * i128::from(s_a) - under).rem_euclid(i128::from(m)) as u64;
    debug_assert_eq!(gcd(unit, m), 1);
    debug_assert_eq!((u128::from(divisor) * u128::from(unit)) % u128::from(m), u128::from(a));
    Ok((divisor, unit))
}

fn require_half_exponent_scope(fm: &FactoredModulus) -> Result<(u64, u64)> {
    let core = fm.half_exponent_core();
    let cofactor = fm.half_exponent_cofactor();
    if cofactor < 2 {
        return Err(Error::domain(format!(
            "m={} is squarefree: the half-exponent construction degenerates",
            fm.m
        )));
    }
    Ok((core, cofactor))
}

/// The clique of all nonzero multiples of prod p_i^(ceil(e_i/2)); its size
/// is prod p_i^(floor(e_i/2)) - 1.
pub fn half_exponent_clique(fm: &FactoredModulus) -> Result<Certificate> {
    let (core, cofactor) = require_half_exponent_scope(fm)?;
    Ok(Certificate::Clique {
        m: fm.m,
        vertices: (1..cofactor).map(|r| r * core).collect(),
    })
}

/// The half-exponent clique extended by one vertex core/p_k per odd
/// exponent; its size matches the chromatic number formula, so together
/// with the matching coloring it pins the chromatic number exactly.
pub fn chromatic_clique(fm: &FactoredModulus) -> Result<Certificate> {
    let (core, cofactor) = require_half_exponent_scope(fm)?;
    let mut vertices: Vec<u64> = (1..cofactor).map(|r| r * core).collect();
    for (&p, &e) in fm.primes.iter().zip(&fm.exponents) {
        if e % 2 == 1 {
            vertices.push(core / p);
        }
    }
    Ok(Certificate::Clique { m: fm.m, vertices })
}

/// Proper coloring realizing the chromatic number formula.
///
/// The multiples of the half-exponent core get one color each; for every
/// odd exponent, the vertices whose valuation at that prime falls below
/// ceil(e/2) share one fresh color; every remaining vertex inherits the
/// color of a non-neighbor among the core multiples (the smallest
/// qualifying donor).
pub fn construct_coloring(fm: &FactoredModulus) -> Result<Certificate> {
    let (core, cofactor) = require_half_exponent_scope(fm)?;
    let m = fm.m;
    let odd_indices: Vec<usize> = (0..fm.n()).filter(|&i| fm.exponents[i] % 2 == 1).collect();
    let base_colors = (cofactor - 1) as u32;

    let mut colors: Vec<(u64, u32)> = Vec::new();
    'vertex: for x in 1..m {
        if gcd(x, m) == 1 {
            continue;
        }
        if x % core == 0 {
            colors.push((x, (x / core - 1) as u32));
            continue;
        }
        for (j, &k) in odd_indices.iter().enumerate() {
            let ceil_half = fm.exponents[k].div_ceil(2);
            if fm.valuation(k, x) < ceil_half {
                colors.push((x, base_colors + j as u32));
                continue 'vertex;
            }
        }
        // leftover: valuation at every odd-exponent prime is at least the
        // ceiling half, so some even exponent must fall short of e/2
        let donor = fm
            .primes
            .iter()
            .zip(&fm.exponents)
            .filter(|&(&p, &e)| e % 2 == 0 && valuation(x, p) < e / 2)
            .map(|(&p, &e)| (m / p.pow(e)) * p.pow(e / 2))
            .min()
            .ok_or_else(|| {
                Error::domain(format!("vertex {x} of m={m} escaped the color classes"))
            })?;
        debug_assert_eq!(donor % core, 0);
        colors.push((x, (donor / core - 1) as u32));
    }
    Ok(Certificate::Coloring {
        m,
        color_count: base_colors + odd_indices.len() as u32,
        colors,
    })
}

/// The dominating set { m/p_i }.
pub fn canonical_dominating_set(fm: &FactoredModulus) -> Result<Certificate> {
    if !crate::formulas::predict_connected(fm)? {
        return Err(Error::domain(format!(
            "canonical dominating set requires a connected graph (m={})",
            fm.m
        )));
    }
    Ok(Certificate::DominatingSet {
        m: fm.m,
        vertices: fm.primes.iter().map(|&p| fm.m / p).collect(),
    })
}

/// The resolving set whose complement keeps one vertex per
/// indistinguishability class: all proper divisors of m except the full
/// prime powers p_i^{e_i} (which are twins of p_i^{e_i - 1} when n >= 2).
pub fn construct_resolving_set(fm: &FactoredModulus) -> Result<Certificate> {
    if !crate::formulas::predict_connected(fm)? {
        return Err(Error::domain(format!(
            "resolving set construction requires a connected graph (m={})",
            fm.m
        )));
    }
    let m = fm.m;
    let prof = arith_profile(fm);
    let mut keep_out = vec![false; m as usize];
    for &d in &prof.divisors {
        if d > 1 && d < m {
            keep_out[d as usize] = true;
        }
    }
    if fm.n() >= 2 {
        for (&p, &e) in fm.primes.iter().zip(&fm.exponents) {
            keep_out[p.pow(e) as usize] = false;
        }
    }
    let vertices: Vec<u64> = (1..m)
        .filter(|&x| gcd(x, m) > 1 && !keep_out[x as usize])
        .collect();
    Ok(Certificate::ResolvingSet { m, vertices })
}

/// The Hamiltonicity refutation: removing the associates of m/p_1 strands
/// every vertex p_1 * s with s a unit, and there are more of those than
/// removed vertices.
pub fn hamiltonian_obstruction(fm: &FactoredModulus) -> Result<Certificate> {
    if !crate::formulas::predict_connected(fm)? {
        return Err(Error::domain(format!(
            "Hamiltonicity obstruction requires a connected graph (m={})",
            fm.m
        )));
    }
    if fm.is_prime_square() {
        return Err(Error::domain(format!(
            "m={} yields a complete graph; no obstruction exists",
            fm.m
        )));
    }
    let m = fm.m;
    let p1 = fm.primes[0];
    let c1 = m / p1;
    Ok(Certificate::HamObstruction {
        m,
        separator: (1..p1).map(|r| r * c1).collect(),
        stranded: (1..c1).filter(|&s| gcd(s, m) == 1).map(|s| p1 * s).collect(),
    })
}

fn vertex_index(g: &Graph, residue: u64) -> Result<usize> {
    g.index_of_residue(residue)
        .ok_or_else(|| Error::domain(format!("residue {residue} is not a vertex of {}", g.name)))
}

/// Check a certificate against a graph. Returns the verification outcome;
/// a malformed certificate (unknown vertices, wrong graph kind) is a domain
/// error rather than a failed verification.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<Verification> {
    match cert {
        Certificate::Clique { vertices, .. } => {
            let idx: Vec<usize> = vertices
                .iter()
                .map(|&v| vertex_index(g, v))
                .collect::<Result<_>>()?;
            for (a, &i) in idx.iter().enumerate() {
                for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                    if i == j {
                        return Ok(Verification::fail(format!(
                            "repeated vertex {}",
                            vertices[a]
                        )));
                    }
                    if !g.has_edge(i, j) {
                        return Ok(Verification::fail(format!(
                            "vertices {} and {} are not adjacent",
                            vertices[a], vertices[b]
                        )));
                    }
                }
            }
            Ok(Verification::pass())
        }
        Certificate::Coloring {
            colors,
            color_count,
            ..
        } => {
            let mut assigned: Vec<Option<u32>> = vec![None; g.n()];
            for &(v, c) in colors {
                let i = vertex_index(g, v)?;
                if assigned[i].replace(c).is_some() {
                    return Ok(Verification::fail(format!("vertex {v} colored twice")));
                }
            }
            if let Some(i) = assigned.iter().position(|c| c.is_none()) {
                return Ok(Verification::fail(format!(
                    "vertex {} is uncolored",
                    g.label(i)
                )));
            }
            for (i, j) in g.edges() {
                if assigned[i] == assigned[j] {
                    return Ok(Verification::fail(format!(
                        "adjacent vertices {} and {} share color {}",
                        g.label(i),
                        g.label(j),
                        assigned[i].unwrap()
                    )));
                }
            }
            let distinct: std::collections::BTreeSet<u32> =
                assigned.iter().map(|c| c.unwrap()).collect();
            if distinct.len() as u32 != *color_count {
                return Ok(Verification::fail(format!(
                    "claimed {color_count} colors, used {}",
                    distinct.len()
                )));
            }
            Ok(Verification::pass())
        }
        Certificate::EdgeColoring {
            edges,
            color_count,
            ..
        } => {
            let mut seen = std::collections::BTreeSet::new();
            let mut at_vertex: Vec<std::collections::BTreeSet<u32>> = vec![Default::default(); g.n()];
            for &(u, v, c) in edges {
                let (i, j) = (vertex_index(g, u)?, vertex_index(g, v)?);
                if !g.has_edge(i, j) {
                    return Ok(Verification::fail(format!("{u}-{v} is not an edge")));
                }
                if !seen.insert((i.min(j), i.max(j))) {
                    return Ok(Verification::fail(format!("edge {u}-{v} colored twice")));
                }
                for end in [i, j] {
                    if !at_vertex[end].insert(c) {
                        return Ok(Verification::fail(format!(
                            "color {c} repeats at vertex {}",
                            g.label(end)
                        )));
                    }
                }
            }
            if seen.len() != g.edge_count() {
                return Ok(Verification::fail(format!(
                    "{} of {} edges colored",
                    seen.len(),
                    g.edge_count()
                )));
            }
            let distinct: std::collections::BTreeSet<u32> =
                edges.iter().map(|&(_, _, c)| c).collect();
            if distinct.len() as u32 != *color_count {
                return Ok(Verification::fail(format!(
                    "claimed {color_count} colors, used {}",
                    distinct.len()
                )));
            }
            Ok(Verification::pass())
        }
        Certificate::DominatingSet { vertices, .. } => {
            let mut covered = vec![false; g.n()];
            for &v in vertices {
                let i = vertex_index(g, v)?;
                covered[i] = true;
                for u in g.neighbors(i) {
                    covered[u] = true;
                }
            }
            match covered.iter().position(|&c| !c) {
                Some(i) => Ok(Verification::fail(format!(
                    "vertex {} is not dominated",
                    g.label(i)
                ))),
                None => Ok(Verification::pass()),
            }
        }
        Certificate::ResolvingSet { vertices, .. } => {
            let landmarks: Vec<usize> = vertices
                .iter()
                .map(|&v| vertex_index(g, v))
                .collect::<Result<_>>()?;
            let n = g.n();
            let dist = all_pairs_distances(g);
            let mut vectors: Vec<(Vec<u32>, usize)> = (0..n)
                .map(|v| (landmarks.iter().map(|&s| dist[s * n + v]).collect(), v))
                .collect();
            vectors.sort();
            for w in vectors.windows(2) {
                if w[0].0 == w[1].0 {
                    return Ok(Verification::fail(format!(
                        "vertices {} and {} have equal distance vectors",
                        g.label(w[0].1),
                        g.label(w[1].1)
                    )));
                }
            }
            Ok(Verification::pass())
        }
        Certificate::HamObstruction {
            separator,
            stranded,
            ..
        } => {
            let sep: Vec<usize> = separator
                .iter()
                .map(|&v| vertex_index(g, v))
                .collect::<Result<_>>()?;
            let t: Vec<usize> = stranded
                .iter()
                .map(|&v| vertex_index(g, v))
                .collect::<Result<_>>()?;
            let in_sep: std::collections::BTreeSet<usize> = sep.iter().copied().collect();
            if t.iter().any(|v| in_sep.contains(v)) {
                return Ok(Verification::fail(
                    "separator and stranded set overlap".into(),
                ));
            }
            if stranded.len() <= separator.len() {
                return Ok(Verification::fail(format!(
                    "stranded set ({}) not larger than separator ({})",
                    stranded.len(),
                    separator.len()
                )));
            }
            for &v in &t {
                if g.neighbors(v).any(|u| !in_sep.contains(&u)) {
                    return Ok(Verification::fail(format!(
                        "stranded vertex {} has a neighbor outside the separator",
                        g.label(v)
                    )));
                }
            }
            let peeled = g.remove_vertices(&sep)?;
            let comps = crate::exact::connectivity(&peeled).component_count;
            if comps <= separator.len() {
                return Ok(Verification::fail(format!(
                    "removing the separator leaves {comps} components, need > {}",
                    separator.len()
                )));
            }
            Ok(Verification::pass())
        }
        Certificate::DivisorNormalForm { .. } => Err(Error::domain(
            "divisor normal form certificates are checked against the ring, not a graph",
        )),
    }
}

/// Check a divisor normal form directly against modular arithmetic.
pub fn verify_divisor_normal_form(fm: &FactoredModulus, cert: &Certificate) -> Result<Verification> {
    let Certificate::DivisorNormalForm {
        m,
        element,
        divisor,
        unit,
    } = cert
    else {
        return Err(Error::domain("not a divisor normal form certificate"));
    };
    if *m != fm.m {
        return Err(Error::domain(format!("modulus mismatch: {m} vs {}", fm.m)));
    }
    if fm.m % divisor != 0 {
        return Ok(Verification::fail(format!("{divisor} does not divide {m}")));
    }
    if gcd(*unit, fm.m) != 1 {
        return Ok(Verification::fail(format!("{unit} is not a unit mod {m}")));
    }
    if (u128::from(*divisor) * u128::from(*unit)) % u128::from(fm.m) != u128::from(*element) {
        return Ok(Verification::fail(format!(
            "{divisor} * {unit} != {element} (mod {m})"
        )));
    }
    Ok(Verification::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factor;
    use crate::graph::{build_total_zero_divisor_graph, DEFAULT_VERTEX_BUDGET as B};

    fn fm(m: u64) -> FactoredModulus {
        factor(m).unwrap()
    }

    fn tz(m: u64) -> Graph {
        build_total_zero_divisor_graph(m, B).unwrap()
    }

    #[test]
    fn associated_divisor_examples() {
        assert_eq!(associated_divisor(&fm(12), 10).unwrap(), (2, 5));
        assert_eq!(associated_divisor(&fm(12), 4).unwrap(), (4, 1));
        assert_eq!(associated_divisor(&fm(36), 30).unwrap(), (6, 5));
        assert_eq!(associated_divisor(&fm(12), 8).unwrap().0, 4);
        assert!(associated_divisor(&fm(12), 0).is_err());
    }

    #[test]
    fn associated_divisor_constant_on_classes() {
        for m in [12u64, 36, 60, 72] {
            let f = fm(m);
            for a in 1..m {
                let (v, u) = associated_divisor(&f, a).unwrap();
                assert_eq!(m % v, 0);
                assert_eq!(gcd(u, m), 1);
                // every associate a*s maps to the same divisor
                for s in (1..m).filter(|&s| gcd(s, m) == 1) {
                    let (v2, _) = associated_divisor(&f, a * s % m).unwrap();
                    assert_eq!(v, v2, "m={m} a={a} s={s}");
                }
            }
        }
    }

    #[test]
    fn half_exponent_clique_examples() {
        let c36 = half_exponent_clique(&fm(36)).unwrap();
        assert!(matches!(
            &c36,
            Certificate::Clique { vertices, .. } if *vertices == vec![6, 12, 18, 24, 30]
        ));
        assert!(verify_certificate(&tz(36), &c36).unwrap().pass);

        let c16 = half_exponent_clique(&fm(16)).unwrap();
        assert!(matches!(
            &c16,
            Certificate::Clique { vertices, .. } if *vertices == vec![4, 8, 12]
        ));
        assert!(verify_certificate(&tz(16), &c16).unwrap().pass);

        let c25 = half_exponent_clique(&fm(25)).unwrap();
        assert_eq!(c25.size(), 4);
        assert!(verify_certificate(&tz(25), &c25).unwrap().pass);

        assert!(half_exponent_clique(&fm(30)).is_err());
    }

    #[test]
    fn chromatic_clique_360() {
        let cert = chromatic_clique(&fm(360)).unwrap();
        assert_eq!(cert.size(), 7);
        assert!(verify_certificate(&tz(360), &cert).unwrap().pass);
    }

    #[test]
    fn coloring_matches_formula() {
        for m in [8u64, 9, 12, 16, 24, 25, 27, 36, 48, 360] {
            let f = fm(m);
            let cert = construct_coloring(&f).unwrap();
            let g = tz(m);
            let v = verify_certificate(&g, &cert).unwrap();
            assert!(v.pass, "m={m}: {:?}", v.detail);
            let (expected, _) = crate::formulas::predict_chromatic(&f).unwrap();
            assert_eq!(cert.size(), expected.unwrap(), "m={m}");
        }
    }

    #[test]
    fn coloring_rejects_squarefree() {
        assert!(construct_coloring(&fm(30)).is_err());
        assert!(construct_coloring(&fm(15)).is_err());
    }

    #[test]
    fn dominating_set_examples() {
        let cert = canonical_dominating_set(&fm(36)).unwrap();
        assert!(matches!(
            &cert,
            Certificate::DominatingSet { vertices, .. } if *vertices == vec![18, 12]
        ));
        assert!(verify_certificate(&tz(36), &cert).unwrap().pass);

        let cert = canonical_dominating_set(&fm(8)).unwrap();
        assert!(matches!(
            &cert,
            Certificate::DominatingSet { vertices, .. } if *vertices == vec![4]
        ));
        assert!(verify_certificate(&tz(8), &cert).unwrap().pass);

        let cert = canonical_dominating_set(&fm(900)).unwrap();
        assert!(matches!(
            &cert,
            Certificate::DominatingSet { vertices, .. } if *vertices == vec![450, 300, 180]
        ));
        assert!(verify_certificate(&tz(900), &cert).unwrap().pass);

        assert!(canonical_dominating_set(&fm(12)).is_err());
    }

    #[test]
    fn resolving_set_examples() {
        let f = fm(36);
        let cert = construct_resolving_set(&f).unwrap();
        assert_eq!(cert.size(), 18);
        assert!(verify_certificate(&tz(36), &cert).unwrap().pass);

        let cert8 = construct_resolving_set(&fm(8)).unwrap();
        assert_eq!(cert8.size(), 1);
        assert!(verify_certificate(&tz(8), &cert8).unwrap().pass);

        let cert25 = construct_resolving_set(&fm(25)).unwrap();
        assert_eq!(cert25.size(), 3);
        assert!(verify_certificate(&tz(25), &cert25).unwrap().pass);
    }

    #[test]
    fn obstruction_examples() {
        for (m, sep, strand_count) in [(16u64, vec![8u64], 4usize), (36, vec![18], 12)] {
            let cert = hamiltonian_obstruction(&fm(m)).unwrap();
            let Certificate::HamObstruction {
                separator,
                stranded,
                ..
            } = &cert
            else {
                panic!()
            };
            assert_eq!(*separator, sep, "m={m}");
            assert_eq!(stranded.len(), strand_count, "m={m}");
            assert!(verify_certificate(&tz(m), &cert).unwrap().pass, "m={m}");
        }
        let cert27 = hamiltonian_obstruction(&fm(27)).unwrap();
        assert!(verify_certificate(&tz(27), &cert27).unwrap().pass);
        assert!(hamiltonian_obstruction(&fm(25)).is_err());
    }

    #[test]
    fn verifier_rejects_bad_coloring() {
        let g = tz(36);
        let f = fm(36);
        let Certificate::Coloring {
            m,
            mut colors,
            color_count,
        } = construct_coloring(&f).unwrap()
        else {
            panic!()
        };
        // force two adjacent vertices onto one color: 6 and 12 are adjacent
        for (v, c) in colors.iter_mut() {
            if *v == 12 {
                *c = 0; // the color of 6
            }
        }
        let bad = Certificate::Coloring {
            m,
            colors,
            color_count,
        };
        let v = verify_certificate(&g, &bad).unwrap();
        assert!(!v.pass);
        assert!(v.detail.unwrap().contains("share color"));
    }

    #[test]
    fn divisor_normal_form_check() {
        let f = fm(36);
        let (v, u) = associated_divisor(&f, 30).unwrap();
        let cert = Certificate::DivisorNormalForm {
            m: 36,
            element: 30,
            divisor: v,
            unit: u,
        };
        assert!(verify_divisor_normal_form(&f, &cert).unwrap().pass);
        assert!(verify_certificate(&tz(36), &cert).is_err());
    }
}

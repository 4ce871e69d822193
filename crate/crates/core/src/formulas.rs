//! Closed-form predictors: every graph invariant of Z~(Z_m) as a pure
//! function of the factorization, plus the Artinian connectedness and
//! diameter criteria for product rings.
//!
//! Predictors never build or consult a graph; the exact module is the
//! independent side of every comparison.

use crate::arith::{arith_profile, is_prime, FactoredModulus};
use crate::error::{Error, Result};
use crate::ring::{Nilindex, RingSpec};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiameterCase {
    #[serde(rename = "diam1")]
    Diam1,
    #[serde(rename = "diam2")]
    Diam2,
    #[serde(rename = "diam3")]
    Diam3,
}

impl DiameterCase {
    pub fn as_u32(self) -> u32 {
        match self {
            DiameterCase::Diam1 => 1,
            DiameterCase::Diam2 => 2,
            DiameterCase::Diam3 => 3,
        }
    }
}

/// The five acyclic families of total zero-divisor graphs over Z_m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AcyclicShape {
    /// m = 4: a single vertex.
    P1,
    /// m = 9: a single edge.
    P2,
    /// m = 8: a path on three vertices.
    P3,
    /// m = 4p, p odd prime: a star on 2p-1 vertices plus two isolated ones.
    StarPlusIsolated,
    /// m = pq, distinct primes: p+q-2 isolated vertices.
    Edgeless,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GirthPrediction {
    #[serde(rename = "three")]
    Three,
    #[serde(rename = "acyclic")]
    Acyclic(AcyclicShape),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChromaticCase {
    #[serde(rename = "connected_formula")]
    ConnectedFormula,
    #[serde(rename = "disconnected_formula")]
    DisconnectedFormula,
    #[serde(rename = "out_of_formula_scope")]
    OutOfFormulaScope,
}

fn require_composite(fm: &FactoredModulus) -> Result<()> {
    if fm.is_prime() {
        Err(Error::empty_graph(format!(
            "Z_{} is a field; the graph has no vertices",
            fm.m
        )))
    } else {
        Ok(())
    }
}

/// Z~(Z_m) is connected iff every exponent in the factorization is >= 2.
/// Prime m has no vertices at all and is reported as an empty graph.
pub fn predict_connected(fm: &FactoredModulus) -> Result<bool> {
    require_composite(fm)?;
    Ok(fm.all_exponents_at_least_two())
}

/// Artinian criterion: connected iff P (cap) ann P != {0} for every maximal
/// associated prime P.
pub fn predict_connected_artinian(spec: &RingSpec, budget: u64) -> Result<bool> {
    let zd = spec.zero_divisor_set(budget)?;
    if zd.is_zero() {
        return Err(Error::empty_graph(format!(
            "ring {spec} has no nonzero zero-divisors"
        )));
    }
    for p in spec.maximal_associated_primes(budget)? {
        let ann = spec.annihilator(&p.elements(spec), budget)?;
        let intersects_nontrivially = p
            .indices()
            .iter()
            .any(|&i| i != 0 && ann.contains_index(i));
        if !intersects_nontrivially {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Diameter trichotomy for connected Z~(Z_m): 3 when m has several primes,
/// 2 for p^k with k >= 3, 1 for p^2.
pub fn predict_diameter(fm: &FactoredModulus) -> Result<DiameterCase> {
    if !predict_connected(fm)? {
        return Err(Error::domain(format!(
            "diameter prediction requires a connected graph (m={})",
            fm.m
        )));
    }
    Ok(if fm.n() >= 2 {
        DiameterCase::Diam3
    } else if fm.exponents[0] >= 3 {
        DiameterCase::Diam2
    } else {
        DiameterCase::Diam1
    })
}

/// Diameter trichotomy for a connected Artinian product ring: 3 when not
/// local, 2 when local with maximal-ideal nilindex >= 3, 1 when the maximal
/// ideal squares to zero.
pub fn predict_diameter_ring(spec: &RingSpec, budget: u64) -> Result<DiameterCase> {
    if !predict_connected_artinian(spec, budget)? {
        return Err(Error::domain(format!(
            "diameter prediction requires a connected graph ({spec})"
        )));
    }
    if !spec.is_local(budget)? {
        return Ok(DiameterCase::Diam3);
    }
    let maximal = spec.zero_divisor_set(budget)?;
    match spec.nilindex(&maximal, budget)? {
        Nilindex::Nilpotent(l) if l >= 3 => Ok(DiameterCase::Diam2),
        Nilindex::Nilpotent(_) => Ok(DiameterCase::Diam1),
        Nilindex::NotNilpotent => Err(Error::domain(format!(
            "maximal ideal of local ring {spec} is not nilpotent"
        ))),
    }
}

/// Girth is 3 except for the five acyclic families.
pub fn predict_girth_and_shape(fm: &FactoredModulus) -> Result<GirthPrediction> {
    require_composite(fm)?;
    let shape = match (fm.n(), fm.exponents.as_slice()) {
        (1, [2]) if fm.primes[0] == 2 => Some(AcyclicShape::P1),
        (1, [2]) if fm.primes[0] == 3 => Some(AcyclicShape::P2),
        (1, [3]) if fm.primes[0] == 2 => Some(AcyclicShape::P3),
        (2, [2, 1]) if fm.primes[0] == 2 => Some(AcyclicShape::StarPlusIsolated),
        (2, [1, 1]) => Some(AcyclicShape::Edgeless),
        _ => None,
    };
    Ok(match shape {
        Some(s) => GirthPrediction::Acyclic(s),
        None => GirthPrediction::Three,
    })
}

/// Maximum and minimum degree of a connected Z~(Z_m): the complete case has
/// both equal to p-2; otherwise the maximum sits at m/p_1 and the minimum at
/// p_1.
pub fn predict_degrees(fm: &FactoredModulus) -> Result<(u64, u64)> {
    if !predict_connected(fm)? {
        return Err(Error::domain(format!(
            "degree prediction requires a connected graph (m={})",
            fm.m
        )));
    }
    if fm.is_prime_square() {
        let p = fm.primes[0];
        Ok((p - 2, p - 2))
    } else {
        let p1 = fm.primes[0];
        Ok((fm.m / p1 - 2, p1 - 1))
    }
}

/// Inverse of the degree formulas on the connected non-complete regime:
/// m = (max_degree + 2)(min_degree + 1).
pub fn recover_modulus(max_degree: u64, min_degree: u64) -> Result<u64> {
    if !(max_degree > min_degree && min_degree > 0) {
        return Err(Error::domain(format!(
            "degree pair ({max_degree}, {min_degree}) is outside the connected non-complete regime"
        )));
    }
    Ok((max_degree + 2) * (min_degree + 1))
}

/// Can (x, y) be the (max, min) degree pair of a connected non-complete
/// total zero-divisor graph? Three arithmetic conditions decide it.
pub fn feasible_degree_pair(x: u64, y: u64) -> bool {
    if !(x > y && y > 0) {
        return false;
    }
    let p = y + 1;
    if !is_prime(p) {
        return false;
    }
    // p must be the least prime divisor of x+2
    let c = x + 2;
    if c % p != 0 || (2..p).any(|q| c % q == 0) {
        return false;
    }
    // (x+2)(y+1) must be powerful: q | m implies q^2 | m
    let m = c * p;
    match crate::arith::factor(m) {
        Ok(fm) => fm.all_exponents_at_least_two(),
        Err(_) => false,
    }
}

/// Chromatic number of Z~(Z_m).
///
/// Whenever some exponent is at least 2 the multiples of
/// prod p_i^(ceil(e_i/2)) form a clique that extends by one vertex per odd
/// exponent, and the matching coloring exists, so
/// chi = prod p_i^(floor(e_i/2)) + o(m) - 1 whether or not the graph is
/// connected. For squarefree m that construction degenerates and no formula
/// is claimed: the harness reports oracle values only.
pub fn predict_chromatic(fm: &FactoredModulus) -> Result<(Option<u64>, ChromaticCase)> {
    require_composite(fm)?;
    if fm.exponents.iter().all(|&e| e == 1) {
        return Ok((None, ChromaticCase::OutOfFormulaScope));
    }
    let q = fm.half_exponent_cofactor();
    let o = u64::from(arith_profile(fm).odd_exponent_count);
    let case = if fm.all_exponents_at_least_two() {
        ChromaticCase::ConnectedFormula
    } else {
        ChromaticCase::DisconnectedFormula
    };
    Ok((Some(q + o - 1), case))
}

/// Chromatic index of a connected, non-complete Z~(Z_m): m/p_1 - 2, which
/// equals the maximum degree.
pub fn predict_chromatic_index(fm: &FactoredModulus) -> Result<u64> {
    if !predict_connected(fm)? {
        return Err(Error::domain(format!(
            "chromatic index formula requires a connected graph (m={})",
            fm.m
        )));
    }
    if fm.is_prime_square() {
        return Err(Error::domain(format!(
            "chromatic index formula excludes the complete case (m={})",
            fm.m
        )));
    }
    Ok(fm.m / fm.primes[0] - 2)
}

/// Hamiltonian iff m = p^2 with p >= 5 (the complete graphs on at least
/// four vertices).
pub fn predict_hamiltonian(fm: &FactoredModulus) -> Result<bool> {
    require_composite(fm)?;
    Ok(fm.is_prime_square() && fm.primes[0] >= 5)
}

/// No total zero-divisor graph over Z_m is Eulerian.
pub fn predict_eulerian(fm: &FactoredModulus) -> Result<bool> {
    require_composite(fm)?;
    Ok(false)
}

/// Domination number of a connected Z~(Z_m): the number of distinct primes.
pub fn predict_domination(fm: &FactoredModulus) -> Result<u64> {
    if !predict_connected(fm)? {
        return Err(Error::domain(format!(
            "domination formula requires a connected graph (m={})",
            fm.m
        )));
    }
    Ok(fm.n() as u64)
}

/// Metric dimension of a connected Z~(Z_m).
pub fn predict_metric_dimension(fm: &FactoredModulus) -> Result<u64> {
    if !predict_connected(fm)? {
        return Err(Error::domain(format!(
            "metric dimension formula requires a connected graph (m={})",
            fm.m
        )));
    }
    let prof = arith_profile(fm);
    let base = fm.m - prof.phi - prof.tau + 1;
    Ok(if fm.n() >= 2 {
        base + fm.n() as u64
    } else {
        base
    })
}

/// Metric dimension of the classical zero-divisor graph of Z_m (always
/// connected when it has vertices): m - phi(m) - tau(m) + 1.
pub fn predict_zdg_metric_dimension(fm: &FactoredModulus) -> Result<u64> {
    require_composite(fm)?;
    let prof = arith_profile(fm);
    Ok(fm.m - prof.phi - prof.tau + 1)
}

/// All formula-level predictions for one modulus, with out-of-scope slots
/// left empty.
#[derive(Debug, Clone, Serialize)]
pub struct Prediction {
    pub connected: bool,
    pub diameter_case: Option<DiameterCase>,
    pub girth: GirthPrediction,
    pub max_degree: Option<u64>,
    pub min_degree: Option<u64>,
    pub recovered_m: Option<u64>,
    pub chromatic: Option<u64>,
    pub chromatic_case: ChromaticCase,
    pub chromatic_index: Option<u64>,
    pub hamiltonian: bool,
    pub eulerian: bool,
    pub domination: Option<u64>,
    pub metric_dimension: Option<u64>,
    pub zdg_metric_dimension: Option<u64>,
}

impl Prediction {
    /// Predictions for a composite modulus; prime m is an empty graph and
    /// yields an error.
    pub fn for_modulus(fm: &FactoredModulus) -> Result<Prediction> {
        let connected = predict_connected(fm)?;
        let complete = fm.is_prime_square();
        let degrees = connected.then(|| predict_degrees(fm)).transpose()?;
        let (chromatic, chromatic_case) = predict_chromatic(fm)?;
        Ok(Prediction {
            connected,
            diameter_case: connected.then(|| predict_diameter(fm)).transpose()?,
            girth: predict_girth_and_shape(fm)?,
            max_degree: degrees.map(|d| d.0),
            min_degree: degrees.map(|d| d.1),
            recovered_m: degrees
                .filter(|_| !complete)
                .map(|(dmax, dmin)| recover_modulus(dmax, dmin))
                .transpose()?,
            chromatic,
            chromatic_case,
            chromatic_index: (connected && !complete)
                .then(|| predict_chromatic_index(fm))
                .transpose()?,
            hamiltonian: predict_hamiltonian(fm)?,
            eulerian: predict_eulerian(fm)?,
            domination: connected.then(|| predict_domination(fm)).transpose()?,
            metric_dimension: connected.then(|| predict_metric_dimension(fm)).transpose()?,
            zdg_metric_dimension: Some(predict_zdg_metric_dimension(fm)?),
        })
    }
}

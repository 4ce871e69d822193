//! Finite commutative unital rings presented as products Z_{k_1} x ... x Z_{k_r},
//! with exhaustive zero-divisor, annihilator, prime-ideal, associated-prime and
//! nilindex computations.
//!
//! Everything here is extensional: ideals are materialized element sets and all
//! queries are exhaustive scans. At the intended scale (ring order up to about
//! 10^4) exactness matters more than speed.

use crate::arith::gcd;
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

/// Default cap on the ring order for full element enumeration.
pub const DEFAULT_ELEMENT_BUDGET: u64 = 10_000;

/// A finite commutative unital ring Z_{k_1} x ... x Z_{k_r}. A single factor
/// `[m]` denotes Z_m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingSpec {
    pub factors: Vec<u64>,
}

/// An element as a tuple of residues, `coords[i]` in `[0, k_i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RingElement {
    pub coords: Vec<u64>,
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// An ideal (or any multiplicatively absorbing additive subgroup candidate)
/// materialized as an explicit element set, stored as a membership mask over
/// the ring's lexicographic element order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealSet {
    mask: Vec<bool>,
    len: usize,
}

impl IdealSet {
    fn from_mask(mask: Vec<bool>) -> Self {
        let len = mask.iter().filter(|&&b| b).count();
        IdealSet { mask, len }
    }

    pub fn from_indices(order: usize, indices: &[usize]) -> Self {
        let mut mask = vec![false; order];
        for &i in indices {
            mask[i] = true;
        }
        IdealSet::from_mask(mask)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.mask[idx]
    }

    /// True iff the ideal is exactly {0}.
    pub fn is_zero(&self) -> bool {
        self.len == 1 && self.mask[0]
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.mask.len()).filter(|&i| self.mask[i]).collect()
    }

    pub fn is_subset_of(&self, other: &IdealSet) -> bool {
        self.mask
            .iter()
            .zip(&other.mask)
            .all(|(&a, &b)| !a || b)
    }

    /// Decode the member set into explicit elements, ascending.
    pub fn elements(&self, spec: &RingSpec) -> Vec<RingElement> {
        self.indices().iter().map(|&i| spec.decode(i)).collect()
    }
}

impl RingSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::domain("ring spec needs at least one factor"));
        }
        if let Some(&k) = factors.iter().find(|&&k| k < 2) {
            return Err(Error::domain(format!("ring factor {k} < 2")));
        }
        Ok(RingSpec { factors })
    }

    /// Parse the textual form "k1xk2x..." used by the CLI, e.g. "4x9".
    pub fn parse(text: &str) -> Result<Self> {
        let factors = text
            .split('x')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::domain(format!("bad ring factor {part:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        RingSpec::new(factors)
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn check_budget(&self, budget: u64) -> Result<usize> {
        let order = self.order();
        if order > budget {
            return Err(Error::resource(format!(
                "ring order {order} exceeds element budget {budget}"
            )));
        }
        Ok(order as usize)
    }

    /// Element at position `idx` of the lexicographic enumeration (first
    /// coordinate most significant).
    pub fn decode(&self, idx: usize) -> RingElement {
        let mut coords = vec![0u64; self.factors.len()];
        let mut rest = idx as u64;
        for i in (0..self.factors.len()).rev() {
            coords[i] = rest % self.factors[i];
            rest /= self.factors[i];
        }
        RingElement { coords }
    }

    pub fn encode(&self, e: &RingElement) -> usize {
        debug_assert_eq!(e.coords.len(), self.factors.len());
        let mut idx = 0u64;
        for (c, k) in e.coords.iter().zip(&self.factors) {
            debug_assert!(c < k);
            idx = idx * k + c;
        }
        idx as usize
    }

    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.zip_idx(a, b, |x, y, k| (x + y) % k)
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.zip_idx(a, b, |x, y, k| (x * y) % k)
    }

    fn zip_idx(&self, a: usize, b: usize, f: impl Fn(u64, u64, u64) -> u64) -> usize {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut scale = 1u64;
        for &k in self.factors.iter().rev() {
            let (xa, xb) = (a % k, b % k);
            out += f(xa, xb, k) * scale;
            scale *= k;
            a /= k;
            b /= k;
        }
        out as usize
    }

    /// All ring elements in lexicographic order.
    pub fn enumerate_elements(&self, budget: u64) -> Result<Vec<RingElement>> {
        let order = self.check_budget(budget)?;
        Ok((0..order).map(|i| self.decode(i)).collect())
    }

    /// A unit has every coordinate coprime to its factor.
    pub fn is_unit(&self, e: &RingElement) -> bool {
        e.coords
            .iter()
            .zip(&self.factors)
            .all(|(&c, &k)| gcd(c, k) == 1)
    }

    /// In a finite commutative ring the non-units are exactly the
    /// zero-divisors; 0 counts as a zero-divisor here.
    pub fn is_zero_divisor(&self, e: &RingElement) -> bool {
        !self.is_unit(e)
    }

    fn is_unit_idx(&self, idx: usize) -> bool {
        let mut a = idx as u64;
        for &k in self.factors.iter().rev() {
            if gcd(a % k, k) != 1 {
                return false;
            }
            a /= k;
        }
        true
    }

    /// Indices of all zero-divisors (including 0), ascending.
    pub fn zero_divisor_indices(&self, budget: u64) -> Result<Vec<usize>> {
        let order = self.check_budget(budget)?;
        Ok((0..order).filter(|&i| !self.is_unit_idx(i)).collect())
    }

    /// ann(S) = { r : rs = 0 for all s in S }.
    pub fn annihilator(&self, subset: &[RingElement], budget: u64) -> Result<IdealSet> {
        if subset.is_empty() {
            return Err(Error::domain("annihilator of an empty subset"));
        }
        let idxs: Vec<usize> = subset.iter().map(|e| self.encode(e)).collect();
        self.annihilator_of_indices(&idxs, budget)
    }

    fn annihilator_of_indices(&self, subset: &[usize], budget: u64) -> Result<IdealSet> {
        let order = self.check_budget(budget)?;
        let mask: Vec<bool> = (0..order)
            .map(|r| subset.iter().all(|&s| self.mul_idx(r, s) == 0))
            .collect();
        Ok(IdealSet::from_mask(mask))
    }

    /// Checks the ideal axioms on an explicit set: contains 0, closed under
    /// addition, absorbs ring multiplication.
    pub fn is_ideal(&self, set: &IdealSet, budget: u64) -> Result<bool> {
        let order = self.check_budget(budget)?;
        if !set.contains_index(0) {
            return Ok(false);
        }
        let members = set.indices();
        for &a in &members {
            for &b in &members {
                if !set.contains_index(self.add_idx(a, b)) {
                    return Ok(false);
                }
            }
            for r in 0..order {
                if !set.contains_index(self.mul_idx(r, a)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A proper ideal P is prime iff xy in P implies x in P or y in P.
    pub fn is_prime_ideal(&self, ideal: &IdealSet, budget: u64) -> Result<bool> {
        let order = self.check_budget(budget)?;
        if ideal.len() == order {
            return Err(Error::domain("a prime ideal must be proper"));
        }
        let outside: Vec<usize> = (0..order).filter(|&i| !ideal.contains_index(i)).collect();
        for (i, &x) in outside.iter().enumerate() {
            for &y in &outside[i..] {
                if ideal.contains_index(self.mul_idx(x, y)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The associated primes { ann(a) : a in R, ann(a) prime }, deduplicated,
    /// sorted by (size, member indices) for determinism.
    pub fn associated_primes(&self, budget: u64) -> Result<Vec<IdealSet>> {
        let order = self.check_budget(budget)?;
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut distinct: Vec<IdealSet> = Vec::new();
        for a in 0..order {
            let ann = self.annihilator_of_indices(&[a], budget)?;
            if seen.insert(ann.mask.clone()) {
                distinct.push(ann);
            }
        }
        let mut primes: Vec<IdealSet> = Vec::new();
        for ann in distinct {
            if ann.len() < order && self.is_prime_ideal(&ann, budget)? {
                primes.push(ann);
            }
        }
        primes.sort_by(|a, b| (a.len(), a.indices()).cmp(&(b.len(), b.indices())));
        Ok(primes)
    }

    /// Associated primes maximal under inclusion among the associated primes.
    pub fn maximal_associated_primes(&self, budget: u64) -> Result<Vec<IdealSet>> {
        let ass = self.associated_primes(budget)?;
        Ok(ass
            .iter()
            .filter(|p| {
                !ass.iter()
                    .any(|q| q.len() > p.len() && p.is_subset_of(q))
            })
            .cloned()
            .collect())
    }

    /// Smallest l such that every product of l elements of the ideal is 0,
    /// or NotNilpotent. Computed by iterating set products with cycle
    /// detection.
    pub fn nilindex(&self, ideal: &IdealSet, budget: u64) -> Result<Nilindex> {
        self.check_budget(budget)?;
        let members = ideal.indices();
        if members.is_empty() || ideal.is_zero() {
            // The empty product convention never arises: callers pass ideals,
            // which contain 0; the zero ideal has nilindex 1.
            return Ok(Nilindex::Nilpotent(1));
        }
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut current = ideal.mask.clone();
        let mut l = 1u32;
        loop {
            if current.iter().enumerate().all(|(i, &b)| !b || i == 0) {
                return Ok(Nilindex::Nilpotent(l));
            }
            if !seen.insert(current.clone()) {
                return Ok(Nilindex::NotNilpotent);
            }
            let mut next = vec![false; current.len()];
            for (x, &inx) in current.iter().enumerate() {
                if inx {
                    for &y in &members {
                        next[self.mul_idx(x, y)] = true;
                    }
                }
            }
            current = next;
            l += 1;
        }
    }

    /// Smallest ideal containing `gens`, by closure iteration.
    pub fn ideal_generated_by(&self, gens: &[RingElement], budget: u64) -> Result<IdealSet> {
        let idxs: Vec<usize> = gens.iter().map(|e| self.encode(e)).collect();
        self.ideal_generated_by_indices(&idxs, budget)
    }

    pub fn ideal_generated_by_indices(&self, gens: &[usize], budget: u64) -> Result<IdealSet> {
        let order = self.check_budget(budget)?;
        let mut mask = vec![false; order];
        mask[0] = true;
        // r*g for every ring element r and generator g, then close under +.
        let mut frontier: Vec<usize> = Vec::new();
        for &g in gens {
            for r in 0..order {
                let x = self.mul_idx(r, g);
                if !mask[x] {
                    mask[x] = true;
                    frontier.push(x);
                }
            }
        }
        let mut members: Vec<usize> = (0..order).filter(|&i| mask[i]).collect();
        while let Some(x) = frontier.pop() {
            let snapshot = members.clone();
            for &y in &snapshot {
                let s = self.add_idx(x, y);
                if !mask[s] {
                    mask[s] = true;
                    members.push(s);
                    frontier.push(s);
                }
            }
        }
        Ok(IdealSet::from_mask(mask))
    }

    /// A finite commutative ring is local iff its zero-divisor set (the
    /// non-units) is closed under addition, i.e. forms an ideal.
    pub fn is_local(&self, budget: u64) -> Result<bool> {
        let zd = self.zero_divisor_indices(budget)?;
        let mask: Vec<bool> = {
            let order = self.order() as usize;
            let mut m = vec![false; order];
            for &i in &zd {
                m[i] = true;
            }
            m
        };
        for &a in &zd {
            for &b in &zd {
                if !mask[self.add_idx(a, b)] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The zero-divisor set as an IdealSet-shaped set (only a genuine ideal
    /// when the ring is local).
    pub fn zero_divisor_set(&self, budget: u64) -> Result<IdealSet> {
        let order = self.check_budget(budget)?;
        let mask: Vec<bool> = (0..order).map(|i| !self.is_unit_idx(i)).collect();
        Ok(IdealSet::from_mask(mask))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Result of a nilindex computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Nilindex {
    Nilpotent(u32),
    NotNilpotent,
}

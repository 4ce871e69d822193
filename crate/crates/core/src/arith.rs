//! Integer factorization and the arithmetic functions the closed-form
//! predictors consume: Euler's totient, the divisor count, the number of odd
//! exponents, and the full divisor list.

use crate::error::{Error, Result};
use serde::Serialize;

/// A positive integer `m >= 2` together with its prime factorization
/// `m = p_1^{e_1} * ... * p_n^{e_n}`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredModulus {
    pub m: u64,
    pub primes: Vec<u64>,
    pub exponents: Vec<u32>,
}

/// Derived arithmetic data of a factored modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArithProfile {
    /// Euler totient of m.
    pub phi: u64,
    /// Number of positive divisors of m.
    pub tau: u64,
    /// Number of odd exponents in the factorization of m.
    pub odd_exponent_count: u32,
    /// All positive divisors of m, ascending.
    pub divisors: Vec<u64>,
}

/// Factor `m` by deterministic trial division. Intended scale is desk-sized
/// moduli (up to about 10^7), where trial division is instant.
pub fn factor(m: u64) -> Result<FactoredModulus> {
    if m < 2 {
        return Err(Error::domain(format!("factor requires m >= 2, got {m}")));
    }
    let mut primes = Vec::new();
    let mut exponents = Vec::new();
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            primes.push(p);
            exponents.push(e);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
        exponents.push(1);
    }
    Ok(FactoredModulus {
        m,
        primes,
        exponents,
    })
}

impl FactoredModulus {
    /// Number of distinct prime factors.
    pub fn n(&self) -> usize {
        self.primes.len()
    }

    /// True iff m is prime.
    pub fn is_prime(&self) -> bool {
        self.n() == 1 && self.exponents[0] == 1
    }

    /// True iff every exponent is at least 2 (m is a powerful number).
    pub fn all_exponents_at_least_two(&self) -> bool {
        self.exponents.iter().all(|&e| e >= 2)
    }

    /// True iff m = p^2 for a prime p.
    pub fn is_prime_square(&self) -> bool {
        self.n() == 1 && self.exponents[0] == 2
    }

    /// p-adic valuation of x for the i-th prime of m.
    pub fn valuation(&self, i: usize, x: u64) -> u32 {
        valuation(x, self.primes[i])
    }

    /// prod p_i^{ceil(e_i/2)}.
    pub fn half_exponent_core(&self) -> u64 {
        self.primes
            .iter()
            .zip(&self.exponents)
            .map(|(&p, &e)| p.pow(e.div_ceil(2)))
            .product()
    }

    /// prod p_i^{floor(e_i/2)}; equals m / half_exponent_core().
    pub fn half_exponent_cofactor(&self) -> u64 {
        self.primes
            .iter()
            .zip(&self.exponents)
            .map(|(&p, &e)| p.pow(e / 2))
            .product()
    }

    /// Indices with exponent >= 2, then indices with exponent 1.
    pub fn split_exponent_indices(&self) -> (Vec<usize>, Vec<usize>) {
        let big = (0..self.n()).filter(|&i| self.exponents[i] >= 2).collect();
        let one = (0..self.n()).filter(|&i| self.exponents[i] == 1).collect();
        (big, one)
    }

    /// Compact display such as "2^3*3^2*5".
    pub fn factorization_string(&self) -> String {
        self.primes
            .iter()
            .zip(&self.exponents)
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Compute the arithmetic profile of a factored modulus.
pub fn arith_profile(fm: &FactoredModulus) -> ArithProfile {
    let phi = fm
        .primes
        .iter()
        .zip(&fm.exponents)
        .map(|(&p, &e)| p.pow(e - 1) * (p - 1))
        .product();
    let tau = fm.exponents.iter().map(|&e| u64::from(e) + 1).product();
    let odd_exponent_count = fm.exponents.iter().filter(|&&e| e % 2 == 1).count() as u32;

    let mut divisors = vec![1u64];
    for (&p, &e) in fm.primes.iter().zip(&fm.exponents) {
        let prev = divisors.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divisors.extend(prev.iter().map(|&d| d * pk));
        }
    }
    divisors.sort_unstable();
    debug_assert_eq!(divisors.len() as u64, tau);

    ArithProfile {
        phi,
        tau,
        odd_exponent_count,
        divisors,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Largest e with p^e | x; returns 0 for x = 0 ... which never arises since
/// callers pass nonzero residues.
pub fn valuation(x: u64, p: u64) -> u32 {
    debug_assert!(x != 0 && p >= 2);
    let mut x = x;
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factor_360() {
        let fm = factor(360).unwrap();
        assert_eq!(fm.primes, vec![2, 3, 5]);
        assert_eq!(fm.exponents, vec![3, 2, 1]);
    }

    #[test]
    fn factor_prime_power_and_mixed() {
        let fm = factor(25).unwrap();
        assert_eq!((fm.primes, fm.exponents), (vec![5], vec![2]));
        let fm = factor(36).unwrap();
        assert_eq!((fm.primes, fm.exponents), (vec![2, 3], vec![2, 2]));
    }

    #[test]
    fn factor_rejects_small() {
        assert!(factor(0).is_err());
        assert!(factor(1).is_err());
    }

    #[test]
    fn profile_36() {
        let prof = arith_profile(&factor(36).unwrap());
        assert_eq!(prof.phi, 12);
        assert_eq!(prof.tau, 9);
        assert_eq!(prof.odd_exponent_count, 0);
        assert_eq!(prof.divisors, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn profile_prime_and_360() {
        let prof = arith_profile(&factor(13).unwrap());
        assert_eq!((prof.phi, prof.tau, prof.odd_exponent_count), (12, 2, 1));
        let prof = arith_profile(&factor(360).unwrap());
        assert_eq!((prof.phi, prof.tau, prof.odd_exponent_count), (96, 24, 2));
    }

    #[test]
    fn half_exponent_parts() {
        let fm = factor(360).unwrap();
        assert_eq!(fm.half_exponent_core(), 60);
        assert_eq!(fm.half_exponent_cofactor(), 6);
        assert_eq!(fm.half_exponent_core() * fm.half_exponent_cofactor(), 360);
    }

    proptest! {
        #[test]
        fn factor_reassembles(m in 2u64..20_000) {
            let fm = factor(m).unwrap();
            let back: u64 = fm.primes.iter().zip(&fm.exponents)
                .map(|(&p, &e)| p.pow(e)).product();
            prop_assert_eq!(back, m);
            prop_assert!(fm.primes.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(fm.exponents.iter().all(|&e| e >= 1));
        }

        #[test]
        fn phi_matches_gcd_count(m in 2u64..3_000) {
            let prof = arith_profile(&factor(m).unwrap());
            let count = (1..m).filter(|&x| gcd(x, m) == 1).count() as u64;
            prop_assert_eq!(prof.phi, count);
        }

        #[test]
        fn tau_matches_divisibility_count(m in 2u64..3_000) {
            let prof = arith_profile(&factor(m).unwrap());
            let count = (1..=m).filter(|&d| m % d == 0).count() as u64;
            prop_assert_eq!(prof.tau, count);
            prop_assert_eq!(prof.divisors.len() as u64, count);
            prop_assert_eq!(prof.divisors[0], 1);
            prop_assert_eq!(*prof.divisors.last().unwrap(), m);
        }
    }
}

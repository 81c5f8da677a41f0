//! Integer helpers: primality, factorization, prime powers, and the
//! k_n classification of group orders.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime ↦ exponent map of a positive integer. Reconstructs the integer via
/// [`OrderFactorization::value`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OrderFactorization(pub BTreeMap<u64, u32>);

impl OrderFactorization {
    pub fn of(mut n: u64) -> Self {
        assert!(n >= 1, "factorization of zero");
        let mut map = BTreeMap::new();
        let mut d = 2;
        while d * d <= n {
            while n.is_multiple_of(d) {
                *map.entry(d).or_insert(0) += 1;
                n /= d;
            }
            d += 1;
        }
        if n > 1 {
            *map.entry(n).or_insert(0) += 1;
        }
        Self(map)
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|(&p, &e)| p.pow(e)).product()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.0.keys().copied().collect()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.0.get(&p).copied().unwrap_or(0)
    }
}

impl fmt::Display for OrderFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("·"))
    }
}

/// Distinct prime divisors in ascending order.
pub fn prime_factors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    OrderFactorization::of(n).primes()
}

/// True iff `n = p^k` with `k ≥ 1`. By convention `is_prime_power(1)` is
/// false: 1 is the size of central classes and never a Burnside witness.
pub fn is_prime_power(n: u64) -> bool {
    n >= 2 && prime_factors(n).len() == 1
}

/// Number of distinct primes dividing `order`, with the full factorization.
/// A simple group of that order is a k_n-group for the returned n.
pub fn classify_k(order: u64) -> (usize, OrderFactorization) {
    let f = OrderFactorization::of(order);
    (f.0.len(), f)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(16));
        assert!(is_prime_power(2));
        assert!(is_prime_power(121));
        assert!(!is_prime_power(55));
        assert!(!is_prime_power(1));
        assert!(!is_prime_power(0));
    }

    #[test]
    fn k_classification() {
        let (n, f) = classify_k(660);
        assert_eq!(n, 4);
        assert_eq!(f.0, BTreeMap::from([(2, 2), (3, 1), (5, 1), (11, 1)]));
        let (n, f) = classify_k(168);
        assert_eq!(n, 3);
        assert_eq!(f.to_string(), "2^3·3·7");
        assert_eq!(classify_k(2).0, 1);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(n in 1u64..2_000_000) {
            let f = OrderFactorization::of(n);
            prop_assert_eq!(f.value(), n);
            prop_assert!(f.primes().iter().all(|&p| is_prime(p)));
        }
    }
}

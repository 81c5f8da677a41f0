//! Finite fields GF(p^k), k ≤ 4, as polynomials over GF(p) modulo a fixed
//! irreducible.
//!
//! An element with coefficient vector `(c_0, …, c_{k−1})` (constant term
//! first) has the integer index `c_0 + c_1·p + … + c_{k−1}·p^{k−1}`. Every
//! ordering in this module follows that index: the defining modulus is the
//! monic irreducible whose lower coefficients have the smallest index, and
//! [`FieldSpec::primitive_element`] returns the primitive element of smallest
//! index.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::uset::arith::{is_prime, prime_factors};

/// Largest supported extension degree.
pub const MAX_EXTENSION: u32 = 4;

/// The field GF(p^k) with its defining polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    /// Monic modulus, constant term first, length `k + 1`.
    modulus: Vec<u64>,
}

impl FieldSpec {
    /// GF(p^k) with the smallest monic irreducible modulus of degree `k`.
    pub fn new(p: u64, k: u32) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 || k > MAX_EXTENSION {
            return Err(Error::UnsupportedExtension(k));
        }
        let lower = p.checked_pow(k).ok_or(Error::UnsupportedExtension(k))?;
        for idx in 0..lower {
            let mut candidate = digits(idx, p, k as usize);
            candidate.push(1);
            if is_irreducible(&candidate, p) {
                return Ok(Arc::new(Self {
                    p,
                    k,
                    modulus: candidate,
                }));
            }
        }
        Err(Error::NoIrreducible { p, k })
    }

    /// GF(q) for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Arc<Self>> {
        let (p, k) = prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    // Arithmetic on element indices. These are the primitives the matrix
    // code uses; `FieldElement` wraps them with field checks.

    pub(crate) fn add_idx(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut x, mut y, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    pub(crate) fn neg_idx(&self, a: u64) -> u64 {
        let mut x = a;
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        out
    }

    pub(crate) fn sub_idx(&self, a: u64, b: u64) -> u64 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub(crate) fn mul_idx(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a * b) % self.p;
        }
        let k = self.k as usize;
        let x = digits(a, self.p, k);
        let y = digits(b, self.p, k);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        // Reduce with the monic modulus from the top down.
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let t = prod[d - k + i] + (self.p - c) * m % self.p;
                prod[d - k + i] = t % self.p;
            }
        }
        undigits(&prod[..k], self.p)
    }

    pub(crate) fn pow_idx(&self, a: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv_idx(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_idx(a, self.size() - 2))
    }

    /// Multiplicative order of a nonzero element index.
    pub(crate) fn order_idx(&self, a: u64) -> u64 {
        let n = self.size() - 1;
        let mut ord = n;
        for r in prime_factors(n) {
            while ord.is_multiple_of(r) && self.pow_idx(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// The element with the given index.
    pub fn element(self: &Arc<Self>, index: u64) -> FieldElement {
        assert!(index < self.size(), "index {index} outside the field");
        FieldElement {
            spec: Arc::clone(self),
            index,
        }
    }

    /// Element from coefficients, constant term first; reduced mod p and
    /// padded or truncated to length k.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[u64]) -> FieldElement {
        let mut c: Vec<u64> = coeffs.iter().map(|x| x % self.p).collect();
        // Reduce any terms of degree >= k using x^k = −(lower modulus).
        let mut acc = 0;
        let mut xpow = 1; // index of x^i
        let x = if self.k == 1 {
            self.neg_idx(self.modulus[0])
        } else {
            self.p
        };
        for ci in c.drain(..) {
            acc = self.add_idx(acc, self.mul_idx(ci, xpow));
            xpow = self.mul_idx(xpow, x);
        }
        self.element(acc)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.element(0)
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.element(1)
    }

    /// All elements in index order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |i| self.element(i))
    }

    /// The generator of the multiplicative group with the smallest index.
    pub fn primitive_element(self: &Arc<Self>) -> FieldElement {
        let n = self.size() - 1;
        let idx = (1..self.size())
            .find(|&a| self.order_idx(a) == n)
            .expect("the multiplicative group of a finite field is cyclic");
        self.element(idx)
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    index: u64,
}

impl FieldElement {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Coefficients mod p, constant term first, length k.
    pub fn coeffs(&self) -> Vec<u64> {
        digits(self.index, self.spec.p, self.spec.k as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    pub fn is_one(&self) -> bool {
        self.index == 1
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, index: u64) -> FieldElement {
        FieldElement {
            spec: Arc::clone(&self.spec),
            index,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.spec.add_idx(self.index, other.index)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.spec.sub_idx(self.index, other.index)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.spec.mul_idx(self.index, other.index)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.spec.neg_idx(self.index))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.spec.inv_idx(self.index)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.spec.pow_idx(self.index, e))
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        (self.index != 0).then(|| self.spec.order_idx(self.index))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{})[{:?}]",
            self.spec.p,
            self.spec.k,
            self.coeffs()
        )
    }
}

/// Writes the element as a polynomial in `x`, e.g. `2x+1`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeffs();
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|&(_, &ci)| ci != 0)
            .map(|(i, &ci)| match (i, ci) {
                (0, _) => ci.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{ci}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{ci}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

/// Splits `q = p^k` into `(p, k)`.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    let primes = prime_factors(q);
    match primes.as_slice() {
        [p] => {
            let mut k = 0;
            let mut n = q;
            while n.is_multiple_of(*p) {
                n /= p;
                k += 1;
            }
            Some((*p, k))
        }
        _ => None,
    }
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

fn undigits(c: &[u64], p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Remainder of `a` modulo the monic `m` over GF(p), coefficients constant
/// term first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let c = r.pop().unwrap();
        if c != 0 {
            let shift = r.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * mi % p) % p;
            }
        }
    }
    r
}

/// Brute force: no monic factor of degree 1..=deg/2.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut divisor = digits(idx, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.size(), 3);
    }

    #[test]
    fn gf9_modulus() {
        // x^2 + 1 has no root mod 3 (0, 1, 2 give 1, 2, 2). The only
        // candidate with a smaller index is x^2 (index 0), which is reducible.
        let f = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn gf8_modulus() {
        // Degree-3 irreducibles over GF(2): x^3+x+1 (lower index 1+2 = 3) and
        // x^3+x^2+1 (lower index 1+4 = 5). Smaller indices 0, 1, 2, 4 all have
        // the root 0 or 1.
        let f = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(
            FieldSpec::new(2, 5),
            Err(Error::UnsupportedExtension(5))
        ));
        assert!(matches!(
            FieldSpec::with_order(12),
            Err(Error::NotPrimePower(12))
        ));
    }

    #[test]
    fn small_arithmetic() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.element(2).inv().unwrap(), f7.element(4));
        assert!(matches!(f7.zero().inv(), Err(Error::ZeroInverse)));

        let f9 = FieldSpec::new(3, 2).unwrap();
        let x = f9.from_coeffs(&[0, 1]);
        assert_eq!(x.mul(&x).unwrap(), f9.element(2));

        let f4 = FieldSpec::new(2, 2).unwrap();
        for a in f4.elements().skip(1) {
            assert!(a.pow(3).is_one());
        }
    }

    #[test]
    fn field_mismatch() {
        let a = FieldSpec::new(5, 1).unwrap().one();
        let b = FieldSpec::new(7, 1).unwrap().one();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn primitive_elements() {
        assert!(FieldSpec::new(2, 1).unwrap().primitive_element().is_one());
        // Orders mod 7: 2 -> 3, 3 -> 6.
        assert_eq!(FieldSpec::new(7, 1).unwrap().primitive_element().index(), 3);
        // GF(9) = GF(3)[x]/(x^2+1): indices 1, 2 have orders 1, 2; x (index 3)
        // has x^2 = −1 so order 4; 1+x (index 4) squares to 2x, whose square
        // is −1, so its order is 8.
        let f9 = FieldSpec::new(3, 2).unwrap();
        let g = f9.primitive_element();
        assert_eq!(g.coeffs(), vec![1, 1]);
        assert_eq!(g.multiplicative_order(), Some(8));
    }

    #[test]
    fn from_coeffs_reduces_high_terms() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        // x^2 = −1 = 2
        assert_eq!(f9.from_coeffs(&[0, 0, 1]), f9.element(2));
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.from_coeffs(&[7]), f5.element(2));
    }

    fn small_fields() -> Vec<Arc<FieldSpec>> {
        [
            (2, 1),
            (3, 1),
            (5, 1),
            (7, 1),
            (2, 2),
            (2, 3),
            (3, 2),
            (2, 4),
            (13, 1),
        ]
        .iter()
        .map(|&(p, k)| FieldSpec::new(p, k).unwrap())
        .collect()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let els: Vec<_> = f.elements().collect();
            for a in &els {
                assert_eq!(a.add(&a.neg()).unwrap(), f.zero());
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
                }
                for b in &els {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &els {
                        let lhs = a.mul(&b.add(c).unwrap()).unwrap();
                        let rhs = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                        assert_eq!(
                            a.mul(b).unwrap().mul(c).unwrap(),
                            a.mul(&b.mul(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.add(b).unwrap().add(c).unwrap(),
                            a.add(&b.add(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        for f in small_fields() {
            let p = f.characteristic();
            let els: Vec<_> = f.elements().collect();
            let images: std::collections::HashSet<u64> =
                els.iter().map(|a| a.pow(p).index()).collect();
            assert_eq!(images.len(), els.len());
            for a in &els {
                for b in &els {
                    assert_eq!(a.add(b).unwrap().pow(p), a.pow(p).add(&b.pow(p)).unwrap());
                    assert_eq!(a.mul(b).unwrap().pow(p), a.pow(p).mul(&b.pow(p)).unwrap());
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for f in small_fields() {
            let g = f.primitive_element();
            let powers: std::collections::HashSet<u64> =
                (0..f.size() - 1).map(|e| g.pow(e).index()).collect();
            assert_eq!(powers.len() as u64, f.size() - 1);
            assert!(!powers.contains(&0));
        }
    }
}

//! Symbolic U-set patterns over the prime symbols `p`, `q`, `r`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! pattern  := term ("," term)*
//! term     := coeff symbol* | symbol+
//! coeff    := int ("^" int)?
//! symbol   := ("p" | "q" | "r") ("^" int)?
//! ```
//!
//! So `1,rq,8pq,4qr,8pr`, `1,r^2,4r^2,16r` and `1,r^2q,32r^2,2r^3q,2^6q` are
//! all valid. A symbol may appear more than once in a term (`rr` is `r^2`).
//! Terms print with the coefficient first and symbols in `p`, `q`, `r` order,
//! so `4qr` prints as `4qr` and `rq` as `qr`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::arith::is_prime;
use crate::error::{Error, Result};

pub const SYMBOLS: [char; 3] = ['p', 'q', 'r'];

fn symbol_index(c: char) -> Option<usize> {
    SYMBOLS.iter().position(|&s| s == c)
}

/// `coeff · p^a · q^b · r^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub coeff: u64,
    pub exps: [u32; 3],
}

impl Term {
    pub const ONE: Term = Term {
        coeff: 1,
        exps: [0; 3],
    };

    pub fn constant(c: u64) -> Self {
        Self {
            coeff: c,
            exps: [0; 3],
        }
    }

    pub fn is_constant(&self) -> bool {
        self.exps == [0; 3]
    }

    /// Symbols occurring in the term.
    pub fn symbols(&self) -> impl Iterator<Item = char> + '_ {
        (0..3).filter(|&i| self.exps[i] > 0).map(|i| SYMBOLS[i])
    }

    /// Evaluates the term; `None` on overflow.
    pub fn eval(&self, a: &PrimeAssignment) -> Result<Option<u64>> {
        let mut v = self.coeff;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let x = a
                .get(SYMBOLS[i])
                .ok_or(Error::UnassignedSymbol(SYMBOLS[i]))?;
            match x.checked_pow(e).and_then(|x| v.checked_mul(x)) {
                Some(nv) => v = nv,
                None => return Ok(None),
            }
        }
        Ok(Some(v))
    }

    /// Whether `self` divides `other` as a monomial.
    pub fn divides(&self, other: &Term) -> bool {
        other.coeff.is_multiple_of(self.coeff) && (0..3).all(|i| self.exps[i] <= other.exps[i])
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff != 1 || self.is_constant() {
            write!(f, "{}", self.coeff)?;
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "{}", SYMBOLS[i])?,
                _ => write!(f, "{}^{e}", SYMBOLS[i])?,
            }
        }
        Ok(())
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| Error::PatternSyntax(format!("{msg} in term {s:?}"));
        if text.is_empty() {
            return Err(err("empty term"));
        }
        let mut pos = 0;
        let int = |pos: &mut usize| -> Option<u64> {
            let start = *pos;
            while *pos < text.len() && text[*pos].is_ascii_digit() {
                *pos += 1;
            }
            text[start..*pos].iter().collect::<String>().parse().ok()
        };
        let mut term = Term::ONE;
        if text[0].is_ascii_digit() {
            let base = int(&mut pos).ok_or_else(|| err("coefficient too large"))?;
            let mut coeff = base;
            if text.get(pos) == Some(&'^') {
                pos += 1;
                let e = int(&mut pos).ok_or_else(|| err("missing exponent"))?;
                coeff = u32::try_from(e)
                    .ok()
                    .and_then(|e| base.checked_pow(e))
                    .ok_or_else(|| err("coefficient too large"))?;
            }
            term.coeff = coeff;
        }
        if term.coeff == 0 {
            return Err(err("zero coefficient"));
        }
        while pos < text.len() {
            let c = text[pos];
            let i = symbol_index(c).ok_or_else(|| err(&format!("unexpected {c:?}")))?;
            pos += 1;
            let mut e = 1;
            if text.get(pos) == Some(&'^') {
                pos += 1;
                e = int(&mut pos)
                    .and_then(|e| u32::try_from(e).ok())
                    .filter(|&e| e > 0)
                    .ok_or_else(|| err("bad exponent"))?;
            }
            term.exps[i] += e;
        }
        Ok(term)
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A candidate U-set: pairwise distinct terms with positive coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct USetPattern {
    terms: Vec<Term>,
}

impl USetPattern {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::PatternSyntax("empty pattern".into()));
        }
        let mut seen = BTreeSet::new();
        for t in &terms {
            if t.coeff == 0 {
                return Err(Error::PatternSyntax(format!("zero coefficient in {t}")));
            }
            if !seen.insert(*t) {
                return Err(Error::PatternSyntax(format!("term {t} appears twice")));
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Symbols used anywhere in the pattern, in `p`, `q`, `r` order.
    pub fn symbols(&self) -> Vec<char> {
        let used: BTreeSet<char> = self.terms.iter().flat_map(|t| t.symbols()).collect();
        SYMBOLS.into_iter().filter(|c| used.contains(c)).collect()
    }
}

impl FromStr for USetPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .unwrap_or(inner);
        Self::new(inner.split(',').map(str::parse).collect::<Result<_>>()?)
    }
}

impl fmt::Display for USetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for USetPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Values for the prime symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeAssignment(BTreeMap<char, u64>);

impl PrimeAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an assignment, rejecting unknown symbols and non-primes.
    pub fn from_pairs(pairs: &[(char, u64)]) -> Result<Self> {
        let mut a = Self::new();
        for &(c, v) in pairs {
            a.set(c, v)?;
        }
        Ok(a)
    }

    pub fn set(&mut self, symbol: char, value: u64) -> Result<()> {
        if symbol_index(symbol).is_none() {
            return Err(Error::InvalidParameters(format!(
                "unknown symbol {symbol:?}"
            )));
        }
        if !is_prime(value) {
            return Err(Error::InvalidParameters(format!(
                "{symbol} = {value} is not prime"
            )));
        }
        self.0.insert(symbol, value);
        Ok(())
    }

    pub fn get(&self, symbol: char) -> Option<u64> {
        self.0.get(&symbol).copied()
    }

    pub fn is_distinct(&self) -> bool {
        let vals: BTreeSet<u64> = self.0.values().copied().collect();
        vals.len() == self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, u64)> + '_ {
        self.0.iter().map(|(&c, &v)| (c, v))
    }
}

impl fmt::Display for PrimeAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(c, v)| format!("{c}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Result of evaluating a pattern: one value per term, in term order, plus
/// the index pairs of terms that evaluated to the same number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instantiation {
    pub values: Vec<u64>,
    pub duplicates: Vec<(usize, usize)>,
}

impl Instantiation {
    pub fn is_distinct(&self) -> bool {
        self.duplicates.is_empty()
    }

    pub fn value_set(&self) -> BTreeSet<u64> {
        self.values.iter().copied().collect()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }
}

/// Evaluates every term of `pat` under `a`.
pub fn instantiate_pattern(pat: &USetPattern, a: &PrimeAssignment) -> Result<Instantiation> {
    let values = pat
        .terms
        .iter()
        .map(|t| {
            t.eval(a)?
                .ok_or_else(|| Error::InvalidParameters(format!("{t} overflows at {a}")))
        })
        .collect::<Result<Vec<u64>>>()?;
    let mut duplicates = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                duplicates.push((i, j));
            }
        }
    }
    Ok(Instantiation { values, duplicates })
}

impl Term {
    /// The term with its symbols renamed: symbol `i` becomes `perm[i]`.
    pub fn rename(&self, perm: [usize; 3]) -> Term {
        let mut exps = [0; 3];
        for i in 0..3 {
            exps[perm[i]] += self.exps[i];
        }
        Term {
            coeff: self.coeff,
            exps,
        }
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl USetPattern {
    /// Renamings of `p`, `q`, `r` that map the pattern's term set onto
    /// itself. The identity is always first. `1,rq,8pq,4qr,8pr` is invariant
    /// under swapping `q` and `r`.
    pub fn symmetries(&self) -> Vec<[usize; 3]> {
        let terms: BTreeSet<Term> = self.terms.iter().copied().collect();
        PERMUTATIONS
            .into_iter()
            .filter(|&perm| {
                let renamed: BTreeSet<Term> = terms.iter().map(|t| t.rename(perm)).collect();
                renamed == terms
            })
            .collect()
    }
}

impl PrimeAssignment {
    fn renamed(&self, perm: [usize; 3]) -> PrimeAssignment {
        PrimeAssignment(
            self.0
                .iter()
                .map(|(&c, &v)| (SYMBOLS[perm[symbol_index(c).unwrap()]], v))
                .collect(),
        )
    }
}

/// Groups assignments into classes related by a symmetry of `pat`. Each
/// class is sorted and the classes are ordered by their first member.
pub fn symmetry_classes(
    pat: &USetPattern,
    assignments: &[PrimeAssignment],
) -> Vec<Vec<PrimeAssignment>> {
    let syms = pat.symmetries();
    let mut classes: BTreeMap<PrimeAssignment, BTreeSet<PrimeAssignment>> = BTreeMap::new();
    for a in assignments {
        let rep = syms.iter().map(|&s| a.renamed(s)).min().unwrap();
        classes.entry(rep).or_default().insert(a.clone());
    }
    classes
        .into_values()
        .map(|c| c.into_iter().collect())
        .collect()
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// Every assignment of primes `≤ bound` to the pattern's symbols whose
/// instantiation consists of distinct values forming exactly `target`.
/// Assignments come out in lexicographic order of `(p, q, r)`; symbols may
/// share a value.
pub fn match_pattern(
    pat: &USetPattern,
    target: &BTreeSet<u64>,
    bound: u64,
) -> Vec<PrimeAssignment> {
    if pat.terms.len() != target.len() {
        return Vec::new();
    }
    let symbols = pat.symbols();
    let primes = primes_up_to(bound);
    let mut out = Vec::new();
    let mut current = PrimeAssignment::new();
    search(pat, target, &symbols, &primes, &mut current, &mut out);
    out
}

fn search(
    pat: &USetPattern,
    target: &BTreeSet<u64>,
    symbols: &[char],
    primes: &[u64],
    current: &mut PrimeAssignment,
    out: &mut Vec<PrimeAssignment>,
) {
    // Prune on terms whose symbols are all assigned already.
    for t in &pat.terms {
        if t.symbols().all(|c| current.get(c).is_some()) {
            match t.eval(current) {
                Ok(Some(v)) if target.contains(&v) => {}
                _ => return,
            }
        }
    }
    let Some((&symbol, rest)) = symbols.split_first() else {
        if let Ok(inst) = instantiate_pattern(pat, current) {
            if inst.is_distinct() && inst.value_set() == *target {
                out.push(current.clone());
            }
        }
        return;
    };
    for &p in primes {
        current.0.insert(symbol, p);
        search(pat, target, rest, primes, current, out);
    }
    current.0.remove(&symbol);
}

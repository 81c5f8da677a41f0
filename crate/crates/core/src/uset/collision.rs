//! Enumeration of class-size assignments in which two u-values would share a
//! class size.
//!
//! Each slot pairs a u-term with the class sizes it admits. When two slots
//! receive the same size, their u-terms count the same elements and must be
//! equal; the equation is normalized by cancelling common factors and then
//! solved under the assumption that the symbols are distinct odd primes.

use std::fmt;

use serde::Serialize;

use super::arith::{gcd, OrderFactorization};
use super::pattern::Term;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub label: String,
    pub u_term: Term,
    pub options: Vec<Term>,
}

impl Slot {
    /// A slot whose options must each divide the u-term.
    pub fn new(label: &str, u_term: &str, options: &[&str]) -> Result<Self> {
        let u_term: Term = u_term.parse()?;
        let options = options
            .iter()
            .map(|o| o.parse())
            .collect::<Result<Vec<Term>>>()?;
        if let Some(bad) = options.iter().find(|o| !o.divides(&u_term)) {
            return Err(Error::InvalidParameters(format!(
                "{label}: size {bad} does not divide {u_term}"
            )));
        }
        if options.is_empty() {
            return Err(Error::InvalidParameters(format!("{label}: no options")));
        }
        Ok(Self {
            label: label.to_string(),
            u_term,
            options,
        })
    }
}

/// `lhs = rhs` between two monomials, with common factors cancelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn normalized(lhs: Term, rhs: Term) -> Self {
        let g = gcd(lhs.coeff, rhs.coeff);
        let mut l = Term::constant(lhs.coeff / g);
        let mut r = Term::constant(rhs.coeff / g);
        for i in 0..3 {
            let common = lhs.exps[i].min(rhs.exps[i]);
            l.exps[i] = lhs.exps[i] - common;
            r.exps[i] = rhs.exps[i] - common;
        }
        Self { lhs: l, rhs: r }
    }

    /// Solves the equation with every symbol a distinct odd prime.
    pub fn resolve(&self) -> Resolution {
        let (l, r) = (self.lhs, self.rhs);
        match (l.is_constant(), r.is_constant()) {
            (true, true) if l.coeff == r.coeff => Resolution::Identity,
            (true, true) => Resolution::Contradiction(format!("{} ≠ {}", l.coeff, r.coeff)),
            (false, true) => solve_monomial(&l, r.coeff),
            (true, false) => solve_monomial(&r, l.coeff),
            (false, false) => Resolution::Open,
        }
    }
}

/// `m = c` with `m = k·(monomial)`: the monomial must equal `c/k`, which
/// must be a product of distinct odd primes with the monomial's exponents.
fn solve_monomial(m: &Term, c: u64) -> Resolution {
    if !c.is_multiple_of(m.coeff) {
        return Resolution::Contradiction(format!("{} does not divide {c}", m.coeff));
    }
    let value = c / m.coeff;
    let monomial = Term {
        coeff: 1,
        exps: m.exps,
    };
    let f = OrderFactorization::of(value);
    if value == 1 {
        return Resolution::Contradiction(format!("{monomial} cannot be 1"));
    }
    if f.exponent(2) > 0 {
        return Resolution::Contradiction(format!("{value} is even"));
    }
    let mut want: Vec<u32> = m.exps.iter().copied().filter(|&e| e > 0).collect();
    let mut have: Vec<u32> = f.0.values().copied().collect();
    want.sort_unstable();
    have.sort_unstable();
    if want != have {
        return Resolution::Contradiction(format!("{value} is not of the form {monomial}"));
    }
    Resolution::Open
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "snake_case")]
pub enum Resolution {
    /// The two sides are the same term.
    Identity,
    Contradiction(String),
    /// No contradiction follows from this equation alone.
    Open,
}

impl Resolution {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, Resolution::Contradiction(_))
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clash {
    /// Slot indices, `first < second`.
    pub first: usize,
    pub second: usize,
    pub size: Term,
    /// u-term of `second` equated with u-term of `first`.
    pub equation: Equation,
    pub resolution: Resolution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    /// One size per slot.
    pub sizes: Vec<Term>,
    pub clashes: Vec<Clash>,
}

impl Collision {
    pub fn is_contradicted(&self) -> bool {
        self.clashes.iter().any(|c| c.resolution.is_contradiction())
    }
}

/// All assignments of sizes to slots in which some two slots share a size.
/// The first slot varies slowest.
pub fn enumerate_collision_assignments(slots: &[Slot]) -> Vec<Collision> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(slots.len());
    walk(slots, &mut current, &mut out);
    out
}

fn walk(slots: &[Slot], current: &mut Vec<Term>, out: &mut Vec<Collision>) {
    let depth = current.len();
    if depth == slots.len() {
        let mut clashes = Vec::new();
        for i in 0..depth {
            for j in i + 1..depth {
                if current[i] == current[j] {
                    let equation = Equation::normalized(slots[j].u_term, slots[i].u_term);
                    clashes.push(Clash {
                        first: i,
                        second: j,
                        size: current[i],
                        equation,
                        resolution: equation.resolve(),
                    });
                }
            }
        }
        if !clashes.is_empty() {
            out.push(Collision {
                sizes: current.clone(),
                clashes,
            });
        }
        return;
    }
    for &o in &slots[depth].options {
        current.push(o);
        walk(slots, current, out);
        current.pop();
    }
}

/// The slots for the candidate set `{1, rq, 16q, 4qr, 16r}`: the class of
/// size `rq` is forced, the others range over the divisors that are not
/// prime powers.
pub fn standard_slots() -> Vec<Slot> {
    vec![
        Slot::new("n2", "rq", &["rq"]).unwrap(),
        Slot::new("n3", "16q", &["2q", "4q", "8q", "16q"]).unwrap(),
        Slot::new("n4", "16r", &["2r", "4r", "8r", "16r"]).unwrap(),
        Slot::new("n5", "4rq", &["2r", "4r", "2q", "4q", "2rq", "4rq", "rq"]).unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    #[test]
    fn normalization() {
        let e = Equation::normalized(t("4rq"), t("16r"));
        assert_eq!(e.to_string(), "q = 4");
        assert!(e.resolve().is_contradiction());
        let e = Equation::normalized(t("4rq"), t("rq"));
        assert_eq!(e.to_string(), "4 = 1");
        assert_eq!(e.resolve(), Resolution::Contradiction("4 ≠ 1".into()));
        assert_eq!(
            Equation::normalized(t("3q"), t("15")).resolve(),
            Resolution::Open
        );
        assert_eq!(
            Equation::normalized(t("q"), t("r")).resolve(),
            Resolution::Open
        );
        assert_eq!(
            Equation::normalized(t("2q"), t("2q")).resolve(),
            Resolution::Identity
        );
        assert!(Equation::normalized(t("q^2"), t("15"))
            .resolve()
            .is_contradiction());
        assert_eq!(
            Equation::normalized(t("q^2"), t("9")).resolve(),
            Resolution::Open
        );
    }

    #[test]
    fn slot_options_must_divide() {
        assert!(Slot::new("x", "16q", &["32q"]).is_err());
    }

    #[test]
    fn standard_enumeration() {
        let c = enumerate_collision_assignments(&standard_slots());
        assert_eq!(c.len(), 32);
        assert!(c.iter().all(Collision::is_contradicted));
        let first = &c[0];
        assert_eq!(
            first.sizes.iter().map(Term::to_string).collect::<Vec<_>>(),
            ["qr", "2q", "2r", "2r"]
        );
        assert_eq!(first.clashes[0].equation.to_string(), "q = 4");
    }
}

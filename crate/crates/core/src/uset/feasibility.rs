//! Necessary conditions for a multiset of u-values to come from a nonabelian
//! simple group. A `Possible` verdict never claims such a group exists.

use std::fmt;

use serde::Serialize;

use super::arith::{divisors, is_prime_power};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReasonCode {
    MissingIdentity,
    Burnside,
    OddSum,
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReasonCode::MissingIdentity => "missing_identity",
            ReasonCode::Burnside => "burnside",
            ReasonCode::OddSum => "odd_sum",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code", rename_all = "snake_case")]
pub enum Reason {
    /// 1 is not among the values, so the center would be nontrivial.
    MissingIdentity,
    /// `u > 1` has no divisor `n > 1` that is not a prime power, so no class
    /// size is available for it.
    Burnside { u: u64 },
    /// The values sum to an odd group order.
    OddSum { sum: u64 },
}

impl Reason {
    pub fn code(&self) -> ReasonCode {
        match self {
            Reason::MissingIdentity => ReasonCode::MissingIdentity,
            Reason::Burnside { .. } => ReasonCode::Burnside,
            Reason::OddSum { .. } => ReasonCode::OddSum,
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::MissingIdentity => write!(f, "1 is missing"),
            Reason::Burnside { u } => {
                write!(f, "{u} has only prime-power divisors above 1")
            }
            Reason::OddSum { sum } => write!(f, "sum {sum} is odd"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reasons", rename_all = "snake_case")]
pub enum Verdict {
    Possible,
    Infeasible(Vec<Reason>),
}

impl Verdict {
    pub fn is_possible(&self) -> bool {
        matches!(self, Verdict::Possible)
    }

    pub fn reason_codes(&self) -> Vec<ReasonCode> {
        match self {
            Verdict::Possible => Vec::new(),
            Verdict::Infeasible(r) => {
                let mut codes: Vec<ReasonCode> = r.iter().map(Reason::code).collect();
                codes.dedup();
                codes
            }
        }
    }
}

/// Whether `u` has a divisor `n > 1` that is not a prime power.
pub fn admits_class_size(u: u64) -> bool {
    divisors(u).into_iter().any(|n| n > 1 && !is_prime_power(n))
}

/// Checks `u_values` (a multiset) against the identity, Burnside and parity
/// conditions. Reasons are listed in that order, Burnside ones by ascending
/// value.
pub fn feasibility_check(u_values: &[u64]) -> Result<Verdict> {
    if u_values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut reasons = Vec::new();
    if !u_values.contains(&1) {
        reasons.push(Reason::MissingIdentity);
    }
    let mut sorted = u_values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &u in &sorted {
        if u > 1 && !admits_class_size(u) {
            reasons.push(Reason::Burnside { u });
        }
    }
    let sum = u_values
        .iter()
        .try_fold(0u64, |acc, &u| acc.checked_add(u))
        .ok_or_else(|| Error::InvalidParameters("sum of u-values overflows".into()))?;
    if sum % 2 == 1 {
        reasons.push(Reason::OddSum { sum });
    }
    Ok(if reasons.is_empty() {
        Verdict::Possible
    } else {
        Verdict::Infeasible(reasons)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_square_is_burnside() {
        let v = feasibility_check(&[1, 9, 36, 72]).unwrap();
        assert_eq!(v, Verdict::Infeasible(vec![Reason::Burnside { u: 9 }]));
    }

    #[test]
    fn odd_sum() {
        let v = feasibility_check(&[1, 6, 24, 48]).unwrap();
        assert_eq!(v, Verdict::Infeasible(vec![Reason::OddSum { sum: 79 }]));
    }

    #[test]
    fn realized_sets_pass() {
        assert!(feasibility_check(&[1, 55, 120, 220, 264])
            .unwrap()
            .is_possible());
        assert!(feasibility_check(&[1, 15, 20, 24]).unwrap().is_possible());
    }

    #[test]
    fn missing_identity_and_empty() {
        assert_eq!(
            feasibility_check(&[6, 24]).unwrap().reason_codes(),
            vec![ReasonCode::MissingIdentity]
        );
        assert!(matches!(feasibility_check(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn non_simple_group_with_prime_power_class() {
        // S3: class sizes 1, 3, 2 give u-values 1, 3, 2.
        let v = feasibility_check(&[1, 3, 2]).unwrap();
        assert_eq!(v.reason_codes(), vec![ReasonCode::Burnside]);
    }
}

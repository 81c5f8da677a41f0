//! Symbolic analysis of candidate U-sets.

pub mod arith;
pub mod collision;
pub mod feasibility;
pub mod pattern;

pub use arith::{classify_k, is_prime, is_prime_power, OrderFactorization};
pub use collision::{enumerate_collision_assignments, standard_slots, Collision, Equation, Slot};
pub use feasibility::{feasibility_check, Reason, ReasonCode, Verdict};
pub use pattern::{
    instantiate_pattern, match_pattern, Instantiation, PrimeAssignment, Term, USetPattern,
};

/// `l(l² − 1)/2` for `l ≥ 2`, or `None` on overflow.
pub fn psl2_order_value(l: u64) -> Option<u64> {
    l.checked_mul(l)?
        .checked_sub(1)?
        .checked_mul(l)
        .map(|v| v / 2)
}

/// The integer `l ≥ 2` with `l(l² − 1)/2 = n`, if there is one. The left side
/// is strictly increasing in `l`, so a binary search finds it.
pub fn solve_psl2_order(n: u64) -> Option<u64> {
    let (mut lo, mut hi) = (2u64, 2u64);
    while psl2_order_value(hi).is_some_and(|v| v < n) {
        hi *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match psl2_order_value(mid) {
            Some(v) if v < n => lo = mid + 1,
            _ => hi = mid,
        }
    }
    (psl2_order_value(lo) == Some(n)).then_some(lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psl2_equation() {
        assert_eq!(solve_psl2_order(660), Some(11));
        assert_eq!(solve_psl2_order(60), Some(5));
        assert_eq!(solve_psl2_order(661), None);
        assert_eq!(solve_psl2_order(3), Some(2));
        assert_eq!(solve_psl2_order(1), None);
        assert_eq!(solve_psl2_order(u64::MAX), None);
    }
}

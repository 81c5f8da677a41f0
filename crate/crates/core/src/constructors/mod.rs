//! Permutation representations of alternating, symmetric and projective
//! special linear groups, and closed-form group orders.

mod matrix;
mod order;
mod projective;

pub use matrix::Matrix;
pub use order::{classical_order, GroupFamily};
pub use projective::{
    linear_action, nonzero_vectors, projective_permutation, projective_points, projectivize,
    ProjectivePoint,
};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::perm::{PermGroup, Permutation};

/// A_n on `n` points, generated by `(0 1 2)` and the long cycle
/// `(0 1 … n−1)` for odd `n` or `(1 2 … n−1)` for even `n`.
pub fn alternating_group(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "alternating group needs n >= 3, got {n}"
        )));
    }
    let three = Permutation::from_cycles(n, &[&[0, 1, 2]])?;
    let long: Vec<usize> = if n % 2 == 1 {
        (0..n).collect()
    } else {
        (1..n).collect()
    };
    let long = Permutation::from_cycles(n, &[&long])?;
    PermGroup::new(n, vec![three, long])
}

/// S_n on `n` points, generated by `(0 1)` and `(0 1 … n−1)`.
pub fn symmetric_group(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(Error::InvalidParameters(
            "symmetric group needs n >= 1".into(),
        )),
        1 => Ok(PermGroup::trivial(1)),
        _ => {
            let t = Permutation::from_cycles(n, &[&[0, 1]])?;
            let c = Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])?;
            PermGroup::new(n, vec![t, c])
        }
    }
}

/// The transvections `E_ij(θ^m)` for all `i ≠ j` and `m = 0..k`, where θ is
/// the primitive element of GF(p^k). The powers θ^0, …, θ^{k−1} span the
/// field additively, so these generate SL(n, p^k).
pub fn sl_generators(n: usize, spec: &Arc<FieldSpec>) -> Result<Vec<Matrix>> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "SL needs dimension >= 2, got {n}"
        )));
    }
    let theta = spec.primitive_element();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for m in 0..spec.degree() {
                out.push(Matrix::transvection(n, i, j, &theta.pow(m as u64)));
            }
        }
    }
    Ok(out)
}

/// PSL(n, q) acting on the points of PG(n−1, q).
pub fn psl_group(n: usize, q: u64) -> Result<PermGroup> {
    let spec = FieldSpec::with_order(q)?;
    projectivize(&sl_generators(n, &spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn alternating_orders() {
        assert_eq!(alternating_group(3).unwrap().order(), 3);
        assert_eq!(alternating_group(4).unwrap().order(), 12);
        assert_eq!(alternating_group(5).unwrap().order(), 60);
        assert_eq!(alternating_group(6).unwrap().order(), 360);
        assert_eq!(alternating_group(7).unwrap().order(), 2520);
        assert!(alternating_group(2).is_err());
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(symmetric_group(1).unwrap().order(), 1);
        assert_eq!(symmetric_group(2).unwrap().order(), 2);
        assert_eq!(symmetric_group(3).unwrap().order(), 6);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
    }

    /// Closure of a matrix set under multiplication, by brute force.
    fn matrix_closure(gens: &[Matrix]) -> HashSet<Matrix> {
        let id = Matrix::identity(gens[0].dim(), gens[0].spec());
        let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(m) = frontier.pop() {
            for g in gens {
                let x = m.mul(g).unwrap();
                if seen.insert(x.clone()) {
                    frontier.push(x);
                }
            }
        }
        seen
    }

    #[test]
    fn sl22_by_brute_force() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let gens = sl_generators(2, &f2).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(matrix_closure(&gens).len(), 6);
    }

    #[test]
    fn sl_orders_via_linear_action() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let sl25 = sl_generators(2, &f5).unwrap();
        assert_eq!(matrix_closure(&sl25).len(), 120);
        assert_eq!(linear_action(&sl25).unwrap().order(), 120);

        // |SL(3,q)| = q^3·(q^2−1)(q^3−1) = 27·8·26 at q = 3. 11232 would be
        // |GL(3,3)| = 26·24·18.
        let f3 = FieldSpec::new(3, 1).unwrap();
        let sl33 = linear_action(&sl_generators(3, &f3).unwrap()).unwrap();
        assert_eq!(sl33.order(), 27 * 8 * 26);
    }

    #[test]
    fn psl_orders_match_formula() {
        for (n, q) in [
            (2, 4),
            (2, 5),
            (2, 7),
            (2, 8),
            (2, 9),
            (2, 11),
            (2, 16),
            (3, 3),
            (3, 4),
        ] {
            let g = psl_group(n, q).unwrap();
            assert_eq!(g.degree() as u64, (q.pow(n as u32) - 1) / (q - 1));
            let expected = classical_order(GroupFamily::Psl { n: n as u32, q }).unwrap();
            assert_eq!(g.order(), expected, "PSL({n},{q})");
        }
    }

    #[test]
    fn projectivize_is_a_homomorphism() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let gens = sl_generators(2, &f9).unwrap();
        let points = projective_points(2, &f9);
        let index = points
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        // Deterministic pseudo-random words in the generators.
        let mut state = 0x9e37_79b9_u64;
        let mut word = || {
            let mut m = Matrix::identity(2, &f9);
            for _ in 0..6 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                m = m.mul(&gens[(state >> 33) as usize % gens.len()]).unwrap();
            }
            m
        };
        for _ in 0..100 {
            let a = word();
            let b = word();
            let pa = projective_permutation(&a, &points, &index);
            let pb = projective_permutation(&b, &points, &index);
            let pab = projective_permutation(&a.mul(&b).unwrap(), &points, &index);
            assert_eq!(pab, pa.then(&pb));
        }
    }
}

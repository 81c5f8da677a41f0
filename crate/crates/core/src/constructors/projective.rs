use std::collections::HashMap;
use std::sync::Arc;

use super::Matrix;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::perm::{PermGroup, Permutation};

/// A point of projective space: a nonzero vector scaled so that its first
/// nonzero coordinate is 1. Coordinates are field element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<u64>,
}

impl ProjectivePoint {
    /// Normal form of the line through `v`; `None` for the zero vector.
    pub fn normalize(spec: &FieldSpec, v: &[u64]) -> Option<Self> {
        let lead = *v.iter().find(|&&x| x != 0)?;
        let inv = spec.inv_idx(lead).ok()?;
        Some(Self {
            coords: v.iter().map(|&x| spec.mul_idx(x, inv)).collect(),
        })
    }

    pub fn from_elements(v: &[FieldElement]) -> Option<Self> {
        let spec = v.first()?.spec();
        let idx: Vec<u64> = v.iter().map(FieldElement::index).collect();
        Self::normalize(spec, &idx)
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// All points of PG(n−1, q), sorted by coordinate indices. There are
/// `(q^n − 1)/(q − 1)` of them.
pub fn projective_points(n: usize, spec: &FieldSpec) -> Vec<ProjectivePoint> {
    let q = spec.size();
    let mut pts = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for idx in 0..q.pow(free as u32) {
            let mut coords = vec![0; n];
            coords[lead] = 1;
            let mut rest = idx;
            for c in coords[lead + 1..].iter_mut().rev() {
                *c = rest % q;
                rest /= q;
            }
            pts.push(ProjectivePoint { coords });
        }
    }
    pts.sort();
    pts
}

/// All nonzero vectors of GF(q)^n, sorted by coordinate indices.
pub fn nonzero_vectors(n: usize, spec: &FieldSpec) -> Vec<Vec<u64>> {
    let q = spec.size();
    (1..q.pow(n as u32))
        .map(|mut idx| {
            let mut v = vec![0; n];
            for c in v.iter_mut().rev() {
                *c = idx % q;
                idx /= q;
            }
            v
        })
        .collect()
}

fn check_matrices(mats: &[Matrix]) -> Result<(usize, Arc<FieldSpec>)> {
    let first = mats
        .first()
        .ok_or_else(|| Error::InvalidParameters("no matrices".into()))?;
    let (n, spec) = (first.dim(), Arc::clone(first.spec()));
    for m in mats {
        if m.dim() != n {
            return Err(Error::InvalidParameters(
                "matrices differ in dimension".into(),
            ));
        }
        if **m.spec() != *spec {
            return Err(Error::FieldMismatch);
        }
        if !m.is_invertible() {
            return Err(Error::SingularMatrix);
        }
    }
    Ok((n, spec))
}

/// Permutation a matrix induces on `points` (row vectors, `v ↦ v·M`).
pub fn projective_permutation(
    m: &Matrix,
    points: &[ProjectivePoint],
    index: &HashMap<ProjectivePoint, usize>,
) -> Permutation {
    let images = points
        .iter()
        .map(|pt| {
            let image = ProjectivePoint::normalize(m.spec(), &m.apply_row(&pt.coords))
                .expect("invertible matrices map nonzero vectors to nonzero vectors");
            index[&image]
        })
        .collect();
    Permutation::new(images).expect("an invertible matrix permutes projective points")
}

/// The permutation group induced by `mats` on the points of projective
/// space, in the order of [`projective_points`]. Scalar matrices act
/// trivially, so the image of SL(n,q) is PSL(n,q).
pub fn projectivize(mats: &[Matrix]) -> Result<PermGroup> {
    let (n, spec) = check_matrices(mats)?;
    let points = projective_points(n, &spec);
    let index: HashMap<ProjectivePoint, usize> = points
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let gens = mats
        .iter()
        .map(|m| projective_permutation(m, &points, &index))
        .collect();
    PermGroup::new(points.len(), gens)
}

/// The faithful action of `mats` on the nonzero vectors of GF(q)^n; its order
/// is the order of the matrix group itself.
pub fn linear_action(mats: &[Matrix]) -> Result<PermGroup> {
    let (n, spec) = check_matrices(mats)?;
    let vectors = nonzero_vectors(n, &spec);
    let index: HashMap<&[u64], usize> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    let gens = mats
        .iter()
        .map(|m| {
            let images = vectors
                .iter()
                .map(|v| index[m.apply_row(v).as_slice()])
                .collect();
            Permutation::new(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(vectors.len(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        let f11 = FieldSpec::new(11, 1).unwrap();
        assert_eq!(projective_points(2, &f11).len(), 12);
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(projective_points(3, &f3).len(), 13);
        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(projective_points(3, &f4).len(), 21);
    }

    #[test]
    fn normal_forms_are_canonical() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let a = ProjectivePoint::normalize(&f5, &[0, 2, 4]).unwrap();
        let b = ProjectivePoint::normalize(&f5, &[0, 3, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coords(), &[0, 1, 2]);
        assert!(ProjectivePoint::normalize(&f5, &[0, 0, 0]).is_none());
    }

    #[test]
    fn scalars_act_trivially() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        let g = projectivize(&[Matrix::scalar(2, &f7.element(3))]).unwrap();
        assert!(g.generators()[0].is_identity());
        assert_eq!(g.degree(), 8);
    }

    #[test]
    fn singular_input_is_rejected() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let s = Matrix::from_indices(2, &f5, vec![1, 2, 2, 4]).unwrap();
        assert!(matches!(projectivize(&[s]), Err(Error::SingularMatrix)));
    }
}

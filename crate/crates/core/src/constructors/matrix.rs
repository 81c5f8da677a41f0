use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// A square matrix over a finite field, row-major, entries stored as field
/// element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    spec: Arc<FieldSpec>,
    entries: Vec<u64>,
}

impl Matrix {
    pub fn identity(n: usize, spec: &Arc<FieldSpec>) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self {
            n,
            spec: Arc::clone(spec),
            entries,
        }
    }

    /// `a·I`.
    pub fn scalar(n: usize, a: &FieldElement) -> Self {
        let mut m = Self::identity(n, a.spec());
        for i in 0..n {
            m.entries[i * n + i] = a.index();
        }
        m
    }

    /// Builds a matrix from rows of field elements.
    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let n = rows.len();
        let spec = rows
            .first()
            .and_then(|r| r.first())
            .map(|e| Arc::clone(e.spec()))
            .ok_or_else(|| Error::InvalidParameters("empty matrix".into()))?;
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidParameters("matrix is not square".into()));
            }
            for e in row {
                if **e.spec() != *spec {
                    return Err(Error::FieldMismatch);
                }
                entries.push(e.index());
            }
        }
        Ok(Self { n, spec, entries })
    }

    /// Matrix from element indices, row-major.
    pub fn from_indices(n: usize, spec: &Arc<FieldSpec>, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidParameters(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= spec.size()) {
            return Err(Error::InvalidParameters(format!(
                "entry index {bad} outside GF({})",
                spec.size()
            )));
        }
        Ok(Self {
            n,
            spec: Arc::clone(spec),
            entries,
        })
    }

    /// The elementary transvection `I + a·e_ij`, `i ≠ j`.
    pub fn transvection(n: usize, i: usize, j: usize, a: &FieldElement) -> Self {
        assert!(i != j && i < n && j < n, "bad transvection indices");
        let mut m = Self::identity(n, a.spec());
        m.entries[i * n + j] = a.index();
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.spec.element(self.entries[i * self.n + j])
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::InvalidParameters(format!(
                "dimension mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let n = self.n;
        let f = &self.spec;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for l in 0..n {
                    acc = f.add_idx(
                        acc,
                        f.mul_idx(self.entries[i * n + l], other.entries[l * n + j]),
                    );
                }
                entries[i * n + j] = acc;
            }
        }
        Ok(Matrix {
            n,
            spec: Arc::clone(f),
            entries,
        })
    }

    /// Row vector times matrix, on element indices.
    pub(crate) fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        let n = self.n;
        let f = &self.spec;
        (0..n)
            .map(|j| {
                (0..n).fold(0, |acc, i| {
                    f.add_idx(acc, f.mul_idx(v[i], self.entries[i * n + j]))
                })
            })
            .collect()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> FieldElement {
        let n = self.n;
        let f = &self.spec;
        let mut a = self.entries.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return f.zero();
            };
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                }
                det = f.neg_idx(det);
            }
            let pv = a[col * n + col];
            det = f.mul_idx(det, pv);
            let pinv = f.inv_idx(pv).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = f.mul_idx(a[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let t = f.mul_idx(factor, a[col * n + c]);
                    a[r * n + c] = f.sub_idx(a[r * n + c], t);
                }
            }
        }
        f.element(det)
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        write!(f, "Matrix{rows:?}")
    }
}

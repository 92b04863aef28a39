use alloc::vec::Vec;

use super::spec::{RingElement, RingSpec};
use crate::{Error, Result};

/// Dense `d x d` matrix of ring elements, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    d: usize,
    entries: Vec<RingElement>,
}

impl Matrix {
    pub fn from_entries(spec: &RingSpec, d: usize, entries: Vec<RingElement>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("matrix dimension must be at least 1"));
        }
        if entries.len() != d * d {
            return Err(Error::Shape {
                what: "matrix entries",
                expected: d * d,
                got: entries.len(),
            });
        }
        for e in &entries {
            spec.element(e.coeffs().to_vec())?;
        }
        Ok(Matrix { d, entries })
    }

    /// Builds from rows of coefficient vectors.
    pub fn from_coeff_rows(spec: &RingSpec, rows: &[&[&[u64]]]) -> Result<Self> {
        let d = rows.len();
        let mut entries = Vec::with_capacity(d * d);
        for row in rows {
            if row.len() != d {
                return Err(Error::Shape {
                    what: "matrix row",
                    expected: d,
                    got: row.len(),
                });
            }
            for c in row.iter() {
                entries.push(spec.element(c.to_vec())?);
            }
        }
        Matrix::from_entries(spec, d, entries)
    }

    pub fn zero(spec: &RingSpec, d: usize) -> Self {
        Matrix {
            d,
            entries: (0..d * d).map(|_| spec.zero()).collect(),
        }
    }

    /// `diag(e, ..., e)`.
    pub fn scalar(spec: &RingSpec, d: usize, e: &RingElement) -> Self {
        let mut m = Matrix::zero(spec, d);
        for i in 0..d {
            m.entries[i * d + i] = e.clone();
        }
        m
    }

    pub(crate) fn from_raw(d: usize, entries: Vec<RingElement>) -> Self {
        Matrix { d, entries }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.d + j]
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn is_zero(&self, spec: &RingSpec) -> bool {
        self.entries.iter().all(|e| spec.is_zero(e))
    }
}

impl RingSpec {
    fn same_dim(a: &Matrix, b: &Matrix) -> Result<()> {
        if a.d != b.d {
            return Err(Error::DimensionMismatch {
                left: a.d,
                right: b.d,
            });
        }
        Ok(())
    }

    pub fn mat_add(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        Self::same_dim(a, b)?;
        Ok(Matrix {
            d: a.d,
            entries: a
                .entries
                .iter()
                .zip(&b.entries)
                .map(|(x, y)| self.add_unchecked(x, y))
                .collect(),
        })
    }

    /// Entry `(i, j)` is `sum_t A_{it} B_{tj}`; order of factors matters.
    pub fn mat_mul(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        Self::same_dim(a, b)?;
        Ok(self.mat_mul_unchecked(a, b))
    }

    pub(crate) fn mat_mul_unchecked(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let d = a.d;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = self.zero();
                for t in 0..d {
                    let p = self.mul_unchecked(&a.entries[i * d + t], &b.entries[t * d + j]);
                    self.add_assign_unchecked(&mut acc, &p);
                }
                entries.push(acc);
            }
        }
        Matrix { d, entries }
    }

    /// `A^k` by repeated multiplication, `k >= 1`.
    pub fn mat_pow(&self, a: &Matrix, k: u32) -> Result<Matrix> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.mat_mul_unchecked(&acc, a);
        }
        Ok(acc)
    }

    /// Integer multiple of every entry.
    pub fn mat_scalar_mul(&self, a: &Matrix, n: u128) -> Matrix {
        Matrix {
            d: a.d,
            entries: a.entries.iter().map(|e| self.scalar_mul(e, n)).collect(),
        }
    }
}

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::matrix::Matrix;
use super::spec::{RingElement, RingSpec};
use crate::arith::checked_pow;
use crate::{Error, Result};

/// Default cap on the work of a single enumeration.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Cap on the number of operations a single enumeration may perform.
///
/// Plain enumerations count yielded items; the oracles count ring
/// multiplications. Exceeding the cap is an error, never a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(u64);

impl Budget {
    pub const fn new(limit: u64) -> Self {
        Budget(limit)
    }

    pub const fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub fn limit(self) -> u64 {
        self.0
    }

    /// `required = None` means the count overflowed `u128`.
    pub fn check(self, required: Option<u128>) -> Result<()> {
        match required {
            Some(n) if n <= self.0 as u128 => Ok(()),
            Some(n) => Err(Error::BudgetExceeded {
                required: n,
                budget: self.0,
            }),
            None => Err(Error::BudgetExceeded {
                required: u128::MAX,
                budget: self.0,
            }),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

/// `card(R)^(d^2)`, or `None` on overflow.
pub fn matrix_count(spec: &RingSpec, d: usize) -> Option<u128> {
    checked_pow(spec.card(), (d * d) as u32)
}

/// Splits `0..total` into at most `parts` contiguous, non-empty ranges.
pub fn split_range(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let base = total / parts;
    let extra = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = 0;
    for i in 0..parts {
        let len = base + u64::from(i < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}

/// Every element once, in odometer order (last coordinate fastest).
#[derive(Clone, Debug)]
pub struct Elements<'a> {
    spec: &'a RingSpec,
    range: Range<u64>,
}

impl Iterator for Elements<'_> {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        self.range.next().map(|i| self.spec.element_at(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.range.size_hint()
    }
}

pub fn enumerate_elements(spec: &RingSpec, budget: Budget) -> Result<Elements<'_>> {
    budget.check(Some(spec.card()))?;
    Ok(Elements {
        spec,
        range: 0..spec.card() as u64,
    })
}

/// Matrices in odometer order over row-major entries, entry `(0,0)` most
/// significant, and within an entry coordinate 0 most significant.
///
/// A contiguous index range corresponds to fixing a prefix of coordinates,
/// so ranges from [`split_range`] partition the stream.
#[derive(Clone, Debug)]
pub struct Matrices<'a> {
    spec: &'a RingSpec,
    d: usize,
    digits: Vec<u64>,
    card: u64,
    remaining: u64,
}

impl<'a> Matrices<'a> {
    /// Matrices with indices in `range`; the range must lie inside
    /// `0..card^(d^2)`.
    pub fn range(spec: &'a RingSpec, d: usize, range: Range<u64>) -> Result<Self> {
        let total = matrix_count(spec, d).ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget: u64::MAX,
        })?;
        if range.end as u128 > total || range.start > range.end {
            return Err(Error::InvalidParameter("matrix index range out of bounds"));
        }
        let card = spec.card() as u64;
        let mut digits = vec![0; d * d];
        let mut idx = range.start;
        for slot in digits.iter_mut().rev() {
            *slot = idx % card;
            idx /= card;
        }
        Ok(Matrices {
            spec,
            d,
            digits,
            card,
            remaining: range.end - range.start,
        })
    }
}

impl Iterator for Matrices<'_> {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let m = Matrix::from_raw(
            self.d,
            self.digits.iter().map(|&i| self.spec.element_at(i)).collect(),
        );
        for slot in self.digits.iter_mut().rev() {
            *slot += 1;
            if *slot < self.card {
                break;
            }
            *slot = 0;
        }
        Some(m)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

pub fn enumerate_matrices(spec: &RingSpec, d: usize, budget: Budget) -> Result<Matrices<'_>> {
    if d == 0 {
        return Err(Error::InvalidParameter("matrix dimension must be at least 1"));
    }
    let total = matrix_count(spec, d);
    budget.check(total)?;
    Matrices::range(spec, d, 0..total.unwrap_or(0) as u64)
}

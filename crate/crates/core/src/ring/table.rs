use alloc::vec::Vec;

use super::spec::{RingElement, RingSpec};
use crate::{Error, Result};

/// Largest cardinality for which [`CayleyTable`] is built.
pub const TABLE_LIMIT: u64 = 2048;

/// Addition and multiplication tables over element indices.
///
/// Both tables are filled from the structure-constant arithmetic of the spec,
/// so table lookups agree with `RingSpec::add` / `RingSpec::mul` by
/// construction. Indices are the odometer positions of `RingSpec::index_of`.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    card: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    elements: Vec<RingElement>,
}

impl CayleyTable {
    pub fn new(spec: &RingSpec) -> Result<Self> {
        let card = spec.card();
        if card > TABLE_LIMIT as u128 {
            return Err(Error::TableTooLarge {
                card,
                limit: TABLE_LIMIT,
            });
        }
        let card = card as usize;
        let elements: Vec<RingElement> = (0..card as u64).map(|i| spec.element_at(i)).collect();
        let mut add = Vec::with_capacity(card * card);
        let mut mul = Vec::with_capacity(card * card);
        for a in &elements {
            for b in &elements {
                add.push(spec.index_of(&spec.add_unchecked(a, b)) as u32);
                mul.push(spec.index_of(&spec.mul_unchecked(a, b)) as u32);
            }
        }
        Ok(CayleyTable {
            card,
            add,
            mul,
            elements,
        })
    }

    pub fn card(&self) -> usize {
        self.card
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.card + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.card + b as usize]
    }

    pub fn element(&self, index: u32) -> &RingElement {
        &self.elements[index as usize]
    }

    /// Row-major `d x d` product of index matrices into `out`.
    #[inline]
    pub fn mat_mul_into(&self, d: usize, a: &[u32], b: &[u32], out: &mut [u32]) {
        for i in 0..d {
            for j in 0..d {
                let mut acc = self.mul(a[i * d], b[j]);
                for t in 1..d {
                    acc = self.add(acc, self.mul(a[i * d + t], b[t * d + j]));
                }
                out[i * d + j] = acc;
            }
        }
    }
}

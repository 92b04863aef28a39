//! Finite rings given by structure constants, their elements and matrices,
//! and exhaustive enumeration.
//!
//! The presentation is additive generators `g_1..g_r` with orders `m_i` and
//! products `g_i g_j = sum_t c_{ijt} g_t`. Any finite ring, unital or not,
//! commutative or not, can be written this way, though the presentation is
//! not canonical: isomorphic rings may have different specs.

pub mod builtin;
mod enumerate;
mod matrix;
mod spec;
mod structure;
mod table;

pub use enumerate::{
    enumerate_elements, enumerate_matrices, matrix_count, split_range, Budget, Elements,
    Matrices, DEFAULT_BUDGET,
};
pub use matrix::Matrix;
pub use spec::{validate_spec, Law, RingElement, RingSpec, ValidationReport, Violation, MAX_ORDER};
pub use structure::{
    additive_order, characteristic, find_order2_element, find_unit, invariant_factors, is_field,
    isomorphic_zn, InvariantFactors, Order2,
};
pub use table::{CayleyTable, TABLE_LIMIT};

//! Verification sweeps.
//!
//! Every sweep walks an explicit finite grid, evaluates cells in parallel
//! and returns them in grid order. Oracle refusals (budget) become
//! `skipped` cells; malformed configurations are errors.

mod catalog;
mod congruence;
mod conjectures;
mod families;
mod lemma;

pub use catalog::{noncommutative_probe, ring_catalog_sweep, zero_guarantee_sweep, CatalogConfig};
pub use congruence::{
    check_lifting, check_monomial_lifting, check_reduction, lifting_sweep,
    monomial_lifting_sweep, reduction_sweep, CongruenceCheck, MonomialLift,
};
pub use conjectures::{conjecture1_sweep, conjecture2_sweep, Conjecture1Config};
pub use families::{a017593_sweep, verify_family_sweep, Family, FamilyConfig};
pub use lemma::{lemma_audit, AuditConfig};

use std::time::Instant;

use rayon::prelude::*;
use ringsum_core::ring::Matrix;
use serde_json::Value;

use crate::report::{Cell, Classification, SweepReport};
use crate::Result;

/// Evaluates `groups` in parallel and concatenates their cells in order.
fn run<T: Sync>(
    sweep: &'static str,
    groups: &[T],
    eval: impl Fn(&T) -> Result<Vec<Cell>> + Sync + Send,
) -> Result<SweepReport> {
    let start = Instant::now();
    let cells: Vec<Vec<Cell>> = groups.par_iter().map(eval).collect::<Result<_>>()?;
    Ok(SweepReport::new(
        sweep,
        cells.into_iter().flatten().collect(),
        start.elapsed(),
    ))
}

fn skipped(sweep: &'static str, params: Value, reason: &ringsum_core::Error) -> Cell {
    Cell::new(sweep, params, Classification::Skipped).note(reason.to_string())
}

/// Only budget refusals turn into skipped cells; anything else is an error.
fn refusal(e: ringsum_core::Error) -> Result<ringsum_core::Error> {
    match e {
        ringsum_core::Error::BudgetExceeded { .. } => Ok(e),
        other => Err(other.into()),
    }
}

/// Entries of a matrix over a single-generator ring.
fn ints(m: &Matrix) -> Vec<u64> {
    m.entries().iter().map(|e| e.coeffs()[0]).collect()
}

/// Classifies a disagreement with an unproved prediction after recomputing
/// the observed value on an independent slow path.
fn reverify<T: PartialEq + std::fmt::Debug>(
    observed: &T,
    slow: ringsum_core::Result<T>,
) -> (Classification, String) {
    match slow {
        Ok(s) if s == *observed => (
            Classification::Counterexample,
            "confirmed by the slow path".to_string(),
        ),
        Ok(s) => (
            Classification::ProvedMismatch,
            format!("oracle paths disagree; slow path gives {s:?}"),
        ),
        Err(e) => (
            Classification::Counterexample,
            format!("not re-verified: {e}"),
        ),
    }
}

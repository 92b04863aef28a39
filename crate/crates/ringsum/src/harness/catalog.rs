use ringsum_core::closed_form::{
    final_theorem_pattern, predict_ring_matrix_sum, zero_guarantee, Value as FormValue,
};
use ringsum_core::oracle::{matrix_power_sum_slow, PowerSumQuery};
use ringsum_core::ring::{invariant_factors, validate_spec, Budget, Matrix, RingSpec};
use serde_json::{json, Value};

use super::{refusal, reverify, run, skipped};
use crate::format;
use crate::parallel::power_sums;
use crate::report::{Cell, Classification, SweepReport};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogConfig {
    pub ds: Vec<usize>,
    pub k_max: u32,
}

impl Default for CatalogConfig {
    fn default() -> Self {
        CatalogConfig {
            ds: vec![2, 3],
            k_max: 8,
        }
    }
}

impl CatalogConfig {
    fn check(&self) -> Result<()> {
        if self.k_max == 0 || self.ds.is_empty() || self.ds.iter().any(|&d| d < 2) {
            return Err(Error::config("catalog sweeps need dimensions >= 2 and k_max >= 1"));
        }
        Ok(())
    }

    fn groups<'a>(&self, specs: impl IntoIterator<Item = &'a RingSpec>) -> Vec<(&'a RingSpec, usize)> {
        specs
            .into_iter()
            .flat_map(|s| self.ds.iter().map(move |&d| (s, d)))
            .collect()
    }
}

fn card(spec: &RingSpec) -> u64 {
    u64::try_from(spec.card()).unwrap_or(u64::MAX)
}

fn ring_params(spec: &RingSpec, d: usize, k: u32) -> Value {
    json!({"ring": spec.name(), "card": card(spec), "d": d, "k": k})
}

/// Prediction against oracle for one commutative cell.
fn predicted_cell(
    sweep: &'static str,
    spec: &RingSpec,
    d: usize,
    k: u32,
    obs: &Matrix,
    budget: Budget,
) -> Result<Cell> {
    let pred = predict_ring_matrix_sum(spec, d, k, budget)?;
    let matches = pred.value == FormValue::Matrix(obs.clone());
    let (class, note) = match (matches, pred.conjecture_dependent) {
        (true, false) => (Classification::ProvedMatch, None),
        (true, true) => (Classification::ConjectureMatch, None),
        (false, false) => (Classification::ProvedMismatch, None),
        (false, true) => {
            let slow = matrix_power_sum_slow(PowerSumQuery { spec, d, k }, budget);
            let (c, n) = reverify(obs, slow);
            (c, Some(n))
        }
    };
    let mut cell = Cell::new(sweep, ring_params(spec, d, k), class)
        .expected(format::form_value(&pred.value), pred.branch.as_str())
        .observed(format::matrix(obs))
        .info("conjecture_dependent", pred.conjecture_dependent)
        .info("nonzero", !obs.is_zero(spec));
    if let Some(n) = note {
        cell = cell.note(n);
    }
    Ok(cell)
}

/// Oracle sums for `k = 1..=k_max`, or skipped cells when over budget.
fn sums_or_skip(
    sweep: &'static str,
    spec: &RingSpec,
    d: usize,
    k_max: u32,
    budget: Budget,
) -> Result<std::result::Result<Vec<Matrix>, Vec<Cell>>> {
    match power_sums(spec, d, k_max, budget) {
        Ok(s) => Ok(Ok(s)),
        Err(e) => {
            let e = refusal(e)?;
            Ok(Err((1..=k_max)
                .map(|k| skipped(sweep, ring_params(spec, d, k), &e))
                .collect()))
        }
    }
}

const CATALOG: &str = "catalog";

/// The general prediction against the oracle for every commutative ring of
/// the catalog. Proved cells must match; unproved mismatches are
/// re-verified on the slow path and reported as counterexamples.
pub fn ring_catalog_sweep(catalog: &[RingSpec], cfg: &CatalogConfig, budget: Budget) -> Result<SweepReport> {
    cfg.check()?;
    if let Some(s) = catalog.iter().find(|s| !s.commutative()) {
        return Err(Error::config(format!("{s} is not commutative")));
    }
    run(CATALOG, &cfg.groups(catalog), |&(spec, d)| {
        let sums = match sums_or_skip(CATALOG, spec, d, cfg.k_max, budget)? {
            Ok(s) => s,
            Err(cells) => return Ok(cells),
        };
        (1..=cfg.k_max)
            .zip(&sums)
            .map(|(k, obs)| predicted_cell(CATALOG, spec, d, k, obs, budget))
            .collect()
    })
}

const GUARANTEES: &str = "zero-guarantee";

/// For every catalog ring of prime-power characteristic, every cell where
/// a module vanishing statement applies must have oracle value zero. Cells
/// without a guarantee are recorded.
pub fn zero_guarantee_sweep(catalog: &[RingSpec], cfg: &CatalogConfig, budget: Budget) -> Result<SweepReport> {
    cfg.check()?;
    let eligible: Vec<(&RingSpec, ringsum_core::ring::InvariantFactors)> = catalog
        .iter()
        .filter_map(|s| invariant_factors(s).map(|f| (s, f)))
        .collect();
    let groups: Vec<(usize, usize)> = (0..eligible.len())
        .flat_map(|i| cfg.ds.iter().map(move |&d| (i, d)))
        .collect();
    run(GUARANTEES, &groups, |&(i, d)| {
        let (spec, f) = &eligible[i];
        let sums = match sums_or_skip(GUARANTEES, spec, d, cfg.k_max, budget)? {
            Ok(s) => s,
            Err(cells) => return Ok(cells),
        };
        (1..=cfg.k_max)
            .zip(&sums)
            .map(|(k, obs)| {
                let g = zero_guarantee(f.p, &f.exponents, d, k)?;
                let mut params = ring_params(spec, d, k);
                params["p"] = json!(f.p);
                params["exponents"] = json!(f.exponents);
                let nonzero = !obs.is_zero(spec);
                let class = match (g.guaranteed, nonzero) {
                    (false, _) => Classification::Recorded,
                    (true, false) => Classification::ProvedMatch,
                    (true, true) => Classification::ProvedMismatch,
                };
                let mut cell = Cell::new(GUARANTEES, params, class)
                    .observed(format::matrix(obs))
                    .info("rule", g.which.as_str())
                    .info("nonzero", nonzero);
                if g.guaranteed {
                    cell = cell.expected(format::matrix(&Matrix::zero(spec, d)), g.which.as_str());
                }
                Ok(cell)
            })
            .collect()
    })
}

const PROBE: &str = "noncommutative";

/// Oracle sums for possibly non-commutative rings compared with the
/// diagonal pattern; nothing is asserted for non-commutative specs.
/// Commutative specs are treated as controls and checked like catalog
/// cells.
pub fn noncommutative_probe(specs: &[RingSpec], cfg: &CatalogConfig, budget: Budget) -> Result<SweepReport> {
    cfg.check()?;
    run(PROBE, &cfg.groups(specs), |&(spec, d)| {
        let sums = match sums_or_skip(PROBE, spec, d, cfg.k_max, budget)? {
            Ok(s) => s,
            Err(cells) => return Ok(cells),
        };
        let observed_commutative = validate_spec(spec).observed_commutative;
        (1..=cfg.k_max)
            .zip(&sums)
            .map(|(k, obs)| {
                let (pattern, branch) = final_theorem_pattern(spec, d, k);
                let matches = pattern == *obs;
                let cell = if spec.commutative() {
                    predicted_cell(PROBE, spec, d, k, obs, budget)?.info("control", true)
                } else {
                    Cell::new(PROBE, ring_params(spec, d, k), Classification::Recorded)
                        .expected(format::matrix(&pattern), branch.as_str())
                        .observed(format::matrix(obs))
                        .info("nonzero", !obs.is_zero(spec))
                };
                Ok(cell
                    .info("matches_pattern", matches)
                    .info("observed_commutative", observed_commutative))
            })
            .collect()
    })
}

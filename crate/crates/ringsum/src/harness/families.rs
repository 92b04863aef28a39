use ringsum_core::closed_form::{
    field_matrix_sum, gaussian_scalar_sum, oeis_a017593_nonzero, quaternion_sum, zn_matrix_sum,
    ClosedFormResult, Value as FormValue,
};
use ringsum_core::oracle::element_power_sums;
use ringsum_core::ring::builtin::{gaussian, gf_q, quaternion, zn};
use ringsum_core::ring::{Budget, RingSpec};
use serde_json::json;

use super::{refusal, run, skipped};
use crate::format;
use crate::parallel::power_sums;
use crate::report::{Cell, Classification, SweepReport};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Zn,
    Field,
    Gaussian,
    Quaternion,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Zn => "zn",
            Family::Field => "field",
            Family::Gaussian => "gaussian",
            Family::Quaternion => "quaternion",
        }
    }

    fn param_name(self) -> &'static str {
        match self {
            Family::Field => "q",
            _ => "n",
        }
    }

    fn ring(self, v: u64) -> Result<RingSpec> {
        Ok(match self {
            Family::Zn => zn(v),
            Family::Field => gf_q(v),
            Family::Gaussian => gaussian(v),
            Family::Quaternion => quaternion(v),
        }?)
    }

    fn closed(self, v: u64, d: usize, k: u32) -> Result<ClosedFormResult> {
        Ok(match self {
            Family::Zn => zn_matrix_sum(v, d, k),
            Family::Field => field_matrix_sum(v, d, k),
            Family::Gaussian => gaussian_scalar_sum(v, k),
            Family::Quaternion => quaternion_sum(v, k),
        }?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyConfig {
    pub family: Family,
    pub values: Vec<u64>,
    pub ds: Vec<usize>,
    pub k_max: u32,
}

impl FamilyConfig {
    pub fn default_for(family: Family) -> Self {
        let (values, ds, k_max) = match family {
            Family::Zn => ((2..=20).collect(), vec![2], 12),
            Family::Field => (vec![2, 3, 4, 5, 8, 9], vec![2], 13),
            Family::Gaussian => ((2..=12).collect(), vec![1], 13),
            Family::Quaternion => (vec![2, 3, 4, 6], vec![1], 12),
        };
        FamilyConfig {
            family,
            values,
            ds,
            k_max,
        }
    }
}

const FAMILY: &str = "family";

/// Closed form against oracle for every `(value, d, k)` of a family grid.
/// Gaussian and quaternion sums are scalar, so they require `d = 1`.
pub fn verify_family_sweep(cfg: &FamilyConfig, budget: Budget) -> Result<SweepReport> {
    if cfg.k_max == 0 || cfg.values.is_empty() || cfg.ds.is_empty() {
        return Err(Error::config("family sweep needs values, dimensions and k_max >= 1"));
    }
    if cfg.ds.contains(&0) {
        return Err(Error::config("dimension must be at least 1"));
    }
    if matches!(cfg.family, Family::Gaussian | Family::Quaternion) && cfg.ds.iter().any(|&d| d != 1) {
        return Err(Error::config(format!(
            "{} sums are scalar; use d = 1",
            cfg.family.as_str()
        )));
    }
    let mut groups = Vec::new();
    for &v in &cfg.values {
        let spec = cfg.family.ring(v)?;
        for &d in &cfg.ds {
            groups.push((v, d, spec.clone()));
        }
    }
    let fam = cfg.family;
    run(FAMILY, &groups, |(v, d, spec)| {
        let (v, d) = (*v, *d);
        let params = |k: u32| {
            let mut p = json!({"family": fam.as_str(), "d": d, "k": k});
            p[fam.param_name()] = json!(v);
            p
        };
        let observed: ringsum_core::Result<Vec<FormValue>> = if d == 1 {
            element_power_sums(spec, cfg.k_max, budget)
                .map(|s| s.into_iter().map(FormValue::Element).collect())
        } else {
            power_sums(spec, d, cfg.k_max, budget)
                .map(|s| s.into_iter().map(FormValue::Matrix).collect())
        };
        let observed = match observed {
            Ok(o) => o,
            Err(e) => {
                let e = refusal(e)?;
                return Ok((1..=cfg.k_max).map(|k| skipped(FAMILY, params(k), &e)).collect());
            }
        };
        (1..=cfg.k_max)
            .zip(&observed)
            .map(|(k, obs)| {
                let expected = fam.closed(v, d, k)?;
                let class = if expected.value == *obs {
                    Classification::ProvedMatch
                } else {
                    Classification::ProvedMismatch
                };
                let mut cell = Cell::new(FAMILY, params(k), class)
                    .expected(format::form_value(&expected.value), expected.branch.as_str())
                    .observed(format::form_value(obs))
                    .info("nonzero", !obs.is_zero(spec));
                if !expected.primes.is_empty() {
                    cell = cell.info("primes", json!(expected.primes));
                }
                Ok(cell)
            })
            .collect()
    })
}

const A017593: &str = "a017593";

/// `S_n^2(n) ≢ 0 (mod n)` by oracle for `2 <= n <= n_max`, against the
/// predicate `n ≡ 6 (mod 12)`; then the predicate against the closed form
/// for `1 <= n <= predicate_max`.
pub fn a017593_sweep(n_max: u64, predicate_max: u64, budget: Budget) -> Result<SweepReport> {
    if n_max > u32::MAX as u64 {
        return Err(Error::config("n_max too large"));
    }
    let mut groups: Vec<(bool, u64)> = (2..=n_max).map(|n| (true, n)).collect();
    groups.extend((1..=predicate_max).map(|n| (false, n)));
    run(A017593, &groups, |&(oracle, n)| {
        let predicate = oeis_a017593_nonzero(n);
        if !oracle {
            // The zero ring has only the zero matrix.
            let closed = n >= 2 && !zn_matrix_sum(n, 2, n as u32)?.is_zero();
            let class = if closed == predicate {
                Classification::ProvedMatch
            } else {
                Classification::ProvedMismatch
            };
            return Ok(vec![Cell::new(A017593, json!({"check": "predicate", "n": n}), class)
                .expected(json!(closed), "zn-matrix-formula")
                .observed(json!(predicate))]);
        }
        let params = json!({"check": "oracle", "n": n});
        let spec = zn(n)?;
        let sums = match power_sums(&spec, 2, n as u32, budget) {
            Ok(s) => s,
            Err(e) => return Ok(vec![skipped(A017593, params, &refusal(e)?)]),
        };
        let value = sums.last().expect("k_max >= 2");
        let nonzero = !value.is_zero(&spec);
        let class = if nonzero == predicate {
            Classification::ProvedMatch
        } else {
            Classification::ProvedMismatch
        };
        Ok(vec![Cell::new(A017593, params, class)
            .expected(json!(predicate), "n-mod-12-is-6")
            .observed(json!(nonzero))
            .info("value", format::matrix(value))])
    })
}

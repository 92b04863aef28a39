use ringsum_core::closed_form::{printed_scalar_exponent_sum, ExponentProfile};
use ringsum_core::oracle::scalar_exponent_sum_oracle;
use serde_json::json;

use super::run;
use crate::report::{Cell, Classification, SweepReport};
use crate::{Error, Result};

/// Primes with their largest `s`, and caps on `tau` and on each exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    pub primes: Vec<(u64, u32)>,
    pub tau_max: usize,
    pub beta_max: u32,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            primes: vec![(2, 3), (3, 2), (5, 2)],
            tau_max: 3,
            beta_max: 8,
        }
    }
}

/// All tuples in `[0, max]^tau`, lexicographic.
fn tuples(tau: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut t = vec![0u32; tau];
    loop {
        out.push(t.clone());
        let Some(i) = t.iter().rposition(|&b| b < max) else {
            return out;
        };
        t[i] += 1;
        t[i + 1..].fill(0);
    }
}

const AUDIT: &str = "lemma-audit";

/// Evaluates the stated exponent-sum formula for every profile in the grid
/// and compares it with the oracle. Odd primes are asserted; for `p = 2`
/// the comparison is only recorded. For odd `p`, `s > 1` and `tau >= 2` the
/// joint sum is also checked to vanish for all exponents, zero included.
pub fn lemma_audit(cfg: &AuditConfig) -> Result<SweepReport> {
    if cfg.tau_max == 0 {
        return Err(Error::config("tau_max must be at least 1"));
    }
    let mut groups = Vec::new();
    for &(p, s_max) in &cfg.primes {
        if s_max == 0 {
            return Err(Error::config("s_max must be at least 1"));
        }
        for s in 1..=s_max {
            ExponentProfile::new(p, s, vec![1])?;
            for tau in 1..=cfg.tau_max {
                groups.push((p, s, tau));
            }
        }
    }
    run(AUDIT, &groups, |&(p, s, tau)| {
        let mut cells = Vec::new();
        for betas in tuples(tau, cfg.beta_max) {
            let profile = ExponentProfile::new(p, s, betas.clone())?;
            let printed = printed_scalar_exponent_sum(&profile);
            let oracle = scalar_exponent_sum_oracle(printed.modulus, &betas);
            let agree = printed.residue == oracle;
            let class = match (printed.endorsed, agree) {
                (true, true) => Classification::ProvedMatch,
                (true, false) => Classification::ProvedMismatch,
                (false, true) => Classification::AuditMatch,
                (false, false) => Classification::AuditMismatch,
            };
            let params = json!({"check": "lemma", "p": p, "s": s, "betas": betas});
            cells.push(
                Cell::new(AUDIT, params, class)
                    .expected(json!(printed.residue), printed.branch.as_str())
                    .observed(json!(oracle))
                    .info("modulus", printed.modulus),
            );
            if p != 2 && s > 1 && tau >= 2 {
                let params = json!({"check": "remark", "p": p, "s": s, "betas": betas});
                let class = if oracle == 0 {
                    Classification::ProvedMatch
                } else {
                    Classification::ProvedMismatch
                };
                cells.push(
                    Cell::new(AUDIT, params, class)
                        .expected(json!(0), "odd-p-several-variables")
                        .observed(json!(oracle)),
                );
            }
        }
        Ok(cells)
    })
}

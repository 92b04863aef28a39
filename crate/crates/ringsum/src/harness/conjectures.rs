use ringsum_core::arith::is_prime;
use ringsum_core::oracle::{
    monomial_sum_oracle, monomial_sums_by_moments, omega_kappa_sum_by_moments,
    omega_kappa_sum_oracle, IntMatrix,
};
use ringsum_core::ring::{Budget, MAX_ORDER};
use ringsum_core::words::{all_words, MultiDegree};
use serde_json::json;

use super::{refusal, reverify, run, skipped};
use crate::format;
use crate::report::{Cell, Classification, SweepReport};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture1Config {
    pub primes: Vec<u64>,
    pub d: usize,
    /// Non-increasing exponent profiles `(s_1, ..., s_r)`.
    pub profiles: Vec<Vec<u32>>,
    /// Every word over `x_1..x_r` up to this length is evaluated.
    pub max_degree: usize,
}

impl Default for Conjecture1Config {
    fn default() -> Self {
        Conjecture1Config {
            primes: vec![2, 3],
            d: 2,
            profiles: vec![vec![1, 1], vec![2, 1], vec![2, 2]],
            max_degree: 4,
        }
    }
}

const CONJECTURE1: &str = "conjecture1";

fn zero_matrix(d: usize) -> serde_json::Value {
    format::int_matrix(&IntMatrix::zero(d, 2))
}

/// Sums of monomials over matrix tuples with entries in `0..p^{s_i}`,
/// asserted to vanish mod `p^{s_1}` except when `d = p = 2` and every
/// `s_i = 1` (evaluated and recorded only). Values come from the moment
/// route; nonzero asserted cells are recomputed by direct enumeration.
pub fn conjecture1_sweep(cfg: &Conjecture1Config, budget: Budget) -> Result<SweepReport> {
    if cfg.d == 0 || cfg.max_degree == 0 {
        return Err(Error::config("need d >= 1 and max_degree >= 1"));
    }
    let mut groups = Vec::new();
    for &p in &cfg.primes {
        if !is_prime(p) {
            return Err(ringsum_core::Error::NotPrime(p).into());
        }
        for profile in &cfg.profiles {
            if profile.is_empty()
                || profile.contains(&0)
                || profile.windows(2).any(|w| w[0] < w[1])
            {
                return Err(Error::config(format!(
                    "profile {profile:?} must be positive and non-increasing"
                )));
            }
            let moduli: Vec<u64> = profile
                .iter()
                .map(|&s| p.checked_pow(s).filter(|&q| q <= MAX_ORDER))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::config("prime power too large"))?;
            groups.push((p, profile.clone(), moduli));
        }
    }
    let d = cfg.d;
    run(CONJECTURE1, &groups, |(p, profile, moduli)| {
        let p = *p;
        let words = all_words(profile.len(), cfg.max_degree);
        let excluded = d == 2 && p == 2 && profile.iter().all(|&s| s == 1);
        let params = |w: &ringsum_core::words::Monomial| {
            json!({"p": p, "d": d, "exponents": profile, "word": w.to_string()})
        };
        let sums = match monomial_sums_by_moments(&words, moduli, d, budget) {
            Ok(s) => s,
            Err(e) => {
                let e = refusal(e)?;
                return Ok(words.iter().map(|w| skipped(CONJECTURE1, params(w), &e)).collect());
            }
        };
        Ok(words
            .iter()
            .zip(&sums)
            .map(|(w, s)| {
                let observed = format::int_matrix(s);
                let cell = if excluded {
                    Cell::new(CONJECTURE1, params(w), Classification::Recorded)
                        .observed(observed)
                        .info("excluded", true)
                } else if s.is_zero() {
                    Cell::new(CONJECTURE1, params(w), Classification::ConjectureMatch)
                        .expected(zero_matrix(d), "conjecture-1")
                        .observed(observed)
                } else {
                    let (class, note) = reverify(s, monomial_sum_oracle(w, moduli, d, budget));
                    Cell::new(CONJECTURE1, params(w), class)
                        .expected(zero_matrix(d), "conjecture-1")
                        .observed(observed)
                        .note(note)
                };
                cell.info("modulus", moduli[0])
            })
            .collect())
    })
}

const CONJECTURE2: &str = "conjecture2";

/// `sum over w in Omega_kappa of S_w^2(2, ..., 2)`, asserted to vanish mod 2
/// for every `kappa` with more than one variable; single-variable profiles
/// are recorded only.
pub fn conjecture2_sweep(kappas: &[Vec<usize>], budget: Budget) -> Result<SweepReport> {
    let (d, p) = (2, 2);
    let profiles: Vec<MultiDegree> = kappas
        .iter()
        .map(|k| MultiDegree::new(k.clone()))
        .collect::<ringsum_core::Result<_>>()?;
    run(CONJECTURE2, &profiles, |kappa| {
        let params = json!({"kappa": kappa.parts(), "d": d, "p": p});
        let sum = match omega_kappa_sum_by_moments(kappa, d, p, budget) {
            Ok(s) => s,
            Err(e) => return Ok(vec![skipped(CONJECTURE2, params, &refusal(e)?)]),
        };
        let observed = format::int_matrix(&sum);
        let words = kappa.word_count().map_or(json!(null), |c| json!(c as u64));
        let cell = if kappa.num_vars() < 2 {
            Cell::new(CONJECTURE2, params, Classification::Recorded).observed(observed)
        } else if sum.is_zero() {
            Cell::new(CONJECTURE2, params, Classification::ConjectureMatch)
                .expected(zero_matrix(d), "conjecture-2")
                .observed(observed)
        } else {
            let (class, note) = reverify(&sum, omega_kappa_sum_oracle(kappa, d, p, budget));
            Cell::new(CONJECTURE2, params, class)
                .expected(zero_matrix(d), "conjecture-2")
                .observed(observed)
                .note(note)
        };
        Ok(vec![cell.info("words", words)])
    })
}

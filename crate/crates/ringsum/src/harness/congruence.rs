use ringsum_core::arith::{is_prime, mod_pow};
use ringsum_core::oracle::monomial_sum_oracle;
use ringsum_core::ring::builtin::zn;
use ringsum_core::ring::{Budget, Matrix};
use ringsum_core::words::Monomial;
use serde::Serialize;
use serde_json::json;

use super::{ints, refusal, run, skipped};
use crate::parallel::power_sums;
use crate::report::{Cell, Classification, SweepReport};
use crate::{Error, Result};

/// Both sides of a congruence, row-major, reduced mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceCheck {
    pub pass: bool,
    pub modulus: u64,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

impl CongruenceCheck {
    fn new(modulus: u64, lhs: Vec<u64>, rhs: Vec<u64>) -> Self {
        CongruenceCheck {
            pass: lhs == rhs,
            modulus,
            lhs,
            rhs,
        }
    }

    fn classification(&self) -> Classification {
        if self.pass {
            Classification::ProvedMatch
        } else {
            Classification::ProvedMismatch
        }
    }

    fn cell(&self, sweep: &'static str, params: serde_json::Value, source: &str) -> Cell {
        Cell::new(sweep, params, self.classification())
            .expected(json!(self.rhs), source)
            .observed(json!(self.lhs))
    }
}

/// `x * c^e mod m` entrywise.
fn scaled(xs: &[u64], c: u64, e: u64, m: u64) -> Vec<u64> {
    let f = mod_pow(c % m, e, m) as u128;
    xs.iter()
        .map(|&x| ((x % m) as u128 * f % m as u128) as u64)
        .collect()
}

fn sum_mod(sums: &[Matrix], k: u32, m: u64) -> Vec<u64> {
    ints(&sums[k as usize - 1]).iter().map(|x| x % m).collect()
}

fn reduction(sn: &[Matrix], sm: &[Matrix], m: u64, n: u64, d: usize, k: u32) -> CongruenceCheck {
    let lhs = sum_mod(sn, k, m);
    let rhs = scaled(&ints(&sm[k as usize - 1]), n / m, (d * d) as u64, m);
    CongruenceCheck::new(m, lhs, rhs)
}

/// `S_k^d(n) ≡ (n/m)^{d^2} S_k^d(m) (mod m)` with both sides by oracle.
pub fn check_reduction(m: u64, n: u64, d: usize, k: u32, budget: Budget) -> Result<CongruenceCheck> {
    if m < 2 || !n.is_multiple_of(m) {
        return Err(Error::config("reduction needs m >= 2 dividing n"));
    }
    let sn = power_sums(&zn(n)?, d, k, budget)?;
    let sm = power_sums(&zn(m)?, d, k, budget)?;
    Ok(reduction(&sn, &sm, m, n, d, k))
}

const REDUCTION: &str = "reduction";

/// [`check_reduction`] for every `m | n <= n_max`, `d` in `ds`, `k <= k_max`.
pub fn reduction_sweep(n_max: u64, ds: &[usize], k_max: u32, budget: Budget) -> Result<SweepReport> {
    if k_max == 0 || ds.is_empty() || ds.contains(&0) {
        return Err(Error::config("reduction sweep needs dimensions >= 1 and k_max >= 1"));
    }
    let start = std::time::Instant::now();
    let groups: Vec<(u64, usize)> = (2..=n_max)
        .flat_map(|n| ds.iter().map(move |&d| (n, d)))
        .collect();
    // Oracle values per (n, d), computed once and shared by all divisors.
    let table: Vec<std::result::Result<Vec<Matrix>, ringsum_core::Error>> = {
        use rayon::prelude::*;
        groups
            .par_iter()
            .map(|&(n, d)| power_sums(&zn(n)?, d, k_max, budget))
            .collect()
    };
    let lookup = |n: u64, d: usize| {
        let i = groups.iter().position(|&g| g == (n, d)).expect("grid point");
        &table[i]
    };
    let cells_for = |&(n, d): &(u64, usize)| -> Result<Vec<Cell>> {
        let mut cells = Vec::new();
        for m in (2..=n).filter(|m| n % m == 0) {
            for k in 1..=k_max {
                let params = json!({"m": m, "n": n, "d": d, "k": k});
                match (lookup(n, d), lookup(m, d)) {
                    (Ok(sn), Ok(sm)) => cells.push(
                        reduction(sn, sm, m, n, d, k).cell(REDUCTION, params, "m-divides-n"),
                    ),
                    (Err(e), _) | (_, Err(e)) => {
                        cells.push(skipped(REDUCTION, params, &refusal(e.clone())?))
                    }
                }
            }
        }
        Ok(cells)
    };
    let mut report = run(REDUCTION, &groups, cells_for)?;
    report.wall_time = start.elapsed();
    Ok(report)
}

fn prime_power(p: u64, s: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(ringsum_core::Error::NotPrime(p).into());
    }
    p.checked_pow(s)
        .filter(|&q| q <= ringsum_core::ring::MAX_ORDER)
        .ok_or_else(|| Error::config("prime power too large"))
}

fn lifting(low: &[Matrix], high: &[Matrix], p: u64, q: u64, d: usize, k: u32) -> CongruenceCheck {
    let m = q * p;
    let lhs = sum_mod(high, k, m);
    let rhs = scaled(&ints(&low[k as usize - 1]), p, (d * d) as u64, m);
    CongruenceCheck::new(m, lhs, rhs)
}

/// `S_k^d(p^{s+1}) ≡ p^{d^2} S_k^d(p^s) (mod p^{s+1})` with both sides by
/// oracle.
pub fn check_lifting(p: u64, s: u32, d: usize, k: u32, budget: Budget) -> Result<CongruenceCheck> {
    if s == 0 {
        return Err(Error::config("lifting needs s >= 1"));
    }
    let q = prime_power(p, s)?;
    let high = prime_power(p, s + 1)?;
    let low_sums = power_sums(&zn(q)?, d, k, budget)?;
    let high_sums = power_sums(&zn(high)?, d, k, budget)?;
    Ok(lifting(&low_sums, &high_sums, p, q, d, k))
}

const LIFTING: &str = "lifting";

pub fn lifting_sweep(
    primes: &[u64],
    exponents: &[u32],
    ds: &[usize],
    k_max: u32,
    budget: Budget,
) -> Result<SweepReport> {
    if k_max == 0 || ds.is_empty() || ds.contains(&0) || exponents.contains(&0) {
        return Err(Error::config("lifting sweep needs s >= 1, d >= 1 and k_max >= 1"));
    }
    let mut groups = Vec::new();
    for &p in primes {
        for &s in exponents {
            let (q, high) = (prime_power(p, s)?, prime_power(p, s + 1)?);
            for &d in ds {
                groups.push((p, s, q, high, d));
            }
        }
    }
    run(LIFTING, &groups, |&(p, s, q, high, d)| {
        let params = |k: u32| json!({"p": p, "s": s, "d": d, "k": k});
        let both = power_sums(&zn(q)?, d, k_max, budget)
            .and_then(|low| Ok((low, power_sums(&zn(high)?, d, k_max, budget)?)));
        match both {
            Ok((low, hi)) => Ok((1..=k_max)
                .map(|k| lifting(&low, &hi, p, q, d, k).cell(LIFTING, params(k), "prime-power-lifting"))
                .collect()),
            Err(e) => {
                let e = refusal(e)?;
                Ok((1..=k_max).map(|k| skipped(LIFTING, params(k), &e)).collect())
            }
        }
    })
}

/// Result of the mixed-moduli lifting check. `inspect` is set when
/// `s_1 = 1`, which lies outside the hypothesis `s_1 > 1`; such cells are
/// evaluated but not asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialLift {
    pub check: CongruenceCheck,
    pub inspect: bool,
}

fn profile_moduli(p: u64, exponents: &[u32]) -> Result<Vec<u64>> {
    if exponents.is_empty() || exponents.contains(&0) || exponents.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::config("exponents must be positive and non-increasing"));
    }
    exponents.iter().map(|&s| prime_power(p, s)).collect()
}

/// `S_w^d(p^{s_1+1}, p^{s_2}, ...) ≡ p^{d^2} S_w^d(p^{s_1}, p^{s_2}, ...)
/// (mod p^{s_1+1})`, both sides by direct enumeration.
pub fn check_monomial_lifting(
    p: u64,
    exponents: &[u32],
    word: &Monomial,
    d: usize,
    budget: Budget,
) -> Result<MonomialLift> {
    let low = profile_moduli(p, exponents)?;
    let mut high = low.clone();
    high[0] = prime_power(p, exponents[0] + 1)?;
    let m = high[0];
    let lhs = monomial_sum_oracle(word, &high, d, budget)?;
    let rhs = monomial_sum_oracle(word, &low, d, budget)?;
    Ok(MonomialLift {
        check: CongruenceCheck::new(m, lhs.entries, scaled(&rhs.entries, p, (d * d) as u64, m)),
        inspect: exponents[0] == 1,
    })
}

const MONOMIAL_LIFTING: &str = "monomial-lifting";

pub fn monomial_lifting_sweep(
    p: u64,
    exponents: &[u32],
    words: &[Monomial],
    d: usize,
    budget: Budget,
) -> Result<SweepReport> {
    profile_moduli(p, exponents)?;
    if d == 0 {
        return Err(Error::config("dimension must be at least 1"));
    }
    if let Some(w) = words.iter().find(|w| w.num_vars() > exponents.len()) {
        return Err(Error::config(format!("word {w} has more variables than exponents")));
    }
    run(MONOMIAL_LIFTING, words, |w| {
        let params = json!({"p": p, "exponents": exponents, "d": d, "word": w.to_string()});
        match check_monomial_lifting(p, exponents, w, d, budget) {
            Ok(lift) => {
                let mut cell = lift.check.cell(MONOMIAL_LIFTING, params, "mixed-moduli-lifting");
                if lift.inspect {
                    cell.classification = crate::report::Classification::Inspect;
                    cell = cell
                        .info("congruence_holds", lift.check.pass)
                        .note("s_1 = 1 is outside the lifting hypothesis");
                }
                Ok(vec![cell])
            }
            Err(Error::Core(e)) => Ok(vec![skipped(MONOMIAL_LIFTING, params, &refusal(e)?)]),
            Err(e) => Err(e),
        }
    })
}

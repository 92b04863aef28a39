//! Brute-force ground truth by exhaustive enumeration.
//!
//! Matrix power sums run on a [`CayleyTable`] and accumulate, for every
//! exponent and entry position, how often each ring element occurs. The
//! histogram is turned into a ring element only at the end, so partial
//! results over disjoint index ranges merge by adding counts and the final
//! value does not depend on the partition.
//!
//! Monomial sums run over integer matrices with entries in `0..n_i`. All
//! arithmetic is done modulo `n_1`, the largest modulus; reduction mod `n_1`
//! is a ring homomorphism from the integers, so this equals exact integer
//! evaluation followed by a single reduction.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::arith::{checked_pow, mod_pow};
use crate::ring::{
    matrix_count, CayleyTable, Budget, Matrices, Matrix, RingElement, RingSpec, MAX_ORDER,
    TABLE_LIMIT,
};
use crate::words::{Monomial, MultiDegree};
use crate::{Error, Result};

/// `S_k^d(R)` request: sum of `M^k` over all `d x d` matrices over `spec`.
#[derive(Clone, Copy, Debug)]
pub struct PowerSumQuery<'a> {
    pub spec: &'a RingSpec,
    pub d: usize,
    pub k: u32,
}

/// Ring multiplications needed for all powers up to `k_max` of every
/// `d x d` matrix: one matrix product per matrix and exponent step.
pub fn power_sum_cost(spec: &RingSpec, d: usize, k_max: u32) -> Option<u128> {
    let per = ((k_max.saturating_sub(1)) as u128 * (d as u128).pow(3)).max(1);
    matrix_count(spec, d)?.checked_mul(per)
}

/// Prepared enumeration of `S_1, ..., S_{k_max}` over `d x d` matrices.
pub struct PowerSumPlan<'a> {
    spec: &'a RingSpec,
    table: CayleyTable,
    d: usize,
    k_max: u32,
    total: u64,
}

/// Occurrence counts of each element per exponent and entry position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialPowerSums {
    counts: Vec<u64>,
}

impl PartialPowerSums {
    /// Combines partial results; addition of counts is commutative and
    /// associative, so merge order is irrelevant.
    pub fn merge(&mut self, other: &PartialPowerSums) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}

impl<'a> PowerSumPlan<'a> {
    pub fn new(spec: &'a RingSpec, d: usize, k_max: u32, budget: Budget) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("matrix dimension must be at least 1"));
        }
        if k_max == 0 {
            return Err(Error::ZeroExponent);
        }
        budget.check(power_sum_cost(spec, d, k_max))?;
        let total = matrix_count(spec, d).expect("checked by budget") as u64;
        Ok(PowerSumPlan {
            spec,
            table: CayleyTable::new(spec)?,
            d,
            k_max,
            total,
        })
    }

    /// Number of matrices, `card^(d^2)`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn empty(&self) -> PartialPowerSums {
        PartialPowerSums {
            counts: vec![0; self.k_max as usize * self.d * self.d * self.table.card()],
        }
    }

    /// Accumulates the matrices with indices in `range` (odometer order of
    /// `enumerate_matrices`).
    pub fn partial(&self, range: Range<u64>) -> PartialPowerSums {
        let d = self.d;
        let d2 = d * d;
        let card = self.table.card();
        let mut out = self.empty();
        if range.is_empty() {
            return out;
        }
        let mut digits = vec![0u32; d2];
        let mut idx = range.start;
        for slot in digits.iter_mut().rev() {
            *slot = (idx % card as u64) as u32;
            idx /= card as u64;
        }
        let mut power = vec![0u32; d2];
        let mut scratch = vec![0u32; d2];
        let stride = d2 * card;
        for _ in range {
            power.copy_from_slice(&digits);
            for (pos, &v) in power.iter().enumerate() {
                out.counts[pos * card + v as usize] += 1;
            }
            for k in 1..self.k_max as usize {
                self.table.mat_mul_into(d, &power, &digits, &mut scratch);
                core::mem::swap(&mut power, &mut scratch);
                let base = k * stride;
                for (pos, &v) in power.iter().enumerate() {
                    out.counts[base + pos * card + v as usize] += 1;
                }
            }
            for slot in digits.iter_mut().rev() {
                *slot += 1;
                if (*slot as usize) < card {
                    break;
                }
                *slot = 0;
            }
        }
        out
    }

    /// `[S_1, ..., S_{k_max}]` from merged counts.
    pub fn finish(&self, sums: &PartialPowerSums) -> Vec<Matrix> {
        let d2 = self.d * self.d;
        let card = self.table.card();
        (0..self.k_max as usize)
            .map(|k| {
                let entries = (0..d2)
                    .map(|pos| {
                        let base = (k * d2 + pos) * card;
                        let mut acc = self.spec.zero();
                        for v in 0..card {
                            let c = sums.counts[base + v];
                            if c != 0 {
                                let term = self.spec.scalar_mul(self.table.element(v as u32), c as u128);
                                self.spec.add_assign_unchecked(&mut acc, &term);
                            }
                        }
                        acc
                    })
                    .collect();
                Matrix::from_raw(self.d, entries)
            })
            .collect()
    }

    pub fn run(&self) -> Vec<Matrix> {
        self.finish(&self.partial(0..self.total))
    }
}

/// `[S_1^d(R), ..., S_{k_max}^d(R)]`, one matrix product per matrix and
/// exponent step.
pub fn matrix_power_sums(
    spec: &RingSpec,
    d: usize,
    k_max: u32,
    budget: Budget,
) -> Result<Vec<Matrix>> {
    Ok(PowerSumPlan::new(spec, d, k_max, budget)?.run())
}

/// `S_k^d(R) = sum over all M of M^k`.
pub fn matrix_power_sum_oracle(query: PowerSumQuery<'_>, budget: Budget) -> Result<Matrix> {
    let mut sums = matrix_power_sums(query.spec, query.d, query.k, budget)?;
    Ok(sums.pop().expect("k >= 1"))
}

/// Independent slow path: structure-constant arithmetic, every `M^k`
/// recomputed from scratch, no tables and no shared powers.
pub fn matrix_power_sum_slow(query: PowerSumQuery<'_>, budget: Budget) -> Result<Matrix> {
    let PowerSumQuery { spec, d, k } = query;
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    budget.check(power_sum_cost(spec, d, k))?;
    let total = matrix_count(spec, d).expect("checked by budget") as u64;
    let mut acc = Matrix::zero(spec, d);
    for m in Matrices::range(spec, d, 0..total)? {
        acc = spec.mat_add(&acc, &spec.mat_pow(&m, k)?)?;
    }
    Ok(acc)
}

/// `[sum z, sum z^2, ..., sum z^{k_max}]` over all elements `z`.
pub fn element_power_sums(spec: &RingSpec, k_max: u32, budget: Budget) -> Result<Vec<RingElement>> {
    if k_max == 0 {
        return Err(Error::ZeroExponent);
    }
    budget.check(spec.card().checked_mul(k_max as u128))?;
    if spec.card() <= TABLE_LIMIT as u128 {
        let plan = PowerSumPlan::new(spec, 1, k_max, budget)?;
        return Ok(plan
            .run()
            .into_iter()
            .map(|m| m.entries()[0].clone())
            .collect());
    }
    let mut sums = vec![spec.zero(); k_max as usize];
    for i in 0..spec.card() as u64 {
        let z = spec.element_at(i);
        let mut p = z.clone();
        for (k, slot) in sums.iter_mut().enumerate() {
            if k > 0 {
                p = spec.mul_unchecked(&p, &z);
            }
            spec.add_assign_unchecked(slot, &p);
        }
    }
    Ok(sums)
}

pub fn ring_element_power_sum_oracle(spec: &RingSpec, k: u32, budget: Budget) -> Result<RingElement> {
    Ok(element_power_sums(spec, k, budget)?.pop().expect("k >= 1"))
}

/// `sum_{x_1..x_tau in 0..m} x_1^{b_1} ... x_tau^{b_tau} mod m`, computed as
/// the product of the one-variable sums (the ranges are independent).
/// `0^0 = 1`, so a zero exponent contributes `m`.
pub fn scalar_exponent_sum_oracle(m: u64, betas: &[u32]) -> u64 {
    betas.iter().fold(1 % m, |acc, &b| {
        let s = (0..m).fold(0u64, |s, x| (s + mod_pow(x, b as u64, m)) % m);
        ((acc as u128 * s as u128) % m as u128) as u64
    })
}

/// Unfactored joint sum for `tau <= 2`; `None` for longer profiles.
pub fn scalar_exponent_sum_double_loop(m: u64, betas: &[u32]) -> Option<u64> {
    let m128 = m as u128;
    match *betas {
        [b] => Some((0..m).fold(0, |s, x| (s + mod_pow(x, b as u64, m)) % m)),
        [b1, b2] => {
            let mut s = 0u128;
            for x in 0..m {
                let px = mod_pow(x, b1 as u64, m) as u128;
                for y in 0..m {
                    s = (s + px * mod_pow(y, b2 as u64, m) as u128) % m128;
                }
            }
            Some(s as u64)
        }
        _ => None,
    }
}

/// Square matrix of residues modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub d: usize,
    pub modulus: u64,
    pub entries: Vec<u64>,
}

impl IntMatrix {
    pub fn zero(d: usize, modulus: u64) -> Self {
        IntMatrix {
            d,
            modulus,
            entries: vec![0; d * d],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.d + j]
    }

    /// Entries reduced to a divisor of the current modulus.
    pub fn reduce(&self, modulus: u64) -> IntMatrix {
        IntMatrix {
            d: self.d,
            modulus,
            entries: self.entries.iter().map(|&e| e % modulus).collect(),
        }
    }

    /// `c * self`, reduced mod `modulus` (a divisor of the current one).
    pub fn scale(&self, c: u64, modulus: u64) -> IntMatrix {
        let c = c % modulus;
        IntMatrix {
            d: self.d,
            modulus,
            entries: self
                .entries
                .iter()
                .map(|&e| ((e % modulus) as u128 * c as u128 % modulus as u128) as u64)
                .collect(),
        }
    }
}

fn check_moduli(word: &Monomial, moduli: &[u64], d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("matrix dimension must be at least 1"));
    }
    if moduli.is_empty() || word.num_vars() > moduli.len() {
        return Err(Error::InvalidParameter("word uses a variable without a modulus"));
    }
    if moduli.iter().any(|&n| !(2..=MAX_ORDER).contains(&n)) {
        return Err(Error::InvalidParameter("moduli must lie in 2..=2^31"));
    }
    if moduli.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter("moduli must be non-increasing"));
    }
    Ok(())
}

fn int_mat_mul_into(d: usize, a: &[u64], b: &[u64], m: u64, out: &mut [u64]) {
    for i in 0..d {
        for j in 0..d {
            let mut acc = 0u64;
            for t in 0..d {
                acc += a[i * d + t] * b[t * d + j] % m;
            }
            out[i * d + j] = acc % m;
        }
    }
}

/// Number of matrix tuples `prod n_i^(d^2)`.
fn tuple_count(moduli: &[u64], d: usize) -> Option<u128> {
    moduli
        .iter()
        .try_fold(1u128, |acc, &n| acc.checked_mul(checked_pow(n as u128, (d * d) as u32)?))
}

/// Odometer over `r` integer matrices; matrix `v` has entries in `0..n_v`.
struct TupleOdometer {
    digits: Vec<u64>,
    radices: Vec<u64>,
}

impl TupleOdometer {
    fn new(moduli: &[u64], d: usize) -> Self {
        let radices: Vec<u64> = moduli
            .iter()
            .flat_map(|&n| core::iter::repeat_n(n, d * d))
            .collect();
        TupleOdometer {
            digits: vec![0; radices.len()],
            radices,
        }
    }

    fn matrix(&self, v: usize, d2: usize) -> &[u64] {
        &self.digits[v * d2..(v + 1) * d2]
    }

    fn advance(&mut self) {
        for (slot, &n) in self.digits.iter_mut().zip(&self.radices).rev() {
            *slot += 1;
            if *slot < n {
                return;
            }
            *slot = 0;
        }
    }
}

fn eval_word_into(
    word: &[usize],
    odo: &TupleOdometer,
    d: usize,
    m: u64,
    acc: &mut Vec<u64>,
    scratch: &mut Vec<u64>,
) {
    let d2 = d * d;
    acc.clear();
    acc.extend(odo.matrix(word[0] - 1, d2).iter().map(|&x| x % m));
    for &v in &word[1..] {
        int_mat_mul_into(d, acc, odo.matrix(v - 1, d2), m, scratch);
        core::mem::swap(acc, scratch);
    }
}

/// Ring multiplications for evaluating `words` of the given total length at
/// every tuple.
fn monomial_cost(moduli: &[u64], d: usize, letters: usize, words: usize) -> Option<u128> {
    let per = (letters.saturating_sub(words) as u128 * (d as u128).pow(3)).max(1);
    tuple_count(moduli, d)?.checked_mul(per)
}

/// `S_w^d(n_1, ..., n_r)`: the word evaluated at every tuple of integer
/// matrices `A_i` with entries in `0..n_i`, summed and reduced mod `n_1`.
///
/// Moduli must be non-increasing; permuting variables permutes the word.
pub fn monomial_sum_oracle(
    word: &Monomial,
    moduli: &[u64],
    d: usize,
    budget: Budget,
) -> Result<IntMatrix> {
    check_moduli(word, moduli, d)?;
    budget.check(monomial_cost(moduli, d, word.degree(), 1))?;
    let m = moduli[0];
    let total = tuple_count(moduli, d).expect("checked by budget");
    let mut odo = TupleOdometer::new(moduli, d);
    let mut sum = IntMatrix::zero(d, m);
    let (mut acc, mut scratch) = (Vec::new(), vec![0; d * d]);
    for _ in 0..total {
        eval_word_into(word.letters(), &odo, d, m, &mut acc, &mut scratch);
        for (s, &x) in sum.entries.iter_mut().zip(&acc) {
            *s = (*s + x) % m;
        }
        odo.advance();
    }
    Ok(sum)
}

/// `sum_{w in Omega_kappa} S_w^d(p, ..., p) mod p`, by direct enumeration of
/// all matrix tuples for every word.
pub fn omega_kappa_sum_oracle(
    kappa: &MultiDegree,
    d: usize,
    p: u64,
    budget: Budget,
) -> Result<IntMatrix> {
    let words = kappa.words();
    let moduli = vec![p; kappa.num_vars()];
    check_moduli(&words[0], &moduli, d)?;
    let letters = words.len() * kappa.total();
    budget.check(monomial_cost(&moduli, d, letters, words.len()))?;
    let total = tuple_count(&moduli, d).expect("checked by budget");
    let mut odo = TupleOdometer::new(&moduli, d);
    let mut sum = IntMatrix::zero(d, p);
    let (mut acc, mut scratch) = (Vec::new(), vec![0; d * d]);
    for _ in 0..total {
        for w in &words {
            eval_word_into(w.letters(), &odo, d, p, &mut acc, &mut scratch);
            for (s, &x) in sum.entries.iter_mut().zip(&acc) {
                *s = (*s + x) % p;
            }
        }
        odo.advance();
    }
    Ok(sum)
}

/// Moment tensors `T_v[e_1..e_k] = sum_A A[e_1] ... A[e_k] mod m` over all
/// integer matrices `A` with entries in `0..n`, for every `k <= k_max`.
/// Entry positions `e_t` are row-major in `0..d^2`; `e_1` is the most
/// significant index digit.
fn moment_tensors(n: u64, d: usize, k_max: usize, m: u64) -> Vec<Vec<u64>> {
    let d2 = d * d;
    let mut tensors: Vec<Vec<u64>> = (0..=k_max).map(|k| vec![0; d2.pow(k as u32)]).collect();
    let count = n.pow(d2 as u32);
    let mut a = vec![0u64; d2];
    let mut layers: Vec<Vec<u64>> = (0..=k_max).map(|k| vec![0; d2.pow(k as u32)]).collect();
    for _ in 0..count {
        layers[0][0] = 1 % m;
        for k in 1..=k_max {
            let (prev, next) = layers.split_at_mut(k);
            let (prev, next) = (&prev[k - 1], &mut next[0]);
            for (t, &pv) in prev.iter().enumerate() {
                for (e, &x) in a.iter().enumerate() {
                    next[t * d2 + e] = pv * x % m;
                }
            }
        }
        for (tensor, layer) in tensors.iter_mut().zip(&layers) {
            for (s, &x) in tensor.iter_mut().zip(layer) {
                *s = (*s + x) % m;
            }
        }
        for slot in a.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    tensors
}

/// Contracts moment tensors along the word: entry `(a, b)` sums, over all
/// index chains `a = c_0, c_1, ..., c_L = b`, the product over variables of
/// the moment at the entry positions `(c_j, c_{j+1})` where that variable
/// occurs.
fn contract_word(word: &[usize], d: usize, m: u64, moments: &[Vec<Vec<u64>>]) -> IntMatrix {
    let d2 = d * d;
    let len = word.len();
    let r = moments.len();
    let mut out = IntMatrix::zero(d, m);
    let mut chain = vec![0usize; len + 1];
    let mut tensor_index = vec![0usize; r];
    let mut degree = vec![0usize; r];
    let inner = d.pow(len as u32 - 1);
    for a in 0..d {
        for b in 0..d {
            chain[0] = a;
            chain[len] = b;
            let mut total = 0u64;
            for mut code in 0..inner {
                for c in chain[1..len].iter_mut().rev() {
                    *c = code % d;
                    code /= d;
                }
                tensor_index.iter_mut().for_each(|x| *x = 0);
                degree.iter_mut().for_each(|x| *x = 0);
                for (j, &v) in word.iter().enumerate() {
                    let e = chain[j] * d + chain[j + 1];
                    tensor_index[v - 1] = tensor_index[v - 1] * d2 + e;
                    degree[v - 1] += 1;
                }
                let mut prod = 1 % m;
                for v in 0..r {
                    prod = prod * moments[v][degree[v]][tensor_index[v]] % m;
                    if prod == 0 {
                        break;
                    }
                }
                total = (total + prod) % m;
            }
            out.entries[a * d + b] = total;
        }
    }
    out
}

fn moment_cost(moduli: &[u64], d: usize, degrees: &[usize]) -> Option<u128> {
    let d2 = (d * d) as u128;
    moduli.iter().zip(degrees).try_fold(0u128, |acc, (&n, &k)| {
        let count = checked_pow(n as u128, (d * d) as u32)?;
        let size: u128 = (0..=k as u32).map(|j| d2.pow(j)).sum();
        acc.checked_add(count.checked_mul(size)?)
    })
}

/// Same value as [`monomial_sum_oracle`], computed through per-variable
/// moment tensors: the matrices of distinct variables are summed
/// independently, so the tuple sum factors into moments of single-matrix
/// entry products. Cost is `sum_v n_v^(d^2) d^(2 k_v)` instead of
/// `prod_v n_v^(d^2)`.
pub fn monomial_sum_by_moments(
    word: &Monomial,
    moduli: &[u64],
    d: usize,
    budget: Budget,
) -> Result<IntMatrix> {
    check_moduli(word, moduli, d)?;
    let degrees = word.multidegree_in(moduli.len()).parts().to_vec();
    budget.check(moment_cost(moduli, d, &degrees))?;
    let m = moduli[0];
    let moments: Vec<Vec<Vec<u64>>> = moduli
        .iter()
        .zip(&degrees)
        .map(|(&n, &k)| moment_tensors(n, d, k, m))
        .collect();
    Ok(contract_word(word.letters(), d, m, &moments))
}

/// Moment-tensor evaluation of several words sharing the same moduli; the
/// tensors are built once for the largest per-variable degree.
pub fn monomial_sums_by_moments(
    words: &[Monomial],
    moduli: &[u64],
    d: usize,
    budget: Budget,
) -> Result<Vec<IntMatrix>> {
    let mut max_deg = vec![0usize; moduli.len()];
    for w in words {
        check_moduli(w, moduli, d)?;
        for (slot, &k) in max_deg.iter_mut().zip(w.multidegree_in(moduli.len()).parts()) {
            *slot = (*slot).max(k);
        }
    }
    budget.check(moment_cost(moduli, d, &max_deg))?;
    let m = moduli[0];
    let moments: Vec<Vec<Vec<u64>>> = moduli
        .iter()
        .zip(&max_deg)
        .map(|(&n, &k)| moment_tensors(n, d, k, m))
        .collect();
    Ok(words
        .iter()
        .map(|w| contract_word(w.letters(), d, m, &moments))
        .collect())
}

/// [`omega_kappa_sum_oracle`] through moment tensors.
pub fn omega_kappa_sum_by_moments(
    kappa: &MultiDegree,
    d: usize,
    p: u64,
    budget: Budget,
) -> Result<IntMatrix> {
    let moduli = vec![p; kappa.num_vars()];
    let sums = monomial_sums_by_moments(&kappa.words(), &moduli, d, budget)?;
    let mut total = IntMatrix::zero(d, p);
    for s in sums {
        for (t, x) in total.entries.iter_mut().zip(s.entries) {
            *t = (*t + x) % p;
        }
    }
    Ok(total)
}

//! Closed-form values of scalar and matrix power sums.
//!
//! Results are elements (or matrices) of the ring they live in, so that
//! `-1` means the additive inverse of the unit even in characteristic 2.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{factorize, is_prime, mod_pow, prime_divisors};
use crate::ring::builtin::{direct_product, gaussian, gf_q, quaternion, zn};
use crate::ring::{
    find_order2_element, invariant_factors, is_field, isomorphic_zn, Budget, Matrix, Order2,
    RingElement, RingSpec,
};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Element(RingElement),
    Matrix(Matrix),
}

impl Value {
    pub fn is_zero(&self, spec: &RingSpec) -> bool {
        match self {
            Value::Element(e) => spec.is_zero(e),
            Value::Matrix(m) => m.is_zero(spec),
        }
    }
}

/// Which case of a closed formula produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `F_q`, `(q-1) | k`: the sum is `-1`.
    FieldDivides,
    FieldOtherwise,
    /// `Z_n` with `k` even, `k = 1` or `4 ∤ n`: `-sum n/p` over `p | n`, `(p-1) | k`.
    ZnPrimeSum,
    /// `Z_n` with `k > 1` odd and `4 | n`.
    ZnVanishing,
    /// `Z_n[i]` with `k > 1` odd and `n ≡ 2 (mod 4)`: `(n/2)(1+i)`.
    GaussianExceptional,
    GaussianPrimeSum,
    /// `q = d = 2` and `1 < k ≡ 0, ±1 (mod 6)`: identity.
    FieldMatrixExceptional,
    FieldMatrixZero,
    /// `d = 2`, `n ≡ 2 (mod 4)`, `1 < k ≡ 0, ±1 (mod 6)`: `(n/2) I`.
    ZnMatrixExceptional,
    ZnMatrixZero,
    QuaternionZero,
    ModuleGuarantee(GuaranteeRule),
    /// `d = 2`, `card ≡ 2 (mod 4)`, `1 < k ≡ 0, ±1 (mod 6)`, idempotent `e`.
    FinalDiagonal,
    FinalZero,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::FieldDivides => "field-divides",
            Branch::FieldOtherwise => "field-otherwise",
            Branch::ZnPrimeSum => "zn-prime-sum",
            Branch::ZnVanishing => "zn-vanishing",
            Branch::GaussianExceptional => "gaussian-exceptional",
            Branch::GaussianPrimeSum => "gaussian-prime-sum",
            Branch::FieldMatrixExceptional => "field-matrix-exceptional",
            Branch::FieldMatrixZero => "field-matrix-zero",
            Branch::ZnMatrixExceptional => "zn-matrix-exceptional",
            Branch::ZnMatrixZero => "zn-matrix-zero",
            Branch::QuaternionZero => "quaternion-zero",
            Branch::ModuleGuarantee(rule) => rule.as_str(),
            Branch::FinalDiagonal => "final-diagonal",
            Branch::FinalZero => "final-zero",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormResult {
    /// The ring the value lives in.
    pub ring: RingSpec,
    pub value: Value,
    pub branch: Branch,
    /// True only when the value rests on the unproved monomial conjectures.
    pub conjecture_dependent: bool,
    /// Primes entering the formula (`p | n, (p-1) | k` for `Z_n`, the set
    /// `P(k, n)` for `Z_n[i]`); empty otherwise.
    pub primes: Vec<u64>,
}

impl ClosedFormResult {
    fn proved(ring: RingSpec, value: Value, branch: Branch) -> Self {
        ClosedFormResult {
            ring,
            value,
            branch,
            conjecture_dependent: false,
            primes: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero(&self.ring)
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroExponent)
    } else {
        Ok(())
    }
}

/// `1 < k ≡ -1, 0, 1 (mod 6)`.
pub fn exceptional_exponent(k: u32) -> bool {
    k > 1 && matches!(k % 6, 0 | 1 | 5)
}

/// `sum_{x in F_q} x^k`: `-1` if `(q-1) | k`, else `0`.
pub fn field_scalar_sum(q: u64, k: u32) -> Result<ClosedFormResult> {
    check_k(k)?;
    let ring = gf_q(q)?;
    let (value, branch) = if (k as u64).is_multiple_of(q - 1) {
        let one = ring.unit().expect("fields are unital");
        (ring.neg(&one)?, Branch::FieldDivides)
    } else {
        (ring.zero(), Branch::FieldOtherwise)
    };
    Ok(ClosedFormResult::proved(ring, Value::Element(value), branch))
}

/// `sum_{x in Z_n} x^k`.
pub fn zn_scalar_sum(n: u64, k: u32) -> Result<ClosedFormResult> {
    check_k(k)?;
    let ring = zn(n)?;
    if k.is_multiple_of(2) || k == 1 || !n.is_multiple_of(4) {
        let primes: Vec<u64> = prime_divisors(n)
            .into_iter()
            .filter(|&p| (k as u64).is_multiple_of(p - 1))
            .collect();
        let s = primes.iter().fold(0u64, |acc, &p| (acc + n / p) % n);
        let value = ring.element(vec![(n - s) % n])?;
        Ok(ClosedFormResult {
            primes,
            ..ClosedFormResult::proved(ring, Value::Element(value), Branch::ZnPrimeSum)
        })
    } else {
        let zero = ring.zero();
        Ok(ClosedFormResult::proved(ring, Value::Element(zero), Branch::ZnVanishing))
    }
}

/// `P(k, n)`: primes `p ≡ 3 (mod 4)` with `p || n` and `(p^2 - 1) | k`.
pub fn gaussian_prime_set(k: u32, n: u64) -> Vec<u64> {
    factorize(n)
        .into_iter()
        .filter(|&(p, e)| e == 1 && p % 4 == 3 && (k as u64).is_multiple_of(p * p - 1))
        .map(|(p, _)| p)
        .collect()
}

/// `sum_{z in Z_n[i]} z^k`.
pub fn gaussian_scalar_sum(n: u64, k: u32) -> Result<ClosedFormResult> {
    check_k(k)?;
    let ring = gaussian(n)?;
    if k > 1 && k % 2 == 1 && n % 4 == 2 {
        let h = n / 2;
        let value = ring.element(vec![h, h])?;
        return Ok(ClosedFormResult::proved(
            ring,
            Value::Element(value),
            Branch::GaussianExceptional,
        ));
    }
    let primes = gaussian_prime_set(k, n);
    let s = primes.iter().fold(0u64, |acc, &p| {
        let c = n / p;
        (acc + (c as u128 * c as u128 % n as u128) as u64) % n
    });
    let value = ring.element(vec![(n - s) % n, 0])?;
    Ok(ClosedFormResult {
        primes,
        ..ClosedFormResult::proved(ring, Value::Element(value), Branch::GaussianPrimeSum)
    })
}

/// `S_k^d(F_q)`: the identity when `q = d = 2` and `1 < k ≡ 0, ±1 (mod 6)`,
/// zero otherwise. `d = 1` is the scalar sum.
pub fn field_matrix_sum(q: u64, d: usize, k: u32) -> Result<ClosedFormResult> {
    if d == 0 {
        return Err(Error::InvalidParameter("matrix dimension must be at least 1"));
    }
    if d == 1 {
        return field_scalar_sum(q, k);
    }
    check_k(k)?;
    let ring = gf_q(q)?;
    let (value, branch) = if q == 2 && d == 2 && exceptional_exponent(k) {
        let one = ring.unit().expect("fields are unital");
        (Matrix::scalar(&ring, d, &one), Branch::FieldMatrixExceptional)
    } else {
        (Matrix::zero(&ring, d), Branch::FieldMatrixZero)
    };
    Ok(ClosedFormResult::proved(ring, Value::Matrix(value), branch))
}

/// `S_k^d(Z_n) mod n`: `(n/2) I_2` when `d = 2`, `n ≡ 2 (mod 4)` and
/// `1 < k ≡ 0, ±1 (mod 6)`, zero otherwise. `d = 1` is the scalar sum.
pub fn zn_matrix_sum(n: u64, d: usize, k: u32) -> Result<ClosedFormResult> {
    if d == 0 {
        return Err(Error::InvalidParameter("matrix dimension must be at least 1"));
    }
    if d == 1 {
        return zn_scalar_sum(n, k);
    }
    check_k(k)?;
    let ring = zn(n)?;
    let (value, branch) = if d == 2 && n % 4 == 2 && exceptional_exponent(k) {
        let half = ring.element(vec![n / 2])?;
        (Matrix::scalar(&ring, d, &half), Branch::ZnMatrixExceptional)
    } else {
        (Matrix::zero(&ring, d), Branch::ZnMatrixZero)
    };
    Ok(ClosedFormResult::proved(ring, Value::Matrix(value), branch))
}

/// Whether `S_n^2(n) ≢ 0 (mod n)`, i.e. `n ≡ 6 (mod 12)`.
pub fn oeis_a017593_nonzero(n: u64) -> bool {
    n % 12 == 6
}

/// `sum_{z in Z_n[i,j,k]} z^l`, always zero.
pub fn quaternion_sum(n: u64, l: u32) -> Result<ClosedFormResult> {
    check_k(l)?;
    let ring = quaternion(n)?;
    let zero = ring.zero();
    Ok(ClosedFormResult::proved(ring, Value::Element(zero), Branch::QuaternionZero))
}

/// `(p, s, (beta_1, ..., beta_tau))` for joint sums of
/// `x_1^{beta_1} ... x_tau^{beta_tau}` over `x_i in 0..p^s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentProfile {
    p: u64,
    s: u32,
    betas: Vec<u32>,
}

impl ExponentProfile {
    pub fn new(p: u64, s: u32, betas: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || betas.is_empty() {
            return Err(Error::InvalidParameter("need s >= 1 and at least one exponent"));
        }
        p.checked_pow(s)
            .filter(|&m| m <= crate::ring::MAX_ORDER)
            .ok_or(Error::InvalidParameter("p^s too large"))?;
        Ok(ExponentProfile { p, s, betas })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn betas(&self) -> &[u32] {
        &self.betas
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.s)
    }

    pub fn tau(&self) -> usize {
        self.betas.len()
    }

    /// Number of exponents equal to 1.
    pub fn ones(&self) -> usize {
        self.betas.iter().filter(|&&b| b == 1).count()
    }

    /// Number of positive even exponents.
    pub fn evens(&self) -> usize {
        self.betas.iter().filter(|&&b| b > 0 && b % 2 == 0).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExponentBranch {
    /// Some exponent is zero.
    ZeroExponent,
    /// Odd `p`, `(p-1) | beta_i` for all `i`: `(-p^{s-1})^tau`.
    OddAllDivisible,
    OddOtherwise,
    /// `p = 2`, `s = 1`: `1`.
    TwoPrimeModulus,
    /// `p = 2`, `s > 1`, some `beta_i > 1` odd: `0`.
    TwoOddExponent,
    /// `p = 2`, `s > 1`, every `beta_i` is 1 or even: `(-1)^A (2^{s-1})^B`.
    TwoOnesAndEvens,
}

impl ExponentBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            ExponentBranch::ZeroExponent => "zero-exponent",
            ExponentBranch::OddAllDivisible => "odd-all-divisible",
            ExponentBranch::OddOtherwise => "odd-otherwise",
            ExponentBranch::TwoPrimeModulus => "two-prime-modulus",
            ExponentBranch::TwoOddExponent => "two-odd-exponent",
            ExponentBranch::TwoOnesAndEvens => "two-ones-and-evens",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedExponentSum {
    pub residue: u64,
    pub modulus: u64,
    pub branch: ExponentBranch,
    /// False for `p = 2`: that statement is evaluated as written but is not
    /// claimed to agree with the actual sums.
    pub endorsed: bool,
}

/// Evaluates the stated formula for the joint exponent sum verbatim.
pub fn printed_scalar_exponent_sum(profile: &ExponentProfile) -> PrintedExponentSum {
    let m = profile.modulus();
    let (p, s) = (profile.p, profile.s);
    let tau = profile.tau() as u64;
    let (residue, branch) = if profile.betas.contains(&0) {
        (0, ExponentBranch::ZeroExponent)
    } else if p != 2 {
        if profile.betas.iter().all(|&b| (b as u64).is_multiple_of(p - 1)) {
            let base = (m - p.pow(s - 1) % m) % m;
            (mod_pow(base, tau, m), ExponentBranch::OddAllDivisible)
        } else {
            (0, ExponentBranch::OddOtherwise)
        }
    } else if s == 1 {
        (1 % m, ExponentBranch::TwoPrimeModulus)
    } else if profile.betas.iter().any(|&b| b > 1 && b % 2 == 1) {
        (0, ExponentBranch::TwoOddExponent)
    } else {
        let sign = if profile.ones() % 2 == 1 { m - 1 } else { 1 };
        let mag = mod_pow(2u64.pow(s - 1), profile.evens() as u64, m);
        (
            (sign as u128 * mag as u128 % m as u128) as u64,
            ExponentBranch::TwoOnesAndEvens,
        )
    };
    PrintedExponentSum {
        residue,
        modulus: m,
        branch,
        endorsed: p != 2,
    }
}

/// Which module-theoretic vanishing statement applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GuaranteeRule {
    FreeOddI,
    FreeOddII,
    Free2I,
    Free2II,
    NonfreeOddI,
    NonfreeOddII,
    Nonfree2I,
    Nonfree2II,
    None,
}

impl GuaranteeRule {
    pub fn as_str(self) -> &'static str {
        match self {
            GuaranteeRule::FreeOddI => "free-odd-i",
            GuaranteeRule::FreeOddII => "free-odd-ii",
            GuaranteeRule::Free2I => "free-2-i",
            GuaranteeRule::Free2II => "free-2-ii",
            GuaranteeRule::NonfreeOddI => "nonfree-odd-i",
            GuaranteeRule::NonfreeOddII => "nonfree-odd-ii",
            GuaranteeRule::Nonfree2I => "nonfree-2-i",
            GuaranteeRule::Nonfree2II => "nonfree-2-ii",
            GuaranteeRule::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroGuarantee {
    pub guaranteed: bool,
    pub which: GuaranteeRule,
    pub p: u64,
    pub exponents: Vec<u32>,
    pub r: usize,
    pub d: usize,
    pub k: u32,
}

/// Decides whether `S_k^d(R) = 0` is guaranteed for a ring of characteristic
/// `p^{s_1}` whose minimal additive generators have orders `p^{s_i}`,
/// `s_1 >= ... >= s_r`. `None` means no guarantee, not a nonzero sum.
pub fn zero_guarantee(p: u64, exponents: &[u32], d: usize, k: u32) -> Result<ZeroGuarantee> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_k(k)?;
    if d < 2 {
        return Err(Error::InvalidParameter("zero guarantees need d >= 2"));
    }
    if exponents.is_empty()
        || exponents.contains(&0)
        || exponents.windows(2).any(|w| w[0] < w[1])
    {
        return Err(Error::InvalidParameter(
            "exponents must be positive and non-increasing",
        ));
    }
    let r = exponents.len();
    let s_first = exponents[0];
    let s_last = exponents[r - 1];
    let free = s_first == s_last;
    let rd2 = (r * d * d) as u64;
    let k64 = k as u64;
    let odd_small = |s: u32| s == 1 && (k64 < rd2 * (p - 1) || !k64.is_multiple_of(p - 1));
    let two_large = k64 <= rd2 || (k64 + rd2).is_multiple_of(2);
    let which = match (p == 2, free) {
        (false, true) if s_first > 1 => GuaranteeRule::FreeOddI,
        (false, true) if odd_small(s_first) => GuaranteeRule::FreeOddII,
        (false, false) if s_last > 1 => GuaranteeRule::NonfreeOddI,
        (false, false) if odd_small(s_last) => GuaranteeRule::NonfreeOddII,
        (true, true) if s_first > 1 && two_large => GuaranteeRule::Free2I,
        (true, true) if s_first == 1 && k64 < rd2 => GuaranteeRule::Free2II,
        (true, false) if s_last > 1 && two_large => GuaranteeRule::Nonfree2I,
        (true, false) if s_last == 1 && k64 < rd2 => GuaranteeRule::Nonfree2II,
        _ => GuaranteeRule::None,
    };
    Ok(ZeroGuarantee {
        guaranteed: which != GuaranteeRule::None,
        which,
        p,
        exponents: exponents.to_vec(),
        r,
        d,
        k,
    })
}

/// `(base^exp) * a` coordinatewise, without forming `base^exp`.
fn pow_multiple(spec: &RingSpec, a: &RingElement, base: u128, exp: u64) -> RingElement {
    let coeffs = a
        .coeffs()
        .iter()
        .zip(spec.orders())
        .map(|(&c, &m)| {
            let f = mod_pow((base % m as u128) as u64, exp, m);
            ((f as u128 * c as u128) % m as u128) as u64
        })
        .collect();
    spec.element(coeffs).expect("reduced coordinates")
}

/// `S_k^d(R_1 x R_2) = (card(R_2)^{d^2} S_1, card(R_1)^{d^2} S_2)` embedded in
/// the product ring (generators of `R_1` first).
pub fn combine_direct_product(
    r1: &RingSpec,
    s1: &Matrix,
    r2: &RingSpec,
    s2: &Matrix,
) -> Result<(RingSpec, Matrix)> {
    if s1.dim() != s2.dim() {
        return Err(Error::DimensionMismatch {
            left: s1.dim(),
            right: s2.dim(),
        });
    }
    let d = s1.dim();
    let product = direct_product(r1, r2)?;
    let exp = (d * d) as u64;
    let entries = s1
        .entries()
        .iter()
        .zip(s2.entries())
        .map(|(a, b)| {
            let mut c = pow_multiple(r1, a, r2.card(), exp).into_coeffs();
            c.extend(pow_multiple(r2, b, r1.card(), exp).into_coeffs());
            product.element(c)
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_entries(&product, d, entries)?;
    Ok((product, m))
}

/// The general vanishing pattern, without any commutativity requirement:
/// `diag(e, e)` when `d = 2`, `card ≡ 2 (mod 4)`, `1 < k ≡ 0, ±1 (mod 6)`
/// and the unique `e != 0` with `2e = 0` is idempotent; zero otherwise.
pub fn final_theorem_pattern(spec: &RingSpec, d: usize, k: u32) -> (Matrix, Branch) {
    if d == 2 && spec.card() % 4 == 2 && exceptional_exponent(k) {
        if let Order2::Unique {
            e,
            idempotent: true,
        } = find_order2_element(spec)
        {
            return (Matrix::scalar(spec, d, &e), Branch::FinalDiagonal);
        }
    }
    (Matrix::zero(spec, d), Branch::FinalZero)
}

/// Predicted `S_k^d(R)` for a finite commutative ring.
///
/// Proved routes are tried first: fields, rings isomorphic to `Z_n`, and the
/// module vanishing statements for prime-power characteristic. Anything else
/// falls back to [`final_theorem_pattern`] and is flagged
/// `conjecture_dependent`.
pub fn predict_ring_matrix_sum(
    spec: &RingSpec,
    d: usize,
    k: u32,
    budget: Budget,
) -> Result<ClosedFormResult> {
    if !spec.commutative() {
        return Err(Error::NonCommutative);
    }
    if d < 2 {
        return Err(Error::InvalidParameter("prediction needs d >= 2"));
    }
    check_k(k)?;

    // An undecidable field test (ring too large for a table) counts as unproved.
    if is_field(spec, budget).unwrap_or(false) {
        let one = spec.unit().or_else(|| crate::ring::find_unit(spec, budget).ok().flatten());
        let one = one.expect("fields are unital");
        let (value, branch) = if spec.card() == 2 && d == 2 && exceptional_exponent(k) {
            (Matrix::scalar(spec, d, &one), Branch::FieldMatrixExceptional)
        } else {
            (Matrix::zero(spec, d), Branch::FieldMatrixZero)
        };
        return Ok(ClosedFormResult::proved(spec.clone(), Value::Matrix(value), branch));
    }

    if let Some(n) = isomorphic_zn(spec, budget)? {
        let one = crate::ring::find_unit(spec, budget)?.expect("Z_n is unital");
        let (value, branch) = if d == 2 && n % 4 == 2 && exceptional_exponent(k) {
            let half = spec.scalar_mul(&one, (n / 2) as u128);
            (Matrix::scalar(spec, d, &half), Branch::ZnMatrixExceptional)
        } else {
            (Matrix::zero(spec, d), Branch::ZnMatrixZero)
        };
        return Ok(ClosedFormResult::proved(spec.clone(), Value::Matrix(value), branch));
    }

    if let Some(f) = invariant_factors(spec) {
        let g = zero_guarantee(f.p, &f.exponents, d, k)?;
        if g.guaranteed {
            return Ok(ClosedFormResult::proved(
                spec.clone(),
                Value::Matrix(Matrix::zero(spec, d)),
                Branch::ModuleGuarantee(g.which),
            ));
        }
    }

    let (value, branch) = final_theorem_pattern(spec, d, k);
    Ok(ClosedFormResult {
        ring: spec.clone(),
        value: Value::Matrix(value),
        branch,
        conjecture_dependent: true,
        primes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::builtin::{null_ring, trunc_poly};

    fn elem(r: &ClosedFormResult) -> &[u64] {
        match &r.value {
            Value::Element(e) => e.coeffs(),
            Value::Matrix(_) => panic!("expected element"),
        }
    }

    fn diag_entries(r: &ClosedFormResult) -> Vec<Vec<u64>> {
        match &r.value {
            Value::Matrix(m) => m.entries().iter().map(|e| e.coeffs().to_vec()).collect(),
            Value::Element(_) => panic!("expected matrix"),
        }
    }

    #[test]
    fn scalar_field_sums() {
        assert_eq!(elem(&field_scalar_sum(3, 2).unwrap()), &[2]);
        // -1 = 1 in characteristic 2.
        assert_eq!(elem(&field_scalar_sum(4, 3).unwrap()), &[1, 0]);
        let r = field_scalar_sum(5, 3).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.branch, Branch::FieldOtherwise);
        assert!(matches!(field_scalar_sum(6, 1), Err(Error::NotPrimePowerOf { q: 6 })));
    }

    #[test]
    fn scalar_zn_sums() {
        assert_eq!(elem(&zn_scalar_sum(4, 2).unwrap()), &[2]);
        assert_eq!(elem(&zn_scalar_sum(6, 2).unwrap()), &[1]);
        let r = zn_scalar_sum(12, 3).unwrap();
        assert_eq!((elem(&r), r.branch), (&[0u64][..], Branch::ZnVanishing));
        assert_eq!(zn_scalar_sum(6, 2).unwrap().primes, vec![2, 3]);
    }

    #[test]
    fn scalar_gaussian_sums() {
        let r = gaussian_scalar_sum(2, 3).unwrap();
        assert_eq!((elem(&r), r.branch), (&[1u64, 1][..], Branch::GaussianExceptional));
        let r = gaussian_scalar_sum(3, 8).unwrap();
        assert_eq!((elem(&r), r.primes.clone()), (&[2u64, 0][..], vec![3]));
        let r = gaussian_scalar_sum(5, 24).unwrap();
        assert!(r.is_zero() && r.primes.is_empty());
    }

    #[test]
    fn matrix_sums() {
        let r = field_matrix_sum(2, 2, 7).unwrap();
        assert_eq!(r.branch, Branch::FieldMatrixExceptional);
        assert_eq!(diag_entries(&r), vec![vec![1], vec![0], vec![0], vec![1]]);
        assert!(field_matrix_sum(3, 2, 8).unwrap().is_zero());
        assert!(field_matrix_sum(2, 3, 9).unwrap().is_zero());

        assert_eq!(
            diag_entries(&zn_matrix_sum(6, 2, 5).unwrap()),
            vec![vec![3], vec![0], vec![0], vec![3]]
        );
        assert_eq!(
            diag_entries(&zn_matrix_sum(10, 2, 7).unwrap()),
            vec![vec![5], vec![0], vec![0], vec![5]]
        );
        assert!(zn_matrix_sum(12, 2, 5).unwrap().is_zero());
        // d = 1 delegates to the scalar formula.
        assert_eq!(elem(&zn_matrix_sum(6, 1, 2).unwrap()), &[1]);
    }

    #[test]
    fn a017593_predicate_and_quaternions() {
        assert!(oeis_a017593_nonzero(6));
        assert!(!oeis_a017593_nonzero(12));
        assert!(oeis_a017593_nonzero(30));
        for (n, l) in [(2, 3), (6, 12), (4, 5)] {
            assert!(quaternion_sum(n, l).unwrap().is_zero());
        }
    }

    #[test]
    fn printed_exponent_sums() {
        let r = printed_scalar_exponent_sum(&ExponentProfile::new(3, 2, vec![2]).unwrap());
        assert_eq!((r.residue, r.modulus, r.endorsed), (6, 9, true));
        let r = printed_scalar_exponent_sum(&ExponentProfile::new(3, 1, vec![2, 2]).unwrap());
        assert_eq!(r.residue, 1);
        let r = printed_scalar_exponent_sum(&ExponentProfile::new(2, 3, vec![1, 2]).unwrap());
        assert_eq!((r.residue, r.branch, r.endorsed), (4, ExponentBranch::TwoOnesAndEvens, false));
        let p = ExponentProfile::new(2, 3, vec![1, 2, 3, 0]).unwrap();
        assert_eq!((p.ones(), p.evens(), p.tau()), (1, 1, 4));
        assert!(ExponentProfile::new(4, 1, vec![1]).is_err());
    }

    #[test]
    fn zero_guarantee_examples() {
        let g = zero_guarantee(3, &[2, 2], 2, 100).unwrap();
        assert_eq!((g.guaranteed, g.which), (true, GuaranteeRule::FreeOddI));
        let g = zero_guarantee(2, &[1, 1], 2, 3).unwrap();
        assert_eq!(g.which, GuaranteeRule::Free2II);
        let g = zero_guarantee(2, &[1], 2, 7).unwrap();
        assert_eq!((g.guaranteed, g.which), (false, GuaranteeRule::None));
        assert_eq!(zero_guarantee(3, &[2, 1], 2, 5).unwrap().which, GuaranteeRule::NonfreeOddII);
        assert_eq!(zero_guarantee(3, &[3, 2], 2, 5).unwrap().which, GuaranteeRule::NonfreeOddI);
        assert_eq!(zero_guarantee(2, &[2, 2], 2, 9).unwrap().which, GuaranteeRule::None);
        assert_eq!(zero_guarantee(2, &[2, 2], 2, 10).unwrap().which, GuaranteeRule::Free2I);
        assert_eq!(zero_guarantee(2, &[3, 2], 2, 8).unwrap().which, GuaranteeRule::Nonfree2I);
        assert_eq!(zero_guarantee(2, &[2, 1], 2, 7).unwrap().which, GuaranteeRule::Nonfree2II);
        assert!(zero_guarantee(2, &[1, 2], 2, 7).is_err());
    }

    #[test]
    fn direct_product_combination() {
        let z2 = zn(2).unwrap();
        let z3 = zn(3).unwrap();
        let s1 = Matrix::scalar(&z2, 2, &z2.unit().unwrap());
        let s2 = Matrix::zero(&z3, 2);
        let (prod, m) = combine_direct_product(&z2, &s1, &z3, &s2).unwrap();
        let e = prod.element(vec![1, 0]).unwrap();
        assert_eq!(m, Matrix::scalar(&prod, 2, &e));

        let z4 = zn(4).unwrap();
        let (_, m) = combine_direct_product(&z2, &s1, &z4, &Matrix::zero(&z4, 2)).unwrap();
        assert!(m.entries().iter().all(|x| x.coeffs()[0] == 0));
        assert!(combine_direct_product(&z2, &s1, &z3, &Matrix::zero(&z3, 3)).is_err());
    }

    #[test]
    fn predictions() {
        let b = Budget::default();
        let r = predict_ring_matrix_sum(&zn(6).unwrap(), 2, 5, b).unwrap();
        assert_eq!(diag_entries(&r), vec![vec![3], vec![0], vec![0], vec![3]]);
        assert!(!r.conjecture_dependent);

        let nz = direct_product(&null_ring(2).unwrap(), &zn(3).unwrap()).unwrap();
        let r = predict_ring_matrix_sum(&nz, 2, 5, b).unwrap();
        assert!(r.is_zero() && r.conjecture_dependent);

        let r = predict_ring_matrix_sum(&gf_q(4).unwrap(), 2, 9, b).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.branch, Branch::FieldMatrixZero);

        let r = predict_ring_matrix_sum(&trunc_poly(2, 1, 2).unwrap(), 2, 3, b).unwrap();
        assert_eq!(r.branch, Branch::ModuleGuarantee(GuaranteeRule::Free2II));

        assert_eq!(
            predict_ring_matrix_sum(&quaternion(3).unwrap(), 2, 5, b),
            Err(Error::NonCommutative)
        );
    }
}

//! Built-in ring families.
//!
//! Every constructor returns a spec that has passed `validate_spec`.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::spec::RingSpec;
use crate::arith::{is_prime, prime_power};
use crate::{Error, Result};

/// A built-in family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Zn(u64),
    Gf { p: u64, m: u32 },
    Gaussian(u64),
    Quaternion(u64),
    NullRing(u64),
    TruncPoly { p: u64, s: u32, degree: usize },
    DirectProduct(Box<RingSpec>, Box<RingSpec>),
    /// Upper triangular 2x2 matrices over `Z_n`.
    UpperTriangular(u64),
    /// Full 2x2 matrices over `Z_n`.
    Matrix2(u64),
}

pub fn builtin(family: &Family) -> Result<RingSpec> {
    match family {
        Family::Zn(n) => zn(*n),
        Family::Gf { p, m } => gf(*p, *m),
        Family::Gaussian(n) => gaussian(*n),
        Family::Quaternion(n) => quaternion(*n),
        Family::NullRing(m) => null_ring(*m),
        Family::TruncPoly { p, s, degree } => trunc_poly(*p, *s, *degree),
        Family::DirectProduct(a, b) => direct_product(a, b),
        Family::UpperTriangular(n) => upper_triangular(*n),
        Family::Matrix2(n) => matrix2(*n),
    }
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter("modulus must be at least 2"));
    }
    Ok(())
}

/// Table with every entry zero.
fn zero_table(r: usize) -> Vec<Vec<Vec<u64>>> {
    vec![vec![vec![0; r]; r]; r]
}

/// `Z/nZ`: one generator with `g^2 = g`.
pub fn zn(n: u64) -> Result<RingSpec> {
    check_modulus(n)?;
    RingSpec::new(format!("Z{n}"), vec![n], vec![vec![vec![1]]], true, Some(vec![1]))?.validated()
}

/// Monic irreducible polynomial of degree `m` over `F_p` with the smallest
/// encoding `sum c_i p^i` of its lower coefficients, found by trial
/// division. Coefficients are returned low to high, including the leading 1.
pub fn smallest_irreducible(p: u64, m: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("extension degree must be at least 1"));
    }
    let m = m as usize;
    let mut lower = vec![0u64; m];
    loop {
        let mut f = lower.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return Ok(f);
        }
        // Odometer with c_0 least significant.
        let mut i = 0;
        loop {
            if i == m {
                unreachable!("irreducible polynomials exist in every degree");
            }
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
        }
    }
}

/// Remainder of `a` modulo the monic polynomial `b` over `F_p`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (k, &c) in b.iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p - lead) * c) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for dd in 1..=deg / 2 {
        let mut lower = vec![0u64; dd];
        loop {
            let mut g = lower.clone();
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
            let mut i = 0;
            while i < dd {
                lower[i] += 1;
                if lower[i] < p {
                    break;
                }
                lower[i] = 0;
                i += 1;
            }
            if i == dd {
                break;
            }
        }
    }
    true
}

/// `F_{p^m}` with basis `1, x, ..., x^{m-1}` modulo [`smallest_irreducible`].
pub fn gf(p: u64, m: u32) -> Result<RingSpec> {
    let f = smallest_irreducible(p, m)?;
    let m = m as usize;
    // x^e mod f for e < 2m - 1.
    let powers: Vec<Vec<u64>> = (0..2 * m - 1)
        .map(|e| {
            let mut mono = vec![0u64; e + 1];
            mono[e] = 1;
            let mut r = poly_rem(&mono, &f, p);
            r.resize(m, 0);
            r
        })
        .collect();
    let products = (0..m)
        .map(|i| (0..m).map(|j| powers[i + j].clone()).collect())
        .collect();
    let mut unit = vec![0; m];
    unit[0] = 1;
    let q = p.pow(m as u32);
    RingSpec::new(format!("GF({q})"), vec![p; m], products, true, Some(unit))?.validated()
}

/// `F_q` for a prime power `q`.
pub fn gf_q(q: u64) -> Result<RingSpec> {
    let (p, m) = prime_power(q).ok_or(Error::NotPrimePowerOf { q })?;
    gf(p, m)
}

/// `Z_n[i]` with basis `1, i` and `i^2 = -1`.
pub fn gaussian(n: u64) -> Result<RingSpec> {
    check_modulus(n)?;
    let products = vec![
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![0, 1], vec![n - 1, 0]],
    ];
    RingSpec::new(format!("Z{n}[i]"), vec![n, n], products, true, Some(vec![1, 0]))?.validated()
}

/// Hamilton quaternions `Z_n[i,j,k]` with basis `1, i, j, k`.
pub fn quaternion(n: u64) -> Result<RingSpec> {
    check_modulus(n)?;
    let neg = n - 1;
    // (unit index, sign) of basis products, sign true = negative.
    const TABLE: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let products = TABLE
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(idx, negative)| {
                    let mut c = vec![0; 4];
                    c[idx] = if negative { neg } else { 1 };
                    c
                })
                .collect()
        })
        .collect();
    RingSpec::new(
        format!("Z{n}[i,j,k]"),
        vec![n; 4],
        products,
        false,
        Some(vec![1, 0, 0, 0]),
    )?
    .validated()
}

/// One generator of order `m` with `g^2 = 0`.
pub fn null_ring(m: u64) -> Result<RingSpec> {
    check_modulus(m)?;
    RingSpec::new(format!("Null({m})"), vec![m], zero_table(1), true, None)?.validated()
}

/// `Z_{p^s}[x]/(x^degree)` with basis `1, x, ..., x^{degree-1}`.
pub fn trunc_poly(p: u64, s: u32, degree: usize) -> Result<RingSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s == 0 || degree == 0 {
        return Err(Error::InvalidParameter("exponent and degree must be at least 1"));
    }
    let n = p
        .checked_pow(s)
        .filter(|&n| n <= super::spec::MAX_ORDER)
        .ok_or(Error::InvalidParameter("p^s too large"))?;
    let mut products = zero_table(degree);
    for (i, row) in products.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            if i + j < degree {
                c[i + j] = 1;
            }
        }
    }
    let mut unit = vec![0; degree];
    unit[0] = 1;
    RingSpec::new(
        format!("Z{n}[x]/(x^{degree})"),
        vec![n; degree],
        products,
        true,
        Some(unit),
    )?
    .validated()
}

/// Componentwise product; generators of `a` come first.
pub fn direct_product(a: &RingSpec, b: &RingSpec) -> Result<RingSpec> {
    let (ra, rb) = (a.rank(), b.rank());
    let r = ra + rb;
    let mut products = zero_table(r);
    for i in 0..ra {
        for j in 0..ra {
            products[i][j][..ra].copy_from_slice(a.product(i, j));
        }
    }
    for i in 0..rb {
        for j in 0..rb {
            products[ra + i][ra + j][ra..].copy_from_slice(b.product(i, j));
        }
    }
    let mut orders = a.orders().to_vec();
    orders.extend_from_slice(b.orders());
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => {
            let mut u = ua.into_coeffs();
            u.extend(ub.into_coeffs());
            Some(u)
        }
        _ => None,
    };
    RingSpec::new(
        format!("{a} x {b}"),
        orders,
        products,
        a.commutative() && b.commutative(),
        unit,
    )?
    .validated()
}

/// Basis `e11, e12, e22` of upper triangular 2x2 matrices over `Z_n`.
pub fn upper_triangular(n: u64) -> Result<RingSpec> {
    check_modulus(n)?;
    let mut products = zero_table(3);
    products[0][0][0] = 1; // e11 e11 = e11
    products[0][1][1] = 1; // e11 e12 = e12
    products[1][2][1] = 1; // e12 e22 = e12
    products[2][2][2] = 1; // e22 e22 = e22
    RingSpec::new(
        format!("T2(Z{n})"),
        vec![n; 3],
        products,
        false,
        Some(vec![1, 0, 1]),
    )?
    .validated()
}

/// Matrix units `E11, E12, E21, E22` of `M_2(Z_n)`; `E_ab E_cd = [b = c] E_ad`.
pub fn matrix2(n: u64) -> Result<RingSpec> {
    check_modulus(n)?;
    let mut products = zero_table(4);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b == c {
                        products[2 * a + b][2 * c + d][2 * a + d] = 1;
                    }
                }
            }
        }
    }
    RingSpec::new(
        format!("M2(Z{n})"),
        vec![n; 4],
        products,
        false,
        Some(vec![1, 0, 0, 1]),
    )?
    .validated()
}

//! Integer helpers: gcd, modular powers, trial-division factoring.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// `base^exp mod m`, with `m >= 1`.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Splits `q = p^m` with `p` prime and `m >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

/// Exponent `s` with `p^s = n`, if `n` is a power of `p` (including `p^0 = 1`).
pub fn exact_log(p: u64, mut n: u64) -> Option<u32> {
    if p < 2 || n == 0 {
        return None;
    }
    let mut s = 0;
    while n.is_multiple_of(p) {
        n /= p;
        s += 1;
    }
    (n == 1).then_some(s)
}

/// `base^exp` in `u128`, `None` on overflow.
pub fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Multinomial coefficient `(sum k_i)! / prod k_i!`, `None` on overflow.
pub fn multinomial(parts: &[usize]) -> Option<u128> {
    let mut total: u128 = 0;
    let mut acc: u128 = 1;
    for &k in parts {
        for j in 1..=k as u128 {
            total += 1;
            // acc * total / j stays integral: acc is a product of binomials.
            acc = acc.checked_mul(total)? / j;
        }
    }
    Some(acc)
}

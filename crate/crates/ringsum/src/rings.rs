//! Ring expressions for the command line and the default ring sets.
//!
//! An expression is one or more factors joined by `x`, each factor a
//! family name with colon-separated parameters: `zn:6`, `gf:9`,
//! `gaussian:3`, `quaternion:2`, `null:2`, `trunc:2:1:2` (`Z_{p^s}[x]/(x^deg)`),
//! `t2:3` (upper triangular `2 x 2` over `Z_n`), `m2:2` (`M_2(Z_n)`).
//! `null:2xzn:3` is `Null(2) x Z_3`.

use ringsum_core::ring::builtin::*;
use ringsum_core::ring::RingSpec;

use crate::{Error, Result};

fn factor(term: &str) -> Result<RingSpec> {
    let mut parts = term.split(':');
    let family = parts.next().unwrap_or_default();
    let args: Vec<u64> = parts
        .map(|p| {
            p.parse()
                .map_err(|_| Error::config(format!("bad parameter {p:?} in {term:?}")))
        })
        .collect::<Result<_>>()?;
    let spec = match (family, args.as_slice()) {
        ("zn", &[n]) => zn(n),
        ("gf", &[q]) => gf_q(q),
        ("gaussian", &[n]) => gaussian(n),
        ("quaternion", &[n]) => quaternion(n),
        ("null", &[m]) => null_ring(m),
        ("trunc", &[p, s, deg]) => {
            let s = u32::try_from(s).map_err(|_| Error::config("exponent too large"))?;
            trunc_poly(p, s, deg as usize)
        }
        ("t2", &[n]) => upper_triangular(n),
        ("m2", &[n]) => matrix2(n),
        _ => return Err(Error::config(format!("unknown ring factor {term:?}"))),
    };
    Ok(spec?)
}

pub fn parse_ring(expr: &str) -> Result<RingSpec> {
    let mut factors = expr.split('x').map(str::trim);
    let first = factors
        .next()
        .filter(|s| !s.is_empty())
        .ok_or_else(|| Error::config("empty ring expression"))?;
    let mut spec = factor(first)?;
    for f in factors {
        spec = direct_product(&spec, &factor(f)?)?;
    }
    Ok(spec)
}

/// Commutative rings covering both sides of every condition of the
/// diagonal pattern: free and non-free, idempotent and non-idempotent `e`,
/// `card ≡ 2 (mod 4)` or not. Duplicates by name are dropped.
pub fn default_catalog() -> Vec<RingSpec> {
    let mut out: Vec<RingSpec> = Vec::new();
    let mut push = |spec: RingSpec| {
        if out.iter().all(|s| s.name() != spec.name()) {
            out.push(spec);
        }
    };
    for n in 2..=20 {
        push(zn(n).expect("valid modulus"));
    }
    for q in [2, 3, 4, 5, 7, 8, 9] {
        push(gf_q(q).expect("prime power"));
    }
    for expr in [
        "zn:4",
        "zn:8",
        "trunc:2:1:2",
        "trunc:3:1:2",
        "gf:4",
        "zn:2xzn:3",
        "zn:2xzn:9",
        "zn:6",
        "zn:10",
        "null:2",
        "null:2xzn:3",
        "gaussian:2",
        "gaussian:3",
        "gaussian:4",
        "gaussian:5",
    ] {
        push(parse_ring(expr).expect("catalog expression"));
    }
    out
}

/// Rings for the non-commutative probe; `Null(2)` is a commutative control.
pub fn noncommutative_probe_set() -> Vec<RingSpec> {
    ["quaternion:2", "quaternion:3", "m2:2", "t2:2", "null:2"]
        .iter()
        .map(|e| parse_ring(e).expect("probe expression"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        assert_eq!(parse_ring("zn:6").unwrap(), zn(6).unwrap());
        let p = parse_ring("null:2 x zn:3").unwrap();
        assert_eq!(p.name(), "Null(2) x Z3");
        assert_eq!(p.card(), 6);
        assert_eq!(parse_ring("trunc:2:1:2").unwrap().name(), "Z2[x]/(x^2)");
        assert!(parse_ring("zn:1").is_err());
        assert!(parse_ring("foo:2").is_err());
        assert!(parse_ring("zn:a").is_err());
        assert!(parse_ring("").is_err());
    }

    #[test]
    fn catalog_is_commutative_and_distinct() {
        let cat = default_catalog();
        assert_eq!(cat.len(), 36);
        assert!(cat.iter().all(|s| s.commutative()));
        assert_eq!(noncommutative_probe_set().len(), 5);
    }
}

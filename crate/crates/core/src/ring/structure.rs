//! Structural queries on a spec: characteristic, invariant factors, the
//! distinguished element of additive order 2, units and fields.

use alloc::vec::Vec;

use super::enumerate::Budget;
use super::spec::{RingElement, RingSpec};
use super::table::CayleyTable;
use crate::arith::{exact_log, gcd, is_prime, lcm, prime_power};
use crate::Result;

/// Outcome of searching for `e != 0` with `2e = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order2 {
    None,
    Unique { e: RingElement, idempotent: bool },
    /// More than one such element; `count` of them.
    NotUnique { count: u128 },
}

/// Elements with `2e = 0` have every coordinate in `{0, m_t/2}`, so the
/// candidates are generated directly instead of scanning the whole ring.
pub fn find_order2_element(spec: &RingSpec) -> Order2 {
    let even: Vec<usize> = spec
        .orders()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m % 2 == 0)
        .map(|(t, _)| t)
        .collect();
    match even.len() {
        0 => Order2::None,
        1 => {
            let t = even[0];
            let mut c = alloc::vec![0; spec.rank()];
            c[t] = spec.orders()[t] / 2;
            let e = RingElement::from_raw(c);
            let idempotent = spec.mul_unchecked(&e, &e) == e;
            Order2::Unique { e, idempotent }
        }
        k => Order2::NotUnique {
            count: (1u128 << k) - 1,
        },
    }
}

/// Additive exponent of the ring: `lcm(m_1, ..., m_r)`.
pub fn characteristic(spec: &RingSpec) -> u64 {
    spec.orders().iter().fold(1, |acc, &m| lcm(acc, m))
}

pub fn additive_order(spec: &RingSpec, a: &RingElement) -> u64 {
    a.coeffs()
        .iter()
        .zip(spec.orders())
        .fold(1, |acc, (&c, &m)| lcm(acc, m / gcd(c, m)))
}

/// Invariant-factor data of a ring of prime-power characteristic `p^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactors {
    pub p: u64,
    /// `s_1 >= s_2 >= ... >= s_r`, with `p^{s_i}` the generator orders.
    pub exponents: Vec<u32>,
}

impl InvariantFactors {
    /// Free over `Z_{p^s}` exactly when all exponents agree.
    pub fn is_free(&self) -> bool {
        self.exponents.windows(2).all(|w| w[0] == w[1])
    }
}

/// When every generator order is a power of one prime `p`, the additive
/// group is `Z_{p^{s_1}} x ... x Z_{p^{s_r}}` and the generators form a
/// minimal generating set; otherwise `None`.
pub fn invariant_factors(spec: &RingSpec) -> Option<InvariantFactors> {
    let (p, _) = prime_power(characteristic(spec))?;
    let mut exponents: Vec<u32> = spec
        .orders()
        .iter()
        .map(|&m| exact_log(p, m))
        .collect::<Option<_>>()?;
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    Some(InvariantFactors { p, exponents })
}

/// The claimed unit if any, else a two-sided identity found by scanning.
pub fn find_unit(spec: &RingSpec, budget: Budget) -> Result<Option<RingElement>> {
    if let Some(u) = spec.unit() {
        return Ok(Some(u));
    }
    let gens: Vec<RingElement> = (0..spec.rank()).map(|i| spec.generator(i)).collect();
    for u in super::enumerate::enumerate_elements(spec, budget)? {
        if gens
            .iter()
            .all(|g| spec.mul_unchecked(&u, g) == *g && spec.mul_unchecked(g, &u) == *g)
        {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// `Some(n)` when the ring is isomorphic to `Z/nZ`: it has a unit whose
/// additive order equals the cardinality, so the unit generates everything.
pub fn isomorphic_zn(spec: &RingSpec, budget: Budget) -> Result<Option<u64>> {
    let Some(u) = find_unit(spec, budget)? else {
        return Ok(None);
    };
    let order = additive_order(spec, &u);
    Ok((order as u128 == spec.card()).then_some(order))
}

/// Whether the ring is a field: commutative, unital with `1 != 0`, prime
/// characteristic, and every nonzero element invertible.
pub fn is_field(spec: &RingSpec, budget: Budget) -> Result<bool> {
    if !spec.commutative() || !is_prime(characteristic(spec)) {
        return Ok(false);
    }
    let Some(u) = find_unit(spec, budget)? else {
        return Ok(false);
    };
    if spec.is_zero(&u) {
        return Ok(false);
    }
    budget.check(Some(spec.card() * spec.card()))?;
    let table = CayleyTable::new(spec)?;
    let one = spec.index_of(&u) as u32;
    let zero = 0u32;
    let card = table.card() as u32;
    Ok((0..card)
        .filter(|&a| a != zero)
        .all(|a| (0..card).any(|b| table.mul(a, b) == one)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::builtin::*;
    use alloc::vec;

    #[test]
    fn order2_elements() {
        let z6 = zn(6).unwrap();
        assert_eq!(
            find_order2_element(&z6),
            Order2::Unique {
                e: z6.element(vec![3]).unwrap(),
                idempotent: true
            }
        );
        assert_eq!(find_order2_element(&zn(5).unwrap()), Order2::None);
        let n2 = null_ring(2).unwrap();
        assert_eq!(
            find_order2_element(&n2),
            Order2::Unique {
                e: n2.generator(0),
                idempotent: false
            }
        );
        assert_eq!(
            find_order2_element(&gf(2, 2).unwrap()),
            Order2::NotUnique { count: 3 }
        );
        // Z_2 x Z_3: e = (1, 0).
        let p = direct_product(&zn(2).unwrap(), &zn(3).unwrap()).unwrap();
        assert!(matches!(
            find_order2_element(&p),
            Order2::Unique { ref e, idempotent: true } if e.coeffs() == [1, 0]
        ));
    }

    #[test]
    fn order2_matches_exhaustive_scan() {
        for spec in [
            zn(12).unwrap(),
            gaussian(6).unwrap(),
            trunc_poly(2, 2, 2).unwrap(),
            direct_product(&null_ring(2).unwrap(), &zn(9).unwrap()).unwrap(),
        ] {
            let hits: Vec<RingElement> = (0..spec.card() as u64)
                .map(|i| spec.element_at(i))
                .filter(|e| !spec.is_zero(e) && spec.is_zero(&spec.add(e, e).unwrap()))
                .collect();
            match find_order2_element(&spec) {
                Order2::None => assert!(hits.is_empty()),
                Order2::Unique { e, .. } => assert_eq!(hits, vec![e]),
                Order2::NotUnique { count } => assert_eq!(hits.len() as u128, count),
            }
        }
    }

    #[test]
    fn invariant_factor_data() {
        let f = invariant_factors(&gf(3, 2).unwrap()).unwrap();
        assert_eq!((f.p, f.exponents.clone(), f.is_free()), (3, vec![1, 1], true));
        assert!(invariant_factors(&zn(6).unwrap()).is_none());
        let mixed = direct_product(&zn(2).unwrap(), &zn(4).unwrap()).unwrap();
        let f = invariant_factors(&mixed).unwrap();
        assert_eq!(f.exponents, vec![2, 1]);
        assert!(!f.is_free());
    }

    #[test]
    fn fields_and_cyclic_rings() {
        let b = Budget::default();
        assert!(is_field(&gf(3, 2).unwrap(), b).unwrap());
        assert!(is_field(&gaussian(3).unwrap(), b).unwrap());
        assert!(!is_field(&gaussian(5).unwrap(), b).unwrap());
        assert!(!is_field(&zn(4).unwrap(), b).unwrap());
        assert!(!is_field(&null_ring(2).unwrap(), b).unwrap());
        assert!(is_field(&zn(7).unwrap(), b).unwrap());

        let z2z3 = direct_product(&zn(2).unwrap(), &zn(3).unwrap()).unwrap();
        assert_eq!(isomorphic_zn(&z2z3, b).unwrap(), Some(6));
        let z2z2 = direct_product(&zn(2).unwrap(), &zn(2).unwrap()).unwrap();
        assert_eq!(isomorphic_zn(&z2z2, b).unwrap(), None);
        assert_eq!(isomorphic_zn(&null_ring(3).unwrap(), b).unwrap(), None);
        // Unit found by scanning when not claimed.
        let unclaimed = RingSpec::new("z3", vec![3], vec![vec![vec![2]]], true, None).unwrap();
        assert_eq!(find_unit(&unclaimed, b).unwrap().unwrap().coeffs(), &[2]);
        assert_eq!(isomorphic_zn(&unclaimed, b).unwrap(), Some(3));
    }
}

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest admissible generator order. Keeps every product of two reduced
/// coefficients inside `u64`.
pub const MAX_ORDER: u64 = 1 << 31;

/// A finite ring presented by additive generators `g_1..g_r`.
///
/// Generator `g_i` has additive order `orders[i]`, so the additive group is
/// `Z_{m_1} x ... x Z_{m_r}` and an element is a coefficient vector. The
/// product `g_i g_j` is the coefficient vector `products[i][j]`; general
/// products are the bilinear extension. Neither commutativity nor a unit is
/// assumed; both are explicit claims checked by [`validate_spec`].
///
/// [`validate_spec`]: crate::ring::validate_spec
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    name: String,
    orders: Vec<u64>,
    products: Vec<Vec<Vec<u64>>>,
    commutative: bool,
    unit: Option<Vec<u64>>,
}

/// Coefficient vector of an element with respect to a spec's generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement(Vec<u64>);

impl RingElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.0
    }

    pub(crate) fn from_raw(coeffs: Vec<u64>) -> Self {
        RingElement(coeffs)
    }
}

fn check_vector(what: &'static str, v: &[u64], orders: &[u64]) -> Result<()> {
    if v.len() != orders.len() {
        return Err(Error::Shape {
            what,
            expected: orders.len(),
            got: v.len(),
        });
    }
    for (position, (&value, &modulus)) in v.iter().zip(orders).enumerate() {
        if value >= modulus {
            return Err(Error::Unreduced {
                what,
                position,
                value,
                modulus,
            });
        }
    }
    Ok(())
}

impl RingSpec {
    /// Builds a spec after structural checks only (orders, table shape,
    /// reduced coefficients). Ring laws are checked by `validate_spec`.
    pub fn new(
        name: impl Into<String>,
        orders: Vec<u64>,
        products: Vec<Vec<Vec<u64>>>,
        commutative: bool,
        unit: Option<Vec<u64>>,
    ) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::Shape {
                what: "orders",
                expected: 1,
                got: 0,
            });
        }
        for (index, &order) in orders.iter().enumerate() {
            if !(2..=MAX_ORDER).contains(&order) {
                return Err(Error::InvalidOrder { index, order });
            }
        }
        let r = orders.len();
        if products.len() != r {
            return Err(Error::Shape {
                what: "products rows",
                expected: r,
                got: products.len(),
            });
        }
        for row in &products {
            if row.len() != r {
                return Err(Error::Shape {
                    what: "products columns",
                    expected: r,
                    got: row.len(),
                });
            }
            for c in row {
                check_vector("product coefficients", c, &orders)?;
            }
        }
        if let Some(u) = &unit {
            check_vector("unit", u, &orders)?;
        }
        Ok(RingSpec {
            name: name.into(),
            orders,
            products,
            commutative,
            unit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn products(&self) -> &[Vec<Vec<u64>>] {
        &self.products
    }

    /// Structure constants of `g_i * g_j` (0-based).
    pub fn product(&self, i: usize, j: usize) -> &[u64] {
        &self.products[i][j]
    }

    pub fn commutative(&self) -> bool {
        self.commutative
    }

    pub fn unit(&self) -> Option<RingElement> {
        self.unit.clone().map(RingElement)
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `card(R) = prod m_i`, saturating at `u128::MAX`.
    pub fn card(&self) -> u128 {
        self.orders
            .iter()
            .fold(1u128, |acc, &m| acc.saturating_mul(m as u128))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn element(&self, coeffs: Vec<u64>) -> Result<RingElement> {
        check_vector("element", &coeffs, &self.orders)?;
        Ok(RingElement(coeffs))
    }

    /// Reduces arbitrary integer coordinates into an element.
    pub fn element_reduced(&self, coeffs: &[i64]) -> Result<RingElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::Shape {
                what: "element",
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        Ok(RingElement(
            coeffs
                .iter()
                .zip(&self.orders)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
                .collect(),
        ))
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![0; self.rank()])
    }

    pub fn generator(&self, i: usize) -> RingElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        RingElement(c)
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    fn conforms(&self, a: &RingElement) -> Result<()> {
        check_vector("element", &a.0, &self.orders)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.conforms(a)?;
        self.conforms(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        self.conforms(a)?;
        Ok(RingElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&c, &m)| (m - c) % m)
                .collect(),
        ))
    }

    /// Bilinear extension of the structure constants:
    /// `a * b = sum_{i,j} a_i b_j (g_i g_j)`.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.conforms(a)?;
        self.conforms(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    /// Integer multiple `n * a`.
    pub fn scalar_mul(&self, a: &RingElement, n: u128) -> RingElement {
        RingElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&c, &m)| ((n % m as u128) * c as u128 % m as u128) as u64)
                .collect(),
        )
    }

    pub(crate) fn add_unchecked(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        )
    }

    pub(crate) fn add_assign_unchecked(&self, acc: &mut RingElement, b: &RingElement) {
        for ((x, &y), &m) in acc.0.iter_mut().zip(&b.0).zip(&self.orders) {
            *x = (*x + y) % m;
        }
    }

    pub(crate) fn mul_unchecked(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = vec![0u64; self.rank()];
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let ab = ai * bj;
                for (t, (&c, &m)) in self.products[i][j].iter().zip(&self.orders).enumerate() {
                    if c != 0 {
                        out[t] = (out[t] + (ab % m) * c) % m;
                    }
                }
            }
        }
        RingElement(out)
    }

    /// Position of `a` in odometer order: coordinate 0 is the most
    /// significant digit.
    pub fn index_of(&self, a: &RingElement) -> u64 {
        a.0.iter()
            .zip(&self.orders)
            .fold(0u64, |acc, (&c, &m)| acc * m + c)
    }

    /// Inverse of [`RingSpec::index_of`]; `index < card`.
    pub fn element_at(&self, mut index: u64) -> RingElement {
        let mut c = vec![0; self.rank()];
        for (slot, &m) in c.iter_mut().zip(&self.orders).rev() {
            *slot = index % m;
            index /= m;
        }
        RingElement(c)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A ring law checked by [`validate_spec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    WellDefinedness,
    Associativity,
    Commutativity,
    Unit,
}

impl Law {
    pub fn as_str(self) -> &'static str {
        match self {
            Law::WellDefinedness => "well-definedness",
            Law::Associativity => "associativity",
            Law::Commutativity => "commutativity",
            Law::Unit => "unit",
        }
    }
}

/// A violated law with 1-based generator indices as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.law.as_str(), self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// Whether `g_i g_j = g_j g_i` holds for all generator pairs, whatever
    /// the spec claims.
    pub observed_commutative: bool,
}

/// Checks well-definedness of the structure constants, associativity on
/// generator triples, and the commutativity and unit claims.
pub fn validate_spec(spec: &RingSpec) -> ValidationReport {
    let r = spec.rank();
    let m = spec.orders();
    let mut violations = Vec::new();

    // m_i g_i = 0 must force m_i (g_i g_j) = 0, and likewise for g_j.
    for i in 0..r {
        for j in 0..r {
            for (t, &c) in spec.product(i, j).iter().enumerate() {
                if !(m[i] as u128 * c as u128).is_multiple_of(m[t] as u128)
                    || !(m[j] as u128 * c as u128).is_multiple_of(m[t] as u128)
                {
                    violations.push(Violation {
                        law: Law::WellDefinedness,
                        witness: vec![i + 1, j + 1, t + 1],
                    });
                }
            }
        }
    }

    let gens: Vec<RingElement> = (0..r).map(|i| spec.generator(i)).collect();
    let prod: Vec<Vec<RingElement>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| RingElement(spec.product(i, j).to_vec()))
                .collect()
        })
        .collect();
    for i in 0..r {
        for j in 0..r {
            for t in 0..r {
                let left = spec.mul_unchecked(&prod[i][j], &gens[t]);
                let right = spec.mul_unchecked(&gens[i], &prod[j][t]);
                if left != right {
                    violations.push(Violation {
                        law: Law::Associativity,
                        witness: vec![i + 1, j + 1, t + 1],
                    });
                }
            }
        }
    }

    let mut observed_commutative = true;
    for i in 0..r {
        for j in (i + 1)..r {
            if spec.product(i, j) != spec.product(j, i) {
                observed_commutative = false;
                if spec.commutative() {
                    violations.push(Violation {
                        law: Law::Commutativity,
                        witness: vec![i + 1, j + 1],
                    });
                }
            }
        }
    }

    if let Some(u) = spec.unit() {
        for (i, g) in gens.iter().enumerate() {
            if spec.mul_unchecked(&u, g) != *g || spec.mul_unchecked(g, &u) != *g {
                violations.push(Violation {
                    law: Law::Unit,
                    witness: vec![i + 1],
                });
            }
        }
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
        observed_commutative,
    }
}

impl RingSpec {
    /// Runs [`validate_spec`] and turns violations into an error.
    pub fn validated(self) -> Result<Self> {
        let report = validate_spec(&self);
        if report.ok {
            Ok(self)
        } else {
            Err(Error::LawViolation(report))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6() -> RingSpec {
        RingSpec::new("Z6", vec![6], vec![vec![vec![1]]], true, Some(vec![1])).unwrap()
    }

    #[test]
    fn z6_arithmetic() {
        let r = z6();
        assert!(validate_spec(&r).ok);
        let a = r.element(vec![4]).unwrap();
        let b = r.element(vec![5]).unwrap();
        assert_eq!(r.add(&a, &b).unwrap().coeffs(), &[3]);
        assert_eq!(r.mul(&a, &b).unwrap().coeffs(), &[2]);
        assert_eq!(r.neg(&a).unwrap().coeffs(), &[2]);
        assert_eq!(r.neg(&r.zero()).unwrap().coeffs(), &[0]);
    }

    #[test]
    fn structural_errors_are_distinct_from_law_violations() {
        assert!(matches!(
            RingSpec::new("bad", vec![1], vec![vec![vec![0]]], true, None),
            Err(Error::InvalidOrder { index: 0, order: 1 })
        ));
        assert!(matches!(
            RingSpec::new("bad", vec![2, 2], vec![vec![vec![0, 0]]], true, None),
            Err(Error::Shape { .. })
        ));
        assert!(matches!(
            RingSpec::new("bad", vec![2], vec![vec![vec![2]]], true, None),
            Err(Error::Unreduced { value: 2, .. })
        ));
        assert!(matches!(
            RingSpec::new("bad", vec![3], vec![vec![vec![1]]], true, Some(vec![1, 0])),
            Err(Error::Shape { what: "unit", .. })
        ));
    }

    #[test]
    fn well_definedness_violation_has_witness() {
        // g1 of order 2 with g1*g1 = g2 in Z_4: 2*(g1*g1) = 2 g2 != 0.
        let spec = RingSpec::new(
            "bad",
            vec![2, 4],
            vec![
                vec![vec![0, 1], vec![0, 0]],
                vec![vec![0, 0], vec![0, 0]],
            ],
            true,
            None,
        )
        .unwrap();
        let report = validate_spec(&spec);
        assert!(!report.ok);
        assert!(report.violations.contains(&Violation {
            law: Law::WellDefinedness,
            witness: vec![1, 1, 2],
        }));
        assert!(matches!(spec.validated(), Err(Error::LawViolation(_))));
    }

    #[test]
    fn one_generator_rings_are_commutative_either_way() {
        for flag in [false, true] {
            let spec = RingSpec::new("idem", vec![2], vec![vec![vec![1]]], flag, None).unwrap();
            let report = validate_spec(&spec);
            assert!(report.ok);
            assert!(report.observed_commutative);
        }
    }

    #[test]
    fn false_claims_are_reported() {
        // Z_2 with "unit" 0.
        let spec = RingSpec::new("z2", vec![2], vec![vec![vec![1]]], true, Some(vec![0])).unwrap();
        let report = validate_spec(&spec);
        assert_eq!(report.violations[0].law, Law::Unit);

        // g1 g2 = g2 but g2 g1 = 0, claimed commutative.
        let spec = RingSpec::new(
            "left",
            vec![2, 2],
            vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 0], vec![0, 0]],
            ],
            true,
            None,
        )
        .unwrap();
        let report = validate_spec(&spec);
        assert!(!report.observed_commutative);
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == Law::Commutativity && v.witness == vec![1, 2]));
    }

    #[test]
    fn non_associative_table_is_caught() {
        // gg = h, gh = g, hg = 0: (gg)g = hg = 0 but g(gg) = gh = g.
        let spec = RingSpec::new(
            "nonassoc",
            vec![2, 2],
            vec![
                vec![vec![0, 1], vec![1, 0]],
                vec![vec![0, 0], vec![0, 0]],
            ],
            false,
            None,
        )
        .unwrap();
        let report = validate_spec(&spec);
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == Law::Associativity && v.witness == vec![1, 1, 1]));
    }

    #[test]
    fn index_round_trip() {
        let spec = RingSpec::new(
            "z2xz3",
            vec![2, 3],
            vec![
                vec![vec![1, 0], vec![0, 0]],
                vec![vec![0, 0], vec![0, 1]],
            ],
            true,
            Some(vec![1, 1]),
        )
        .unwrap();
        for idx in 0..6 {
            assert_eq!(spec.index_of(&spec.element_at(idx)), idx);
        }
        assert_eq!(spec.element_at(1).coeffs(), &[0, 1]);
        assert_eq!(spec.element_at(3).coeffs(), &[1, 0]);
        assert!(spec.element(vec![1, 3]).is_err());
        assert!(matches!(
            spec.add(&spec.zero(), &RingElement(vec![0])),
            Err(Error::Shape { .. })
        ));
    }
}

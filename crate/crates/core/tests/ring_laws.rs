use proptest::prelude::*;
use ringsum_core::ring::builtin::*;
use ringsum_core::ring::{
    enumerate_elements, enumerate_matrices, validate_spec, Budget, Law, Matrices, Matrix,
    RingElement, RingSpec,
};
use ringsum_core::Error;

fn catalog() -> Vec<RingSpec> {
    vec![
        zn(6).unwrap(),
        zn(8).unwrap(),
        gf(2, 2).unwrap(),
        gf(3, 2).unwrap(),
        gf(2, 3).unwrap(),
        gaussian(3).unwrap(),
        gaussian(4).unwrap(),
        quaternion(2).unwrap(),
        quaternion(3).unwrap(),
        null_ring(4).unwrap(),
        trunc_poly(2, 2, 2).unwrap(),
        trunc_poly(3, 1, 3).unwrap(),
        direct_product(&zn(2).unwrap(), &zn(3).unwrap()).unwrap(),
        upper_triangular(3).unwrap(),
        matrix2(2).unwrap(),
    ]
}

fn el(spec: &RingSpec, c: &[u64]) -> RingElement {
    spec.element(c.to_vec()).unwrap()
}

fn laws_hold(spec: &RingSpec, a: &RingElement, b: &RingElement, c: &RingElement) -> bool {
    let add = |x: &RingElement, y: &RingElement| spec.add(x, y).unwrap();
    let mul = |x: &RingElement, y: &RingElement| spec.mul(x, y).unwrap();
    mul(&mul(a, b), c) == mul(a, &mul(b, c))
        && mul(a, &add(b, c)) == add(&mul(a, b), &mul(a, c))
        && mul(&add(a, b), c) == add(&mul(a, c), &mul(b, c))
        && add(a, b) == add(b, a)
        && add(a, &spec.neg(a).unwrap()) == spec.zero()
        && (!spec.commutative() || mul(a, b) == mul(b, a))
}

#[test]
fn small_rings_satisfy_laws_exhaustively() {
    for spec in catalog().into_iter().filter(|s| s.card() <= 16) {
        let elems: Vec<RingElement> = enumerate_elements(&spec, Budget::default()).unwrap().collect();
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    assert!(laws_hold(&spec, a, b, c), "{spec}: {a:?} {b:?} {c:?}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn builtin_rings_satisfy_laws(which in 0usize..15, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let spec = &catalog()[which];
        let card = spec.card() as u64;
        let (a, b, c) = (spec.element_at(x % card), spec.element_at(y % card), spec.element_at(z % card));
        prop_assert!(laws_hold(spec, &a, &b, &c));
    }

    #[test]
    fn matrix_powers_add_exponents(which in 0usize..15, seed in prop::collection::vec(any::<u64>(), 4), a in 1u32..5, b in 1u32..5) {
        let spec = &catalog()[which];
        let card = spec.card() as u64;
        let entries = seed.iter().map(|&s| spec.element_at(s % card)).collect();
        let m = Matrix::from_entries(spec, 2, entries).unwrap();
        let lhs = spec.mat_pow(&m, a + b).unwrap();
        let rhs = spec.mat_mul(&spec.mat_pow(&m, a).unwrap(), &spec.mat_pow(&m, b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn element_index_round_trips(which in 0usize..15, x in any::<u64>()) {
        let spec = &catalog()[which];
        let i = x % spec.card() as u64;
        prop_assert_eq!(spec.index_of(&spec.element_at(i)), i);
    }

    #[test]
    fn partitions_reproduce_the_matrix_stream(cuts in prop::collection::vec(0u64..1296, 0..6)) {
        let spec = zn(6).unwrap();
        let full: Vec<Matrix> = enumerate_matrices(&spec, 2, Budget::default()).unwrap().collect();
        let mut bounds = cuts.clone();
        bounds.push(0);
        bounds.push(1296);
        bounds.sort_unstable();
        let mut joined = Vec::new();
        for w in bounds.windows(2) {
            joined.extend(Matrices::range(&spec, 2, w[0]..w[1]).unwrap());
        }
        prop_assert_eq!(joined, full);
    }

    #[test]
    fn gaussian_powers_match_integer_pairs(n in 2u64..40, a in 0u64..1000, b in 0u64..1000, k in 1u32..12) {
        let spec = gaussian(n).unwrap();
        let z = el(&spec, &[a % n, b % n]);
        let mut p = z.clone();
        for _ in 1..k {
            p = spec.mul(&p, &z).unwrap();
        }
        let (mut re, mut im) = (1i128, 0i128);
        for _ in 0..k {
            let (x, y) = ((a % n) as i128, (b % n) as i128);
            (re, im) = ((re * x - im * y).rem_euclid(n as i128), (re * y + im * x).rem_euclid(n as i128));
        }
        prop_assert_eq!(p.coeffs(), &[re as u64, im as u64]);
    }

    #[test]
    fn quaternions_mod_4_match_matrix_representation(x in 0u64..256, y in 0u64..256) {
        let spec = quaternion(4).unwrap();
        check_quaternion_representation(&spec, x, y);
    }
}

/// `a + bi + cj + dk` as the 4x4 integer matrix of the representation.
fn quaternion_matrix(c: &[u64], n: u64) -> [[i64; 4]; 4] {
    let (a, b, cc, d) = (c[0] as i64, c[1] as i64, c[2] as i64, c[3] as i64);
    let m = [[a, b, cc, d], [-b, a, -d, cc], [-cc, d, a, -b], [-d, -cc, b, a]];
    m.map(|row| row.map(|v| v.rem_euclid(n as i64)))
}

fn check_quaternion_representation(spec: &RingSpec, x: u64, y: u64) {
    let n = spec.orders()[0];
    let (z, w) = (spec.element_at(x), spec.element_at(y));
    let (mz, mw) = (quaternion_matrix(z.coeffs(), n), quaternion_matrix(w.coeffs(), n));
    let mut prod = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            prod[i][j] = (0..4).map(|t| mz[i][t] * mw[t][j]).sum::<i64>().rem_euclid(n as i64);
        }
    }
    let zw = spec.mul(&z, &w).unwrap();
    assert_eq!(quaternion_matrix(zw.coeffs(), n), prod, "{z:?} * {w:?}");
}

#[test]
fn quaternions_mod_2_match_matrix_representation() {
    let spec = quaternion(2).unwrap();
    for x in 0..16 {
        for y in 0..16 {
            check_quaternion_representation(&spec, x, y);
        }
    }
}

#[test]
fn direct_products_act_componentwise() {
    let pairs = [
        (zn(2).unwrap(), zn(3).unwrap()),
        (zn(4).unwrap(), gaussian(3).unwrap()),
        (null_ring(2).unwrap(), zn(9).unwrap()),
        (gf(2, 2).unwrap(), zn(9).unwrap()),
        (zn(6).unwrap(), zn(6).unwrap()),
    ];
    for (a, b) in pairs {
        let p = direct_product(&a, &b).unwrap();
        assert!(p.card() <= 36);
        assert_eq!(p.card(), a.card() * b.card());
        let ra = a.rank();
        let split = |e: &RingElement| {
            let c = e.coeffs();
            (el(&a, &c[..ra]), el(&b, &c[ra..]))
        };
        let elems: Vec<RingElement> = enumerate_elements(&p, Budget::default()).unwrap().collect();
        for x in &elems {
            for y in &elems {
                let ((x1, x2), (y1, y2)) = (split(x), split(y));
                let (s1, s2) = split(&p.add(x, y).unwrap());
                let (m1, m2) = split(&p.mul(x, y).unwrap());
                assert_eq!((s1, s2), (a.add(&x1, &y1).unwrap(), b.add(&x2, &y2).unwrap()));
                assert_eq!((m1, m2), (a.mul(&x1, &y1).unwrap(), b.mul(&x2, &y2).unwrap()));
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    let b = Budget::default();
    assert_eq!(enumerate_matrices(&zn(6).unwrap(), 2, b).unwrap().count(), 1296);
    let z2z3 = direct_product(&zn(2).unwrap(), &zn(3).unwrap()).unwrap();
    assert_eq!(enumerate_matrices(&z2z3, 2, b).unwrap().count(), 1296);
    assert_eq!(enumerate_elements(&gaussian(3).unwrap(), b).unwrap().count(), 9);
    for spec in catalog().iter().filter(|s| s.card() <= 16) {
        assert_eq!(enumerate_elements(spec, b).unwrap().count() as u128, spec.card());
        let mats = enumerate_matrices(spec, 1, b).unwrap().count() as u128;
        assert_eq!(mats, spec.card());
    }
    let first: Vec<Matrix> = enumerate_matrices(&zn(2).unwrap(), 2, b).unwrap().take(3).collect();
    let z2 = zn(2).unwrap();
    let entries = |m: &Matrix| m.entries().iter().map(|e| e.coeffs()[0]).collect::<Vec<_>>();
    assert_eq!(entries(&first[0]), vec![0, 0, 0, 0]);
    assert_eq!(entries(&first[1]), vec![0, 0, 0, 1]);
    assert_eq!(entries(&first[2]), vec![0, 0, 1, 0]);
    assert!(first[0].is_zero(&z2));
}

#[test]
fn enumeration_refuses_over_budget() {
    let err = enumerate_matrices(&zn(6).unwrap(), 2, Budget::new(1000)).unwrap_err();
    assert_eq!(err, Error::BudgetExceeded { required: 1296, budget: 1000 });
}

#[test]
fn element_arithmetic_examples() {
    let z6 = zn(6).unwrap();
    assert_eq!(z6.add(&el(&z6, &[4]), &el(&z6, &[5])).unwrap(), el(&z6, &[3]));
    let g3 = gaussian(3).unwrap();
    let one_i = el(&g3, &[1, 1]);
    assert_eq!(g3.mul(&one_i, &one_i).unwrap(), el(&g3, &[0, 2]));
    let q5 = quaternion(5).unwrap();
    let (i, j) = (el(&q5, &[0, 1, 0, 0]), el(&q5, &[0, 0, 1, 0]));
    assert_eq!(q5.mul(&i, &j).unwrap(), el(&q5, &[0, 0, 0, 1]));
    assert_eq!(q5.mul(&j, &i).unwrap(), el(&q5, &[0, 0, 0, 4]));
    assert!(matches!(z6.add(&el(&z6, &[1]), &el(&g3, &[1, 1])), Err(Error::Shape { .. })));
}

#[test]
fn matrix_power_examples() {
    let z2 = zn(2).unwrap();
    let fib = Matrix::from_coeff_rows(&z2, &[&[&[0], &[1]], &[&[1], &[1]]]).unwrap();
    let sq = Matrix::from_coeff_rows(&z2, &[&[&[1], &[1]], &[&[1], &[0]]]).unwrap();
    assert_eq!(z2.mat_pow(&fib, 2).unwrap(), sq);
    assert_eq!(z2.mat_pow(&fib, 1).unwrap(), fib);
    assert_eq!(z2.mat_pow(&fib, 0), Err(Error::ZeroExponent));

    let g2 = gaussian(2).unwrap();
    let i = el(&g2, &[0, 1]);
    let di = Matrix::scalar(&g2, 2, &i);
    assert_eq!(g2.mat_pow(&di, 2).unwrap(), Matrix::scalar(&g2, 2, &el(&g2, &[1, 0])));

    for spec in catalog() {
        let z = Matrix::zero(&spec, 3);
        assert!(spec.mat_pow(&z, 5).unwrap().is_zero(&spec));
    }
    let z3 = Matrix::zero(&z2, 3);
    assert!(matches!(z2.mat_mul(&fib, &z3), Err(Error::DimensionMismatch { left: 2, right: 3 })));
}

#[test]
fn validation_examples() {
    assert!(validate_spec(&zn(6).unwrap()).ok);
    for claim in [false, true] {
        let s = RingSpec::new("g2", vec![2], vec![vec![vec![1]]], claim, None).unwrap();
        let report = validate_spec(&s);
        assert!(report.ok && report.observed_commutative);
    }
    // g1 g1 = g2 with orders (2, 4): 2 * 1 is not 0 mod 4.
    let bad = RingSpec::new(
        "bad",
        vec![2, 4],
        vec![vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]],
        true,
        None,
    )
    .unwrap();
    let report = validate_spec(&bad);
    assert!(!report.ok);
    assert!(report
        .violations
        .iter()
        .any(|v| v.law == Law::WellDefinedness && v.witness == vec![1, 1, 2]));
    assert!(matches!(bad.validated(), Err(Error::LawViolation(_))));

    assert!(matches!(
        RingSpec::new("shape", vec![2, 2], vec![vec![vec![0, 0]]], true, None),
        Err(Error::Shape { .. })
    ));
    assert!(matches!(
        RingSpec::new("range", vec![3], vec![vec![vec![3]]], true, None),
        Err(Error::Unreduced { .. })
    ));
    assert!(matches!(
        RingSpec::new("order", vec![1], vec![vec![vec![0]]], true, None),
        Err(Error::InvalidOrder { .. })
    ));

    // Quaternions mod 2 are flagged non-commutative but are commutative.
    let q2 = validate_spec(&quaternion(2).unwrap());
    assert!(q2.ok && q2.observed_commutative);
    assert!(!validate_spec(&quaternion(3).unwrap()).observed_commutative);
}

#[test]
fn field_constructions() {
    assert_eq!(smallest_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
    assert_eq!(gf(2, 2).unwrap().card(), 4);
    assert!(matches!(gf(4, 2), Err(Error::NotPrime(4))));
    let z2z3 = direct_product(&zn(2).unwrap(), &zn(3).unwrap()).unwrap();
    assert_eq!(z2z3.card(), 6);
    assert_eq!(z2z3.unit().unwrap().coeffs(), &[1, 1]);
}

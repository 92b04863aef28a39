use proptest::prelude::*;
use ringsum_core::arith::gcd;
use ringsum_core::closed_form::*;
use ringsum_core::oracle::{
    element_power_sums, matrix_power_sums, scalar_exponent_sum_oracle,
};
use ringsum_core::ring::builtin::{gaussian, gf_q, zn};
use ringsum_core::ring::{Budget, Matrix};

fn matrix_of(r: &ClosedFormResult) -> &Matrix {
    match &r.value {
        Value::Matrix(m) => m,
        Value::Element(_) => panic!("expected a matrix"),
    }
}

fn ints(m: &Matrix) -> Vec<u64> {
    m.entries().iter().map(|e| e.coeffs()[0]).collect()
}

#[test]
fn crt_consistency_of_zn_matrix_sums() {
    for a in 2..=10u64 {
        for c in 2..=10u64 {
            if gcd(a, c) != 1 {
                continue;
            }
            for d in [2usize, 3] {
                for k in 1..=13 {
                    let big = ints(matrix_of(&zn_matrix_sum(a * c, d, k).unwrap()));
                    let small = ints(matrix_of(&zn_matrix_sum(a, d, k).unwrap()));
                    let factor = (c % a).pow((d * d) as u32) % a;
                    let lhs: Vec<u64> = big.iter().map(|x| x % a).collect();
                    let rhs: Vec<u64> = small.iter().map(|x| x * factor % a).collect();
                    assert_eq!(lhs, rhs, "a={a} b={c} d={d} k={k}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn zn_matrix_sums_have_period_six(n in 2u64..200, k in 2u32..60) {
        let a = zn_matrix_sum(n, 2, k).unwrap();
        let b = zn_matrix_sum(n, 2, k + 6).unwrap();
        prop_assert_eq!(a.branch, b.branch);
        prop_assert_eq!(a.value, b.value);
    }

    #[test]
    fn field_matrix_sums_vanish_off_the_exception(
        q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27]),
        d in 1usize..6,
        k in 1u32..40,
    ) {
        let r = field_matrix_sum(q, d, k).unwrap();
        if q > 2 || d != 2 {
            if d >= 2 {
                prop_assert!(r.is_zero());
                prop_assert_eq!(r.branch, Branch::FieldMatrixZero);
            }
        } else {
            prop_assert_eq!(r.is_zero(), !exceptional_exponent(k));
        }
    }

    #[test]
    fn zero_guarantee_never_contradicts_its_inputs(
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        mut s in prop::collection::vec(1u32..4, 1..4),
        d in 2usize..4,
        k in 1u32..50,
    ) {
        s.sort_unstable_by(|a, b| b.cmp(a));
        let g = zero_guarantee(p, &s, d, k).unwrap();
        prop_assert_eq!(g.guaranteed, g.which != GuaranteeRule::None);
        prop_assert_eq!(g.r, s.len());
        let free = s.iter().all(|&x| x == s[0]);
        let label = g.which.as_str();
        if g.guaranteed {
            prop_assert_eq!(label.starts_with("free"), free);
            prop_assert_eq!(label.contains("-2-"), p == 2);
        }
    }
}

#[test]
fn predictor_agrees_with_zn_formula() {
    for n in 2..=30u64 {
        let spec = zn(n).unwrap();
        for d in [2usize, 3] {
            for k in 1..=13 {
                let p = predict_ring_matrix_sum(&spec, d, k, Budget::default()).unwrap();
                let z = zn_matrix_sum(n, d, k).unwrap();
                assert_eq!(p.value, z.value, "n={n} d={d} k={k}");
                assert!(!p.conjecture_dependent);
            }
        }
    }
}

#[test]
fn odd_prime_exponent_lemma_matches_oracle() {
    for p in [3u64, 5] {
        for s in 1..=2u32 {
            for tau in 1..=3usize {
                let mut betas = vec![0u32; tau];
                loop {
                    let profile = ExponentProfile::new(p, s, betas.clone()).unwrap();
                    let printed = printed_scalar_exponent_sum(&profile);
                    assert!(printed.endorsed);
                    let oracle = scalar_exponent_sum_oracle(profile.modulus(), &betas);
                    assert_eq!(printed.residue, oracle, "p={p} s={s} betas={betas:?}");
                    let Some(i) = betas.iter().rposition(|&b| b < 8) else { break };
                    betas[i] += 1;
                    betas[i + 1..].fill(0);
                }
            }
        }
    }
}

#[test]
fn two_adic_lemma_disagrees_with_oracle() {
    let profile = ExponentProfile::new(2, 3, vec![1, 2]).unwrap();
    let printed = printed_scalar_exponent_sum(&profile);
    assert_eq!((printed.residue, printed.endorsed), (4, false));
    assert_eq!(scalar_exponent_sum_oracle(8, &[1, 2]), 0);
    // The one-variable sum of x over Z_{2^s} is 2^{s-1}, not -1.
    for s in 2..=5u32 {
        let m = 1u64 << s;
        assert_eq!(scalar_exponent_sum_oracle(m, &[1]), m / 2);
    }
}

#[test]
fn scalar_formulas_match_small_oracles() {
    let b = Budget::default();
    for n in 2..=24u64 {
        let sums = element_power_sums(&zn(n).unwrap(), 13, b).unwrap();
        for k in 1..=13u32 {
            let r = zn_scalar_sum(n, k).unwrap();
            assert_eq!(r.value, Value::Element(sums[k as usize - 1].clone()), "n={n} k={k}");
        }
    }
    for n in 2..=8u64 {
        let sums = element_power_sums(&gaussian(n).unwrap(), 13, b).unwrap();
        for k in 1..=13u32 {
            let r = gaussian_scalar_sum(n, k).unwrap();
            assert_eq!(r.value, Value::Element(sums[k as usize - 1].clone()), "n={n} k={k}");
        }
    }
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let sums = element_power_sums(&gf_q(q).unwrap(), 13, b).unwrap();
        for k in 1..=13u32 {
            let r = field_scalar_sum(q, k).unwrap();
            assert_eq!(r.value, Value::Element(sums[k as usize - 1].clone()), "q={q} k={k}");
        }
    }
}

#[test]
fn matrix_formulas_match_small_oracles() {
    for n in 2..=7u64 {
        let sums = matrix_power_sums(&zn(n).unwrap(), 2, 8, Budget::default()).unwrap();
        for k in 1..=8u32 {
            let r = zn_matrix_sum(n, 2, k).unwrap();
            assert_eq!(matrix_of(&r), &sums[k as usize - 1], "n={n} k={k}");
        }
    }
}

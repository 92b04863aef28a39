use proptest::prelude::*;
use ringsum::harness::*;
use ringsum::report::{Classification, ExitStatus};
use ringsum::rings::{default_catalog, noncommutative_probe_set, parse_ring};
use ringsum_core::ring::Budget;
use ringsum_core::words::{all_words, Monomial};
use serde_json::json;

fn b() -> Budget {
    Budget::default()
}

#[test]
fn budget_refusals_become_skipped_cells() {
    let cfg = FamilyConfig {
        family: Family::Zn,
        values: vec![2, 20],
        ds: vec![3],
        k_max: 3,
    };
    let r = verify_family_sweep(&cfg, b()).unwrap();
    assert_eq!(r.count(Classification::ProvedMatch), 3);
    assert_eq!(r.count(Classification::Skipped), 3);
    assert!(r.cells[3].note.as_deref().unwrap().contains("budget"));
    assert_eq!(r.exit_status(), ExitStatus::Ok);
}

#[test]
fn malformed_grids_are_errors() {
    let cfg = FamilyConfig { family: Family::Gaussian, values: vec![3], ds: vec![2], k_max: 3 };
    assert!(verify_family_sweep(&cfg, b()).is_err());
    assert!(check_reduction(4, 6, 2, 3, b()).is_err());
    assert!(check_lifting(4, 1, 2, 3, b()).is_err());
    let nc = parse_ring("quaternion:3").unwrap();
    assert!(ring_catalog_sweep(&[nc], &CatalogConfig::default(), b()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_holds_for_divisor_pairs(n in 2u64..10, m_pick in 0usize..8, k in 1u32..10) {
        let divisors: Vec<u64> = (2..=n).filter(|m| n % m == 0).collect();
        let m = divisors[m_pick % divisors.len()];
        let c = check_reduction(m, n, 2, k, b()).unwrap();
        prop_assert!(c.pass, "m={} n={} k={}: {:?} vs {:?}", m, n, k, c.lhs, c.rhs);
        prop_assert_eq!(c.modulus, m);
    }

    #[test]
    fn lifting_holds_at_small_prime_powers(p in prop::sample::select(vec![2u64, 3]), k in 1u32..10) {
        prop_assert!(check_lifting(p, 1, 2, k, b()).unwrap().pass);
    }
}

#[test]
fn lifting_at_the_second_step() {
    for k in 1..=8 {
        assert!(check_lifting(2, 2, 2, k, b()).unwrap().pass, "k={k}");
    }
}

#[test]
fn monomial_lifting_flags_unit_exponent_cells() {
    let w = Monomial::new(vec![1, 2, 1]).unwrap();
    let lift = check_monomial_lifting(2, &[2, 1], &w, 2, b()).unwrap();
    assert!(lift.check.pass && !lift.inspect);
    let words = all_words(2, 2);
    let r = monomial_lifting_sweep(2, &[1, 1], &words, 2, b()).unwrap();
    assert_eq!(r.count(Classification::Inspect), words.len());
    assert!(r.cells.iter().all(|c| c.info.contains_key("congruence_holds")));
}

#[test]
fn lemma_audit_separates_odd_and_even_primes() {
    let cfg = AuditConfig { primes: vec![(2, 2), (3, 1)], tau_max: 2, beta_max: 3 };
    let r = lemma_audit(&cfg).unwrap();
    let odd = r.cells.iter().filter(|c| c.params["p"] == 3);
    assert!(odd.clone().all(|c| c.classification == Classification::ProvedMatch));
    assert!(r.cells.iter().filter(|c| c.params["p"] == 2).all(|c| matches!(
        c.classification,
        Classification::AuditMatch | Classification::AuditMismatch
    )));
    // The sum of x over Z_4 is 2, not the printed 3.
    let cell = r
        .cells
        .iter()
        .find(|c| c.params == json!({"betas": [1], "check": "lemma", "p": 2, "s": 2}))
        .unwrap();
    assert_eq!((cell.expected.clone(), cell.observed.clone()), (Some(json!(3)), Some(json!(2))));
    assert_eq!(r.exit_status(), ExitStatus::Ok);
}

#[test]
fn conjecture1_records_the_excluded_case() {
    let cfg = Conjecture1Config { primes: vec![2], d: 2, profiles: vec![vec![1, 1]], max_degree: 3 };
    let r = conjecture1_sweep(&cfg, b()).unwrap();
    assert_eq!(r.count(Classification::Recorded), r.cells_checked());
    let cfg = Conjecture1Config { primes: vec![3], d: 2, profiles: vec![vec![1, 1]], max_degree: 3 };
    let r = conjecture1_sweep(&cfg, b()).unwrap();
    assert_eq!(r.count(Classification::ConjectureMatch), all_words(2, 3).len());
}

#[test]
fn conjecture2_records_single_variable_degrees() {
    let r = conjecture2_sweep(&[vec![3], vec![1, 2]], b()).unwrap();
    assert_eq!(r.cells[0].classification, Classification::Recorded);
    assert_eq!(r.cells[1].classification, Classification::ConjectureMatch);
    assert_eq!(r.cells[1].info["words"], 3);
}

#[test]
fn guarantees_only_cover_rings_with_invariant_factors() {
    let cfg = CatalogConfig { ds: vec![2], k_max: 6 };
    let r = zero_guarantee_sweep(&default_catalog(), &cfg, b()).unwrap();
    assert!(r.cells.iter().all(|c| c.params["ring"] != "Z6"));
    assert!(r.count(Classification::ProvedMatch) > 0);
    assert_eq!(r.count(Classification::ProvedMismatch), 0);
}

#[test]
fn noncommutative_probe_records_without_verdicts() {
    let cfg = CatalogConfig { ds: vec![2], k_max: 3 };
    let r = noncommutative_probe(&noncommutative_probe_set(), &cfg, b()).unwrap();
    assert_eq!(r.exit_status(), ExitStatus::Ok);
    let z3q = r.cells.iter().find(|c| c.params["ring"] == "Z3[i,j,k]").unwrap();
    assert!(matches!(z3q.classification, Classification::Recorded | Classification::Skipped));
    assert!(r.cells.iter().any(|c| c.info.get("observed_commutative") == Some(&json!(false))));
}

#[test]
fn reports_serialize_cells_then_summary() {
    let r = a017593_sweep(8, 12, b()).unwrap();
    let mut buf = Vec::new();
    r.write_jsonl(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), r.cells_checked() + 1);
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["exit_code"], 0);
    assert_eq!(summary["summary"]["counts"]["proved-match"], r.cells_checked());
}

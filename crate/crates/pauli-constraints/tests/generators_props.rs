mod common;

use common::{generated_items, random_state, triple_agreement};
use num_bigint::BigInt;
use num_rational::BigRational;
use pauli_constraints::coefficients::builtin_tables;
use pauli_constraints::generators::{
    grassmann_kind1, grassmann_kind2, hole_dual_inequality, hole_dual_spectrum, item_holds, series_inequality,
};
use pauli_constraints::states::occupation_numbers;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SYSTEMS: [(usize, usize); 4] = [(3, 6), (3, 7), (3, 8), (4, 8)];

#[test]
fn coefficient_formulas_agree() {
    let checked = triple_agreement(7).unwrap();
    assert_eq!(checked, 1 + 2 + 3 + 5 + 7 + 11 + 15);
}

#[test]
fn generated_inequalities_hold_on_random_states() {
    for (n, r) in SYSTEMS {
        let items = generated_items(n, r);
        let table: Vec<_> = builtin_tables().into_iter().filter(|t| t.system == format!("wedge{n}_{r}")).flat_map(|t| t.rows).collect();
        assert!(!items.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(7 * r as u64 + n as u64);
        for _ in 0..1000 {
            let psi = random_state(n, r, &mut rng);
            let lambda = occupation_numbers(&psi).unwrap().values;
            for item in &items {
                assert!(item_holds(item, &lambda, 1e-9), "{:?} ≤ {} fails at {lambda:?}", item.indices, item.bound);
            }
            for row in &table {
                let lhs: f64 = row.lambda_coeffs.iter().zip(&lambda).map(|(&c, x)| c as f64 * x).sum();
                assert!(lhs <= row.bound as f64 + 1e-9, "{} fails at {lambda:?}", row.inequality);
            }
        }
    }
}

#[test]
fn exclusions_are_witnessed() {
    let mut families = Vec::new();
    for n in 2..=5 {
        for p in n..=n + 1 {
            families.push(grassmann_kind2(n, p).unwrap());
        }
        for r in n + 1..=n + 6 {
            families.push(grassmann_kind1(n, r).unwrap());
        }
    }
    let mut witnessed = 0;
    for f in &families {
        for e in &f.exclusions {
            if let Some(cert) = &e.counterexample {
                assert!(cert.check(&e.indices), "{:?}: {}", e.indices, e.reason);
                witnessed += 1;
            }
        }
    }
    assert!(witnessed > 0);
}

#[test]
fn series_reduces_to_generated_items() {
    // the first p terms of the series are a second-kind item
    for n in 2..=4 {
        let s = series_inequality(n, n + 1).unwrap();
        let indices: Vec<usize> = s.lambda_coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i + 1).collect();
        let f = grassmann_kind2(n, n + 1).unwrap();
        assert!(f.items.iter().any(|it| it.indices == indices), "N={n} {indices:?}");
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hole_dual_is_involution(coeffs in prop::collection::vec(-3i64..=3, 2..9), b in -4i64..=4) {
        let ineq = pauli_constraints::coefficients::OccupationInequality::pure(coeffs.clone(), b);
        let r = coeffs.len();
        let twice = hole_dual_inequality(&hole_dual_inequality(&ineq, r), r);
        prop_assert_eq!(&twice.lambda_coeffs, &coeffs);
        prop_assert_eq!(twice.bound(), b);
    }

    #[test]
    fn hole_dual_preserves_slack(nums in prop::collection::vec(0i64..=12, 2..9), coeffs_seed in prop::collection::vec(-2i64..=2, 9), b in -3i64..=3) {
        let mut lambda: Vec<BigRational> = nums.iter().map(|&x| q(x, 12)).collect();
        lambda.sort_by(|a, b| b.cmp(a));
        let r = lambda.len();
        let coeffs = coeffs_seed[..r].to_vec();
        let ineq = pauli_constraints::coefficients::OccupationInequality::pure(coeffs, b);
        let dual = hole_dual_inequality(&ineq, r);
        let star = hole_dual_spectrum(&lambda);
        let one = vec![BigRational::from_integer(BigInt::from(1))];
        prop_assert_eq!(ineq.slack(&lambda, &one), dual.slack(&star, &one));
    }
}

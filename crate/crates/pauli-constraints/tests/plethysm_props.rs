mod common;

use common::{binom, multiset_plethysm};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use pauli_constraints::combinatorics::{partitions_in_box, weyl_dimension, Partition};
use pauli_constraints::plethysm::{
    alternant_multiplicity, character, inner_points, plethysm_h, plethysm_schur, schur_decompose,
};
use pauli_constraints::polytope::System;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Representations of dimension at most 10.
fn small_reps() -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for nu in ["1", "2", "1^2", "3", "2,1", "1^3"] {
        for r in 1..=8 {
            let nu = p(nu);
            let d = weyl_dimension(&nu, r);
            if d > BigUint::zero() && d <= BigUint::from(10u32) {
                out.push((nu, r));
            }
        }
    }
    out
}

#[test]
fn newton_recurrence_matches_multiset_enumeration() {
    for (nu, r) in small_reps() {
        let f = character(&nu, r).unwrap();
        let weights: Vec<(Vec<u8>, i128)> = f.weights().map(|(w, &k)| (w.to_vec(), k)).collect();
        for m in 1..=4 {
            let h = plethysm_h(m, &f).unwrap();
            let got: std::collections::BTreeMap<Vec<u8>, i128> = h.weights().map(|(w, &k)| (w.to_vec(), k)).filter(|(_, k)| *k != 0).collect();
            let want = multiset_plethysm(&weights, m);
            assert_eq!(got, want, "h_{m}[s_{nu}] in {r} variables");
        }
    }
}

#[test]
fn decomposition_dimensions_add_up() {
    for (nu, r) in small_reps() {
        let f = character(&nu, r).unwrap();
        let dim = weyl_dimension(&nu, r);
        let d: usize = dim.to_string().parse().unwrap();
        for size in 1..=3 {
            for mu in partitions_in_box(size, size, size) {
                let ch = plethysm_schur(&mu, &f).unwrap();
                let parts = schur_decompose(&ch).unwrap();
                let mut total = BigInt::zero();
                for (lambda, mult) in &parts {
                    assert!(*mult > BigInt::zero(), "negative multiplicity of {lambda} in s_{mu}[s_{nu}]");
                    total += mult * BigInt::from(weyl_dimension(lambda, r));
                }
                assert_eq!(total, BigInt::from(weyl_dimension(&mu, d)), "s_{mu}[s_{nu}] r={r}");
                if mu.height() == 1 {
                    assert_eq!(total, BigInt::from(binom(d + size - 1, size)));
                }
            }
        }
    }
}

#[test]
fn decomposition_matches_alternant() {
    for (nu, r) in [(p("1^2"), 4), (p("2,1"), 3), (p("1^3"), 6)] {
        let f = character(&nu, r).unwrap();
        for m in 1..=3 {
            let h = plethysm_h(m, &f).unwrap();
            let parts = schur_decompose(&h).unwrap();
            for lambda in partitions_in_box(m * nu.size(), r, m * nu.size()) {
                let want = alternant_multiplicity(&h, &lambda).unwrap();
                let got = parts.iter().find(|(l, _)| *l == lambda).map(|(_, c)| c.clone()).unwrap_or_default();
                assert_eq!(got, want, "λ={lambda} in h_{m}[s_{nu}]");
            }
        }
    }
}

#[test]
fn inner_points_satisfy_reference_inequalities() {
    let system = System::new(p("1^3"), 6, 1);
    let bd = common::borland_dennis(&system);
    for point in inner_points(&p("1^3"), 6, 1, 5).unwrap() {
        assert!(bd.contains(&system.point(&point)), "{:?}", point.component);
    }
    let system = System::new(p("2,1"), 4, 2);
    let so = common::spin_orbital(&system);
    for point in inner_points(&p("2,1"), 4, 2, 6).unwrap() {
        assert!(so.contains(&system.point(&point)), "{:?}", point.component);
    }
}

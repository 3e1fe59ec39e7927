mod common;

use common::shuffle_for;
use num_bigint::BigUint;
use pauli_constraints::combinatorics::{
    count_skew_standard, diagram_from_indices, enumerate_ssyt, littlewood_richardson, partitions_in_box, weyl_dimension,
    FramedDiagram, Partition,
};

fn all_partitions(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| partitions_in_box(n, n, n)).collect()
}

#[test]
fn ssyt_count_is_weyl_dimension() {
    for nu in all_partitions(6) {
        for r in 1..=8 {
            let count = enumerate_ssyt(&nu, r).len();
            assert_eq!(BigUint::from(count), weyl_dimension(&nu, r), "{nu} r={r}");
        }
    }
}

#[test]
fn column_branching_identity() {
    for gamma in all_partitions(8) {
        for k in 1..gamma.size() {
            let lhs = count_skew_standard(&gamma, &Partition::column(k)) as i128
                - count_skew_standard(&gamma, &Partition::column(k + 1)) as i128;
            let mut hook = vec![2];
            hook.extend(std::iter::repeat_n(1, k - 1));
            let rhs = count_skew_standard(&gamma, &Partition::new(hook).unwrap()) as i128;
            assert_eq!(lhs, rhs, "γ={gamma} k={k}");
        }
    }
}

#[test]
fn lr_symmetric() {
    let small = all_partitions(4);
    for mu in &small {
        for pi in &small {
            if mu.size() + pi.size() > 6 {
                continue;
            }
            for nu in partitions_in_box(mu.size() + pi.size(), 8, 8) {
                assert_eq!(littlewood_richardson(mu, pi, &nu), littlewood_richardson(pi, mu, &nu));
            }
        }
    }
}

#[test]
fn lr_sums_to_dimension_product() {
    // Σ_ν c^ν_{μπ} dim(ν, r) = dim(μ, r) dim(π, r)
    let small = all_partitions(3);
    let r = 4;
    for mu in &small {
        for pi in &small {
            let total: BigUint = partitions_in_box(mu.size() + pi.size(), r, 8)
                .iter()
                .map(|nu| BigUint::from(littlewood_richardson(mu, pi, nu)) * weyl_dimension(nu, r))
                .sum();
            assert_eq!(total, weyl_dimension(mu, r) * weyl_dimension(pi, r), "{mu} ⊗ {pi}");
        }
    }
}

#[test]
fn framed_diagrams_round_trip() {
    for rows in 1..=6 {
        for cols in 1..=6 {
            for n in 0..=rows * cols {
                for gamma in partitions_in_box(n, rows, cols) {
                    let d = FramedDiagram::new(gamma.clone(), rows, cols).unwrap();
                    let back = diagram_from_indices(&d.vertical_sequence(), rows, cols).unwrap();
                    assert_eq!(back, d);
                    let v = shuffle_for(&gamma, rows, cols);
                    assert_eq!(v.length(), gamma.size(), "{gamma} in {rows}x{cols}");
                }
            }
        }
    }
}

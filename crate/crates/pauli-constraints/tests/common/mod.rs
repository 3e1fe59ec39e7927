//! Independent oracles shared by the property suites and the acceptance harness.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use pauli_constraints::combinatorics::{FramedDiagram, Partition};
use pauli_constraints::permutations::{grassmann_shuffle, Permutation};
use pauli_constraints::polyring::{divided_difference_word, SparsePoly};
use pauli_constraints::states::{Amplitude, WedgeState};

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn subsets(r: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, r: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..=r {
            cur.push(i);
            rec(i + 1, r, n, cur, out);
            cur.pop();
        }
    }
    rec(1, r, n, &mut cur, &mut out);
    out
}

/// Gaussian-ish complex amplitudes on every basis determinant. A random
/// fraction of amplitudes is dropped so that sparse supports also occur.
pub fn random_state<R: Rng>(n: usize, r: usize, rng: &mut R) -> WedgeState {
    let all = subsets(r, n);
    let keep: f64 = rng.gen_range(0.2..=1.0);
    let mut psi = WedgeState::new(n, r);
    let mut any = false;
    for s in &all {
        if rng.gen::<f64>() > keep {
            continue;
        }
        let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        psi.set(s.clone(), Amplitude::Complex(z)).unwrap();
        any = true;
    }
    if !any {
        psi.set(all[0].clone(), Amplitude::Complex(Complex64::new(1.0, 0.0))).unwrap();
    }
    psi
}

/// Every permutation of `0..n` with its sign.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, sign: f64, out: &mut Vec<(Vec<usize>, f64)>) {
        if k == perm.len() {
            out.push((perm.clone(), sign));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, if i == k { sign } else { -sign }, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, 1.0, &mut out);
    out
}

/// `N · tr_{2..N} |Ψ⟩⟨Ψ|` where `Ψ` is the explicit antisymmetrization of `ψ`
/// in `(C^r)^{⊗N}`, normalized.
pub fn rdm_oracle(psi: &WedgeState) -> Vec<Vec<Complex64>> {
    let (n, r) = (psi.n(), psi.r());
    let size = r.pow(n as u32);
    let mut tensor = vec![Complex64::zero(); size];
    let perms = signed_permutations(n);
    for (subset, amp) in psi.amplitudes() {
        let c = amp.to_complex();
        for (perm, sign) in &perms {
            let mut idx = 0;
            for &p in perm {
                idx = idx * r + (subset[p] - 1);
            }
            tensor[idx] += c * *sign;
        }
    }
    let norm: f64 = tensor.iter().map(|z| z.norm_sqr()).sum();
    let rest = r.pow(n as u32 - 1);
    let mut rho = vec![vec![Complex64::zero(); r]; r];
    for (i, row) in rho.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut acc = Complex64::zero();
            for k in 0..rest {
                acc += tensor[i * rest + k] * tensor[j * rest + k].conj();
            }
            *entry = acc * (n as f64) / norm;
        }
    }
    rho
}

/// The Grassmannian permutation attached to `γ` in a `rows × cols` frame.
pub fn shuffle_for(gamma: &Partition, rows: usize, cols: usize) -> Permutation {
    let d = FramedDiagram::new(gamma.clone(), rows, cols).unwrap();
    grassmann_shuffle(&d.vertical_sequence(), &d.horizontal_sequence()).unwrap()
}

/// Coefficient of `S_{v_γ}` in `∏_{j=N}^{r} (x_1 + ⋯ + x_{N-1} + x_j)` with
/// `N - 1 = p` and `r = |γ| + p`, read off as the constant `∂_{v_γ} P`.
pub fn cgamma_kind1_brute(gamma: &Partition, p: usize) -> BigInt {
    let ell = gamma.size();
    let r = ell + p;
    let mut prod = SparsePoly::one();
    for j in (p + 1)..=r {
        let mut coeffs = vec![0i64; r];
        for c in coeffs.iter_mut().take(p) {
            *c = 1;
        }
        coeffs[j - 1] = 1;
        prod = &prod * &SparsePoly::linear(&coeffs);
    }
    let v = shuffle_for(gamma, p, ell);
    let c = divided_difference_word(&v, &prod);
    c.as_constant().expect("degree matches length")
}

/// Coefficient of `S_{v_γ}` in `∏_{i=1}^{p} (σ_1 - x_i)`, `p = |γ|`.
pub fn cgamma_kind2_brute(gamma: &Partition) -> BigInt {
    let p = gamma.size();
    let mut prod = SparsePoly::one();
    for i in 0..p {
        let mut coeffs = vec![1i64; p];
        coeffs[i] = 0;
        prod = &prod * &SparsePoly::linear(&coeffs);
    }
    let v = shuffle_for(gamma, p, p);
    divided_difference_word(&v, &prod).as_constant().expect("degree matches length")
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Points on the moment curve `t ↦ (t, t², …, t^d)` are in convex position.
pub fn moment_point(t: i64, d: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(d);
    let mut x = BigRational::one();
    for _ in 0..d {
        x = &x * q(t);
        out.push(x.clone());
    }
    out
}

/// A strict convex combination of `points` with positive integer weights.
pub fn interior_combination(points: &[Vec<BigRational>], weights: &[u32]) -> Vec<BigRational> {
    let d = points[0].len();
    let total: u32 = weights.iter().sum();
    let mut out = vec![BigRational::zero(); d];
    for (p, &w) in points.iter().zip(weights) {
        for (o, x) in out.iter_mut().zip(p) {
            *o += x * q(i64::from(w));
        }
    }
    out.into_iter().map(|x| x / q(i64::from(total))).collect()
}

pub fn point_set(points: &[Vec<BigRational>]) -> BTreeSet<Vec<BigRational>> {
    points.iter().cloned().collect()
}

/// Multiset enumeration of `h_m[f]`: all size-`m` multisets of the weights
/// of `f` (counted with multiplicity), summed.
pub fn multiset_plethysm(weights: &[(Vec<u8>, i128)], m: usize) -> BTreeMap<Vec<u8>, i128> {
    let mut flat: Vec<&Vec<u8>> = Vec::new();
    for (w, k) in weights {
        for _ in 0..*k {
            flat.push(w);
        }
    }
    let r = weights.first().map_or(0, |(w, _)| w.len());
    let mut out = BTreeMap::new();
    let mut acc = vec![0u8; r];
    fn rec(start: usize, left: usize, flat: &[&Vec<u8>], acc: &mut Vec<u8>, out: &mut BTreeMap<Vec<u8>, i128>) {
        if left == 0 {
            *out.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for i in start..flat.len() {
            for (a, x) in acc.iter_mut().zip(flat[i].iter()) {
                *a += x;
            }
            rec(i, left - 1, flat, acc, out);
            for (a, x) in acc.iter_mut().zip(flat[i].iter()) {
                *a -= x;
            }
        }
    }
    rec(0, m, &flat, &mut acc, &mut out);
    out
}

/// Every first- and second-kind item applicable to `∧^N H_r`. Second-kind
/// items are stable in `r`, so all `p` below the expansion cap are included.
pub fn generated_items(n: usize, r: usize) -> Vec<pauli_constraints::generators::FamilyItem> {
    use pauli_constraints::generators::{grassmann_kind1, grassmann_kind2, GeneratorError};
    let mut items = grassmann_kind1(n, r).unwrap().items;
    for p in n..=8 {
        match grassmann_kind2(n, p) {
            Ok(f) => items.extend(f.items),
            Err(GeneratorError::ResourceCap { .. }) => break,
            Err(e) => panic!("{e}"),
        }
    }
    items
}

/// Triple agreement for one diagram; returns the common value or a report.
pub fn kind1_agreement(gamma: &Partition) -> Result<BigInt, String> {
    use pauli_constraints::generators::{cgamma_kind1_alternating, cgamma_kind1_positive, cgamma_kind1_recurrence};
    let rec = cgamma_kind1_recurrence(gamma, &mut std::collections::HashMap::new());
    let alt = cgamma_kind1_alternating(gamma);
    let p = gamma.height().max(2);
    let brute = [cgamma_kind1_brute(gamma, p), cgamma_kind1_brute(gamma, p + 1)];
    let mut bad = rec != alt || brute.iter().any(|b| *b != rec);
    if gamma.height() > 1 && gamma.width() > 1 {
        bad |= cgamma_kind1_positive(gamma) != rec;
    }
    if bad {
        Err(format!("kind 1 γ={gamma}: recurrence {rec}, alternating {alt}, expansion {brute:?}"))
    } else {
        Ok(rec)
    }
}

pub fn kind2_agreement(gamma: &Partition) -> Result<BigInt, String> {
    use pauli_constraints::generators::{chern_product, cgamma_kind2_alternating, cgamma_kind2_positive, schur_expand_symmetric};
    let p = gamma.size();
    let alt = cgamma_kind2_alternating(gamma);
    let brute = cgamma_kind2_brute(gamma);
    let schur = schur_expand_symmetric(&chern_product(p - 1, p), p).get(gamma).cloned().unwrap_or_default();
    let mut bad = alt != brute || alt != schur;
    if gamma.width() > 1 {
        bad |= cgamma_kind2_positive(gamma) != alt;
    }
    if bad {
        Err(format!("kind 2 γ={gamma}: alternating {alt}, expansion {brute}, schur {schur}"))
    } else {
        Ok(alt)
    }
}

/// Checks every diagram with `|γ| ≤ max_size`; returns how many were checked.
pub fn triple_agreement(max_size: usize) -> Result<usize, String> {
    use pauli_constraints::combinatorics::partitions_in_box;
    let mut count = 0;
    for size in 1..=max_size {
        for gamma in partitions_in_box(size, size, size) {
            let c = kind1_agreement(&gamma)?;
            if gamma.height() == 1 && c != BigInt::from(u8::from(size % 2 == 0)) {
                return Err(format!("row [{size}] has c = {c}"));
            }
            if size >= 2 {
                kind2_agreement(&gamma)?;
            }
            count += 1;
        }
    }
    Ok(count)
}

/// `Σ a_i λ_i + Σ b_j μ_j ≤ bound` (or `=`) on a system's coordinates.
pub struct Row<'a> {
    pub lambda: &'a [i64],
    pub mu: &'a [i64],
    pub bound: i64,
    pub equation: bool,
}

pub fn le<'a>(lambda: &'a [i64], mu: &'a [i64], bound: i64) -> Row<'a> {
    Row { lambda, mu, bound, equation: false }
}

pub fn eq<'a>(lambda: &'a [i64], bound: i64) -> Row<'a> {
    Row { lambda, mu: &[], bound, equation: true }
}

/// The polytope cut out of the system's Weyl chamber by `rows`.
pub fn expected_polytope(
    system: &pauli_constraints::polytope::System,
    rows: &[Row],
) -> pauli_constraints::polytope::RationalPolytope {
    use pauli_constraints::polytope::{from_h, Constraint};
    let dim = system.dim();
    let mut eqs = system.ambient_equations();
    let mut ineqs = system.ambient_inequalities();
    for row in rows {
        let mut normal = vec![0i64; dim];
        normal[..row.lambda.len()].copy_from_slice(row.lambda);
        if !row.mu.is_empty() {
            assert!(!system.is_pure());
            normal[system.r..system.r + row.mu.len()].copy_from_slice(row.mu);
        }
        let c = Constraint::from_ints(&normal, row.bound, row.equation);
        if row.equation {
            eqs.push(c);
        } else {
            ineqs.push(c);
        }
    }
    from_h(dim, &eqs, &ineqs).unwrap()
}

/// Borland–Dennis: three equations and `λ_4 ≤ λ_5 + λ_6` on `∧³H₆`.
pub fn borland_dennis(system: &pauli_constraints::polytope::System) -> pauli_constraints::polytope::RationalPolytope {
    expected_polytope(
        system,
        &[
            eq(&[1, 0, 0, 0, 0, 1], 1),
            eq(&[0, 1, 0, 0, 1, 0], 1),
            eq(&[0, 0, 1, 1, 0, 0], 1),
            le(&[0, 0, 0, 1, -1, -1], &[], 0),
        ],
    )
}

/// The four second-kind inequalities on `∧³H₇`.
pub fn wedge3_7(system: &pauli_constraints::polytope::System) -> pauli_constraints::polytope::RationalPolytope {
    expected_polytope(
        system,
        &[
            le(&[0, 1, 1, 1, 1, 0, 0], &[], 2),
            le(&[1, 0, 1, 1, 0, 1, 0], &[], 2),
            le(&[1, 1, 0, 0, 1, 1, 0], &[], 2),
            le(&[1, 1, 0, 1, 0, 0, 1], &[], 2),
        ],
    )
}

/// Three electrons with total spin 1/2: `ν = [2,1]`, `r = 4`, two spin values.
pub fn spin_orbital(system: &pauli_constraints::polytope::System) -> pauli_constraints::polytope::RationalPolytope {
    expected_polytope(
        system,
        &[
            le(&[1, -1, 0, 0], &[0, -1], 1),
            le(&[0, 1, -1, 0], &[0, -1], 1),
            le(&[1, 0, -1, 0], &[0, 1], 2),
            le(&[1, -1, -1, 0], &[], 1),
            le(&[2, -1, 0, 1], &[0, 1], 4),
        ],
    )
}

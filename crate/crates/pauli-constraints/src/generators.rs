//! Closed-form inequality families: majorization (Pauli) constraints and
//! the Grassmann inequalities of the first and second kind, with their
//! exceptions and counterexample certificates.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coefficients::{bigint_string, OccupationInequality};
use crate::combinatorics::{count_skew_standard, partitions_in_box, FramedDiagram, KostkaTable, Partition};
use crate::polyring::SparsePoly;
use crate::polytope::{self, Constraint, PolytopeError};
use crate::states::{occupation_numbers, StateError, WedgeState};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("need p >= N (got N = {n}, p = {p})")]
    PTooSmall { n: usize, p: usize },
    #[error("need r > N (got N = {n}, r = {r})")]
    RTooSmall { n: usize, r: usize },
    #[error("diagram {gamma} has size {got}, expected {expected}")]
    Size { gamma: Partition, got: usize, expected: usize },
    #[error("diagram {gamma} does not fit a {rows}x{cols} frame")]
    Frame { gamma: Partition, rows: usize, cols: usize },
    #[error("expansion of degree {degree} exceeds the cap {cap}")]
    ResourceCap { degree: usize, cap: usize },
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Majorization,
    Grassmann1,
    Grassmann2,
    Series,
}

/// `Σ_{i ∈ indices} λ_i ≤ bound`, certified by a nonzero `c_γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyItem {
    pub indices: Vec<usize>,
    pub bound: i64,
    #[serde(with = "bigint_string")]
    pub c_gamma: BigInt,
    pub diagram: Partition,
}

impl FamilyItem {
    pub fn inequality(&self, r: usize) -> OccupationInequality {
        let len = r.max(self.indices.iter().copied().max().unwrap_or(0));
        let mut coeffs = vec![0; len];
        for &i in &self.indices {
            coeffs[i - 1] += 1;
        }
        OccupationInequality::pure(coeffs, self.bound)
    }
}

/// A point that violates an excluded inequality. When `state` is present
/// the spectrum is recomputed from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub state: Option<String>,
    pub r: usize,
    /// Occupation numbers as `"p/q"`.
    pub spectrum: Vec<String>,
    pub lhs: String,
    pub bound: i64,
}

impl Certificate {
    fn build(indices: &[usize], bound: i64, r: usize, state: Option<String>, spectrum: Vec<BigRational>) -> Self {
        let lhs: BigRational = indices.iter().map(|&i| spectrum.get(i - 1).cloned().unwrap_or_else(BigRational::zero)).sum();
        Certificate { state, r, spectrum: spectrum.iter().map(|q| q.to_string()).collect(), lhs: lhs.to_string(), bound }
    }

    fn from_state(indices: &[usize], bound: i64, expr: &str, r: usize) -> Result<Self, GeneratorError> {
        let psi = WedgeState::parse(expr, r)?;
        let occ = occupation_numbers(&psi)?;
        let spectrum = occ.exact.ok_or(StateError::Parse("state does not have a diagonal density matrix".into()))?;
        Ok(Certificate::build(indices, bound, r, Some(expr.to_string()), spectrum))
    }

    /// Recompute the spectrum (from the state when given) and confirm that
    /// it violates `Σ_{indices} λ_i ≤ bound`.
    pub fn check(&self, indices: &[usize]) -> bool {
        let spectrum: Option<Vec<BigRational>> = match &self.state {
            Some(expr) => WedgeState::parse(expr, self.r)
                .ok()
                .and_then(|psi| occupation_numbers(&psi).ok())
                .and_then(|o| o.exact),
            None => self.spectrum.iter().map(|s| crate::states::parse_rational(s)).collect(),
        };
        let Some(spectrum) = spectrum else { return false };
        let lhs: BigRational = indices.iter().map(|&i| spectrum.get(i - 1).cloned().unwrap_or_else(BigRational::zero)).sum();
        lhs > BigRational::from(BigInt::from(self.bound))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    pub indices: Vec<usize>,
    pub diagram: Partition,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityFamily {
    pub kind: FamilyKind,
    #[serde(rename = "N")]
    pub n: usize,
    pub r_or_p: usize,
    pub items: Vec<FamilyItem>,
    pub exclusions: Vec<Exclusion>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Partial-sum (majorization) constraints `λ_1 + ⋯ + λ_k ≤ ν_1 + ⋯ + ν_k`
/// that cut the Weyl chamber `λ_1 ≥ ⋯ ≥ λ_r ≥ 0, Σλ = |ν|` in a facet.
pub fn majorization_constraints(nu: &Partition, r: usize) -> Result<InequalityFamily, GeneratorError> {
    let n = nu.size();
    let mut candidates = Vec::new();
    let mut s = 0;
    for k in 1..r {
        s += nu.part(k - 1);
        if s < n {
            candidates.push((k, s));
        }
    }
    let items = if candidates.is_empty() || r < 2 {
        Vec::new()
    } else {
        let mut ineqs = chamber(r);
        for &(k, s) in &candidates {
            ineqs.push(Constraint::le(partial_sum(k, r), BigRational::from(BigInt::from(s))));
        }
        let trace = Constraint::eq(vec![one(); r], BigRational::from(BigInt::from(n)));
        let poly = polytope::from_h(r, &[trace], &ineqs)?;
        candidates
            .into_iter()
            .filter(|&(k, s)| {
                let c = Constraint::le(partial_sum(k, r), BigRational::from(BigInt::from(s)));
                poly.is_facet(&c)
            })
            .map(|(k, s)| FamilyItem {
                indices: (1..=k).collect(),
                bound: s as i64,
                c_gamma: BigInt::one(),
                diagram: Partition::empty(),
            })
            .collect()
    };
    Ok(InequalityFamily {
        kind: FamilyKind::Majorization,
        n,
        r_or_p: r,
        items,
        exclusions: Vec::new(),
        note: Some(format!("trace: λ1 + ... + λ{r} = {n}")),
    })
}

fn one() -> BigRational {
    BigRational::one()
}

fn partial_sum(k: usize, r: usize) -> Vec<BigRational> {
    (0..r).map(|i| if i < k { one() } else { BigRational::zero() }).collect()
}

/// `λ_i ≥ λ_{i+1}` and `λ_r ≥ 0` as `≤` constraints.
pub(crate) fn chamber(r: usize) -> Vec<Constraint> {
    let mut out = Vec::new();
    for i in 0..r - 1 {
        let mut a = vec![BigRational::zero(); r];
        a[i] = -one();
        a[i + 1] = one();
        out.push(Constraint::le(a, BigRational::zero()));
    }
    let mut a = vec![BigRational::zero(); r];
    a[r - 1] = -one();
    out.push(Constraint::le(a, BigRational::zero()));
    out
}

/// `c_γ = Σ_k (-1)^k t(γ/[1^k])` for `|γ| = N + 1`.
pub fn cgamma_kind2(gamma: &Partition, n: usize) -> Result<BigInt, GeneratorError> {
    if gamma.size() != n + 1 {
        return Err(GeneratorError::Size { gamma: gamma.clone(), got: gamma.size(), expected: n + 1 });
    }
    Ok(cgamma_kind2_alternating(gamma))
}

pub fn cgamma_kind2_alternating(gamma: &Partition) -> BigInt {
    let mut c = BigInt::zero();
    for k in 0..=gamma.height() {
        let t = BigInt::from(count_skew_standard(gamma, &Partition::column(k)));
        if k % 2 == 0 {
            c += t;
        } else {
            c -= t;
        }
    }
    c
}

/// `Σ_{i>0} t(γ/[2, 1^{2i-1}])`, valid for non-column diagrams.
pub fn cgamma_kind2_positive(gamma: &Partition) -> BigInt {
    let mut c = BigInt::zero();
    let mut i = 1;
    loop {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, 2 * i - 1));
        let tau = Partition::new(parts).expect("decreasing");
        if tau.size() > gamma.size() {
            break;
        }
        c += BigInt::from(count_skew_standard(gamma, &tau));
        i += 1;
    }
    c
}

fn check_kind1_frame(gamma: &Partition, n: usize, r: usize) -> Result<(), GeneratorError> {
    let ell = r - n + 1;
    if gamma.size() != ell {
        return Err(GeneratorError::Size { gamma: gamma.clone(), got: gamma.size(), expected: ell });
    }
    if !gamma.fits(n - 1, ell) {
        return Err(GeneratorError::Frame { gamma: gamma.clone(), rows: n - 1, cols: ell });
    }
    Ok(())
}

/// `c_γ` for the first kind through `c_γ = Σ_{γ/τ = cell} c_τ` on
/// non-row diagrams, with rows `[m]` worth 1 for even `m`, 0 for odd.
pub fn cgamma_kind1(gamma: &Partition, n: usize, r: usize) -> Result<BigInt, GeneratorError> {
    if r <= n || n < 2 {
        return Err(GeneratorError::RTooSmall { n, r });
    }
    check_kind1_frame(gamma, n, r)?;
    Ok(cgamma_kind1_recurrence(gamma, &mut HashMap::new()))
}

pub fn cgamma_kind1_recurrence(gamma: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
    if gamma.height() <= 1 {
        return BigInt::from(u8::from(gamma.size().is_multiple_of(2)));
    }
    if let Some(c) = memo.get(gamma) {
        return c.clone();
    }
    let c = gamma.remove_corner_cells().iter().map(|tau| cgamma_kind1_recurrence(tau, memo)).sum::<BigInt>();
    memo.insert(gamma.clone(), c.clone());
    c
}

/// `Σ_k (-1)^k t(γ/[k])`.
pub fn cgamma_kind1_alternating(gamma: &Partition) -> BigInt {
    let mut c = BigInt::zero();
    for k in 0..=gamma.width() {
        let t = BigInt::from(count_skew_standard(gamma, &Partition::row(k)));
        if k % 2 == 0 {
            c += t;
        } else {
            c -= t;
        }
    }
    c
}

/// `Σ_{i>0} t(γ/[2i, 1])`, valid for diagrams that are neither rows nor
/// columns.
pub fn cgamma_kind1_positive(gamma: &Partition) -> BigInt {
    let mut c = BigInt::zero();
    let mut i = 1;
    while 2 * i < gamma.size() {
        let tau = Partition::new(vec![2 * i, 1]).expect("decreasing");
        c += BigInt::from(count_skew_standard(gamma, &tau));
        i += 1;
    }
    c
}

/// Default cap on `C(p, N)`, the degree of the expanded product.
pub const KIND2_DEGREE_CAP: usize = 21;
/// Default cap on `p` for the explicit expansion.
pub const KIND2_P_CAP: usize = 7;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Second-kind inequalities `λ_{i_1} + ⋯ + λ_{i_p} ≤ N - 1`, one per diagram
/// `γ` with `c_γ ≠ 0` in `∏_{|K| = N} (Σ_{k∈K} x_k) = Σ c_γ s_γ(x_1..x_p)`.
pub fn grassmann_kind2(n: usize, p: usize) -> Result<InequalityFamily, GeneratorError> {
    grassmann_kind2_capped(n, p, KIND2_P_CAP, KIND2_DEGREE_CAP)
}

pub fn grassmann_kind2_capped(n: usize, p: usize, p_cap: usize, degree_cap: usize) -> Result<InequalityFamily, GeneratorError> {
    if p < n || n == 0 {
        return Err(GeneratorError::PTooSmall { n, p });
    }
    let degree = binom(p, n);
    let coefficients: BTreeMap<Partition, BigInt> = if p == n + 1 {
        partitions_in_box(degree, p, degree)
            .into_par_iter()
            .map(|g| {
                let c = cgamma_kind2_alternating(&g);
                (g, c)
            })
            .collect()
    } else {
        if p > p_cap {
            return Err(GeneratorError::ResourceCap { degree: p, cap: p_cap });
        }
        if degree > degree_cap {
            return Err(GeneratorError::ResourceCap { degree, cap: degree_cap });
        }
        let mut all: BTreeMap<Partition, BigInt> =
            partitions_in_box(degree, p, degree).into_iter().map(|g| (g, BigInt::zero())).collect();
        for (g, c) in schur_expand_symmetric(&chern_product(n, p), p) {
            all.insert(g, c);
        }
        all
    };
    let bound = n as i64 - 1;
    let mut items = Vec::new();
    let mut exclusions = Vec::new();
    for (gamma, c) in coefficients.into_iter().rev() {
        let frame = FramedDiagram::new(gamma.clone(), p, degree).expect("fits by construction");
        let indices = frame.vertical_sequence();
        if !c.is_zero() {
            items.push(FamilyItem { indices, bound, c_gamma: c, diagram: gamma });
            continue;
        }
        let (reason, counterexample) = if p == n + 1 && gamma.height() == 1 {
            let slater = format!("[{}]", (1..=n).map(|i| i.to_string()).collect::<String>());
            let cert = Certificate::from_state(&indices, bound, &slater, indices[p - 1].max(n))?;
            ("row diagram: fails on a single Slater determinant".to_string(), Some(cert))
        } else if p == n + 1 && gamma.width() == 1 && n.is_multiple_of(2) {
            let cert = flat_spectrum_certificate(&indices, bound, n)?;
            ("column diagram for even N: fails on the flat spectrum N/(N+2)".to_string(), Some(cert))
        } else {
            ("zero coefficient".to_string(), None)
        };
        exclusions.push(Exclusion { indices, diagram: gamma, reason, counterexample });
    }
    Ok(InequalityFamily { kind: FamilyKind::Grassmann2, n, r_or_p: p, items, exclusions, note: None })
}

/// `Σ_j [complement of {2j-1, 2j}]` in `∧^N H_{N+2}`: every orbital has
/// occupation `N/(N+2)` and the density matrix is diagonal.
fn flat_spectrum_certificate(indices: &[usize], bound: i64, n: usize) -> Result<Certificate, GeneratorError> {
    let r = n + 2;
    let terms: Vec<String> = (1..=r / 2)
        .map(|j| {
            let s: Vec<String> = (1..=r).filter(|&i| i != 2 * j - 1 && i != 2 * j).map(|i| i.to_string()).collect();
            format!("[{}]", s.join(","))
        })
        .collect();
    Certificate::from_state(indices, bound, &terms.join("+"), r)
}

/// `∏_{K ⊆ {1..p}, |K| = N} (Σ_{k∈K} x_k)`.
pub fn chern_product(n: usize, p: usize) -> SparsePoly {
    let mut out = SparsePoly::one();
    for subset in subsets(p, n) {
        let coeffs: Vec<i64> = (1..=p).map(|i| i64::from(subset.contains(&i))).collect();
        out = &out * &SparsePoly::linear(&coeffs);
    }
    out
}

fn subsets(p: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, p: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..=p {
            cur.push(i);
            rec(i + 1, p, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, p, n, &mut Vec::new(), &mut out);
    out
}

/// Schur expansion of a symmetric polynomial in `p` variables by peeling
/// the lexicographically largest dominant monomial.
pub fn schur_expand_symmetric(f: &SparsePoly, p: usize) -> BTreeMap<Partition, BigInt> {
    let mut dominant: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (m, c) in f.terms() {
        let exps: Vec<usize> = (0..p).map(|i| m.get(i).copied().unwrap_or(0) as usize).collect();
        if exps.windows(2).all(|w| w[0] >= w[1]) {
            dominant.insert(Partition::new(exps).expect("dominant"), c.clone());
        }
    }
    let mut kostka = KostkaTable::new();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = dominant.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        dominant.remove(&lead);
        if c.is_zero() {
            continue;
        }
        let keys: Vec<Partition> = dominant.keys().cloned().collect();
        for mu in keys {
            let k = kostka.get(&lead, mu.parts());
            if !k.is_zero() {
                let e = dominant.get_mut(&mu).expect("present");
                *e -= &c * BigInt::from(k);
            }
        }
        out.insert(lead, c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// First-kind inequalities `λ_{i_1} + ⋯ + λ_{i_{N-1}} ≤ N - 2` over diagrams
/// `γ ⊆ (N-1) × ℓ`, `|γ| = ℓ = r - N + 1`.
pub fn grassmann_kind1(n: usize, r: usize) -> Result<InequalityFamily, GeneratorError> {
    if r <= n {
        return Err(GeneratorError::RTooSmall { n, r });
    }
    if n < 3 {
        return Ok(InequalityFamily {
            kind: FamilyKind::Grassmann1,
            n,
            r_or_p: r,
            items: Vec::new(),
            exclusions: Vec::new(),
            note: Some(format!(
                "N = {n}: the family needs N >= 3 (for N = 2 the bound N - 2 = 0 would force single occupied orbitals)"
            )),
        });
    }
    let ell = r - n + 1;
    let p = n - 1;
    let bound = n as i64 - 2;
    let mut memo = HashMap::new();
    let mut items = Vec::new();
    let mut exclusions = Vec::new();
    for gamma in partitions_in_box(ell, p, ell) {
        let c = cgamma_kind1_recurrence(&gamma, &mut memo);
        let indices = FramedDiagram::new(gamma.clone(), p, ell).expect("fits").vertical_sequence();
        if !c.is_zero() {
            items.push(FamilyItem { indices, bound, c_gamma: c, diagram: gamma });
            continue;
        }
        let (reason, counterexample) = if gamma.width() == 1 {
            let slater = format!("[{}]", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(","));
            let cert = Certificate::from_state(&indices, bound, &slater, r)?;
            ("column diagram: fails on a single Slater determinant".to_string(), Some(cert))
        } else if gamma.height() == 1 {
            // ℓ = 2m - 1: e_1 ∧ ⋯ ∧ e_{N-2} ∧ Σ_j e_a ∧ e_b over m disjoint pairs
            let m = ell.div_ceil(2);
            let core: Vec<String> = (1..=n - 2).map(|i| i.to_string()).collect();
            let terms: Vec<String> = (1..=m)
                .map(|j| {
                    let mut s = core.clone();
                    s.push((n - 2 + 2 * j - 1).to_string());
                    s.push((n - 2 + 2 * j).to_string());
                    format!("[{}]", s.join(","))
                })
                .collect();
            let cert = Certificate::from_state(&indices, bound, &terms.join("+"), r)?;
            ("odd row: fails on (1^(N-2), (1/m)^(2m))".to_string(), Some(cert))
        } else {
            ("zero coefficient".to_string(), None)
        };
        exclusions.push(Exclusion { indices, diagram: gamma, reason, counterexample });
    }
    Ok(InequalityFamily { kind: FamilyKind::Grassmann1, n, r_or_p: r, items, exclusions, note: None })
}

/// `λ_{i_1} + ⋯ + λ_{i_p} ≤ N - 1` with `i_k = k + C(k-1, N-1)`.
pub fn series_inequality(n: usize, p: usize) -> Result<OccupationInequality, GeneratorError> {
    if p < n || n == 0 {
        return Err(GeneratorError::PTooSmall { n, p });
    }
    let indices: Vec<usize> = (1..=p).map(|k| k + binom(k - 1, n - 1)).collect();
    let mut coeffs = vec![0; *indices.last().expect("p >= 1")];
    for i in indices {
        coeffs[i - 1] = 1;
    }
    Ok(OccupationInequality::pure(coeffs, n as i64 - 1))
}

/// Particle-hole duality on inequalities: `Σ c_i λ_i ≤ b` over `∧^N H_r`
/// becomes `Σ -c_{r+1-j} λ*_j ≤ b - Σ c` over `∧^{r-N} H_r`.
pub fn hole_dual_inequality(ineq: &OccupationInequality, r: usize) -> OccupationInequality {
    let mut c = ineq.lambda_coeffs.clone();
    c.resize(r, 0);
    let total: i64 = c.iter().sum();
    let dual: Vec<i64> = (1..=r).map(|j| -c[r - j]).collect();
    OccupationInequality::pure(dual, ineq.bound() - total)
}

/// `λ*_i = 1 - λ_{r+1-i}`.
pub fn hole_dual_spectrum(lambda: &[BigRational]) -> Vec<BigRational> {
    let r = lambda.len();
    (1..=r).map(|i| one() - &lambda[r - i]).collect()
}

/// Dual of a linear equation `Σ c_i λ_i = b` (same rule as inequalities).
pub fn hole_dual_equation(coeffs: &[i64], b: i64) -> (Vec<i64>, i64) {
    let d = hole_dual_inequality(&OccupationInequality::pure(coeffs.to_vec(), b), coeffs.len());
    (d.lambda_coeffs.clone(), d.bound())
}

/// Exact check of `Σ_{indices} λ_i ≤ bound` on a sorted spectrum.
pub fn item_holds(item: &FamilyItem, lambda: &[f64], tol: f64) -> bool {
    let lhs: f64 = item.indices.iter().map(|&i| lambda.get(i - 1).copied().unwrap_or(0.0)).sum();
    lhs <= item.bound as f64 + tol
}

/// Largest violation `lhs - bound` of any item on the spectrum.
pub fn worst_violation(family: &InequalityFamily, lambda: &[f64]) -> f64 {
    family
        .items
        .iter()
        .map(|it| it.indices.iter().map(|&i| lambda.get(i - 1).copied().unwrap_or(0.0)).sum::<f64>() - it.bound as f64)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Ratio of a certificate's left side to its bound, as a float.
pub fn certificate_margin(cert: &Certificate) -> f64 {
    let lhs = crate::states::parse_rational(&cert.lhs).and_then(|q| q.to_f64()).unwrap_or(f64::NAN);
    lhs - cert.bound as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn index_sets(f: &InequalityFamily) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = f.items.iter().map(|i| i.indices.clone()).collect();
        v.sort();
        v
    }

    #[test]
    fn kind2_three_four() {
        let f = grassmann_kind2(3, 4).unwrap();
        assert_eq!(
            index_sets(&f),
            vec![vec![1, 2, 4, 7], vec![1, 2, 5, 6], vec![1, 3, 4, 6], vec![2, 3, 4, 5]]
        );
        assert!(f.items.iter().all(|i| i.bound == 2));
        let row = f.exclusions.iter().find(|e| e.diagram == p(&[4])).unwrap();
        assert!(row.counterexample.as_ref().unwrap().check(&row.indices));
    }

    #[test]
    fn kind2_small_cases() {
        let f = grassmann_kind2(2, 4).unwrap();
        assert_eq!(index_sets(&f), vec![vec![1, 3, 5, 7]]);
        assert_eq!(f.items[0].bound, 1);
        let f = grassmann_kind2(3, 3).unwrap();
        assert_eq!(index_sets(&f), vec![vec![1, 2, 4]]);
        assert!(grassmann_kind2(3, 2).is_err());
    }

    #[test]
    fn kind2_even_column_excluded() {
        let f = grassmann_kind2(4, 5).unwrap();
        let col = f.exclusions.iter().find(|e| e.diagram == Partition::column(5)).unwrap();
        assert_eq!(col.indices, vec![2, 3, 4, 5, 6]);
        let cert = col.counterexample.as_ref().unwrap();
        assert_eq!(cert.state.as_deref(), Some("[3,4,5,6]+[1,2,5,6]+[1,2,3,4]"));
        assert!(cert.spectrum.iter().all(|s| s == "2/3"));
        assert!(cert.check(&col.indices));
    }

    #[test]
    fn kind2_formulas() {
        assert!(cgamma_kind2(&Partition::column(4), 3).unwrap().is_one());
        assert!(cgamma_kind2(&Partition::column(5), 4).unwrap().is_zero());
        assert!(cgamma_kind2(&Partition::row(4), 3).unwrap().is_zero());
        assert!(cgamma_kind2(&p(&[2, 1, 1]), 3).unwrap() > BigInt::zero());
        assert!(cgamma_kind2(&p(&[2, 1]), 3).is_err());
    }

    #[test]
    fn kind1_families() {
        let f = grassmann_kind1(3, 6).unwrap();
        let sets = index_sets(&f);
        for s in [vec![1, 6], vec![2, 5], vec![3, 4]] {
            assert!(sets.contains(&s), "{s:?}");
        }
        let f = grassmann_kind1(3, 7).unwrap();
        assert!(!index_sets(&f).contains(&vec![1, 7]));
        let row = f.exclusions.iter().find(|e| e.indices == vec![1, 7]).unwrap();
        assert!(row.counterexample.as_ref().unwrap().check(&row.indices));

        let f = grassmann_kind1(4, 7).unwrap();
        for s in index_sets(&f) {
            assert_eq!(s.len(), 3);
            assert_eq!(s.iter().sum::<usize>(), 10);
        }
        assert!(grassmann_kind1(2, 5).unwrap().items.is_empty());
    }

    #[test]
    fn kind1_rows() {
        let mut memo = HashMap::new();
        assert!(cgamma_kind1_recurrence(&Partition::row(4), &mut memo).is_one());
        assert!(cgamma_kind1_recurrence(&Partition::row(5), &mut memo).is_zero());
        assert!(cgamma_kind1(&p(&[2, 1]), 2, 4).is_err());
    }

    #[test]
    fn pascal_left_half() {
        let rows: [&[i64]; 9] = [&[1], &[0], &[1, 0], &[0, 1], &[1, 1, 1], &[0, 2, 2], &[1, 2, 4, 2], &[0, 3, 6, 6], &[1, 3, 9, 12, 6]];
        let mut memo = HashMap::new();
        for (ell, row) in rows.iter().enumerate() {
            for (k, &want) in row.iter().enumerate() {
                let g = Partition::new(vec![ell - k, k]).unwrap();
                assert_eq!(cgamma_kind1_recurrence(&g, &mut memo), BigInt::from(want), "ℓ={ell} k={k}");
            }
        }
    }

    #[test]
    fn series() {
        let s = series_inequality(3, 6).unwrap();
        let idx: Vec<usize> = (1..=s.lambda_coeffs.len()).filter(|&i| s.lambda_coeffs[i - 1] == 1).collect();
        assert_eq!(idx, vec![1, 2, 4, 7, 11, 16]);
        assert_eq!(s.bound(), 2);
        let s = series_inequality(2, 4).unwrap();
        assert_eq!(s.lambda_coeffs, vec![1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn majorization() {
        let f = majorization_constraints(&Partition::column(3), 6).unwrap();
        assert_eq!(f.items.len(), 1);
        assert_eq!((f.items[0].indices.clone(), f.items[0].bound), (vec![1], 1));
        assert!(majorization_constraints(&Partition::row(3), 4).unwrap().items.is_empty());
        let f = majorization_constraints(&p(&[2, 2]), 5).unwrap();
        assert_eq!(f.items.len(), 1);
        assert_eq!((f.items[0].indices.clone(), f.items[0].bound), (vec![1], 2));
    }

    #[test]
    fn hole_duality() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let v = vec![q(1, 1), q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)];
        assert_eq!(hole_dual_spectrum(&v), v);
        let w = vec![q(3, 4), q(1, 2), q(1, 3), q(0, 1)];
        assert_eq!(hole_dual_spectrum(&hole_dual_spectrum(&w)), w);
        let ineq = OccupationInequality::pure(vec![1, 0, 0, 0, 0, 1], 1);
        assert_eq!(hole_dual_inequality(&hole_dual_inequality(&ineq, 6), 6), ineq);
        // head degeneracy λ1 = λ2 maps to tail degeneracy λ*_{r-1} = λ*_r
        let (c, b) = hole_dual_equation(&[1, -1, 0, 0, 0], 0);
        assert_eq!((c, b), (vec![0, 0, 0, 1, -1], 0));
    }
}

//! Plethysm characters `s_μ[s_ν]` in `r` variables and their Schur
//! decomposition, used to produce inner points of moment polytopes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::combinatorics::{enumerate_ssyt, partitions_in_box, KostkaTable, Partition};
use crate::permutations::Permutation;

/// Exponent vector of fixed length `r`.
pub type Weight = SmallVec<[u8; 8]>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlethysmError {
    #[error("diagram {nu} has more than {r} rows")]
    Height { nu: Partition, r: usize },
    #[error("negative multiplicity {mult} at {lambda}: input is not a character")]
    NegativeMultiplicity { lambda: Partition, mult: i128 },
    #[error("multiplicity overflow")]
    Overflow,
    #[error("character needs full weight support")]
    NotFull,
    #[error("resource cap: {0}")]
    ResourceCap(String),
}

/// Weight multiplicities of a polynomial `GL_r` character. When `full` is
/// false only dominant weights are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricCharacter {
    r: usize,
    degree: usize,
    full: bool,
    weights: FxHashMap<Weight, i128>,
}

impl SymmetricCharacter {
    /// The trivial character (degree 0).
    pub fn one(r: usize) -> Self {
        let mut weights = FxHashMap::default();
        weights.insert(Weight::from_elem(0, r), 1);
        SymmetricCharacter { r, degree: 0, full: true, weights }
    }

    pub fn from_weights(r: usize, full: bool, weights: impl IntoIterator<Item = (Vec<u8>, i128)>) -> Self {
        let mut map: FxHashMap<Weight, i128> = FxHashMap::default();
        let mut degree = 0;
        for (w, c) in weights {
            assert_eq!(w.len(), r, "weight length");
            degree = w.iter().map(|&e| e as usize).sum();
            *map.entry(Weight::from_vec(w)).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        SymmetricCharacter { r, degree, full, weights: map }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn multiplicity(&self, w: &[u8]) -> i128 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Weight, &i128)> {
        self.weights.iter()
    }

    /// Sum of all multiplicities, i.e. the dimension of the representation.
    pub fn dimension(&self) -> Result<i128, PlethysmError> {
        if !self.full {
            return Err(PlethysmError::NotFull);
        }
        Ok(self.weights.values().sum())
    }

    /// Dominant weights with their multiplicities, as partitions.
    pub fn dominant(&self) -> BTreeMap<Partition, i128> {
        self.weights
            .iter()
            .filter(|(w, _)| w.windows(2).all(|p| p[0] >= p[1]))
            .map(|(w, &c)| (Partition::new(w.iter().map(|&e| e as usize).collect()).expect("dominant"), c))
            .collect()
    }

    pub fn dominant_part(&self) -> SymmetricCharacter {
        SymmetricCharacter {
            r: self.r,
            degree: self.degree,
            full: false,
            weights: self.weights.iter().filter(|(w, _)| w.windows(2).all(|p| p[0] >= p[1])).map(|(w, &c)| (w.clone(), c)).collect(),
        }
    }

    fn add_scaled(&mut self, other: &SymmetricCharacter, k: i128) -> Result<(), PlethysmError> {
        for (w, &c) in &other.weights {
            let e = self.weights.entry(w.clone()).or_insert(0);
            *e = e.checked_add(c.checked_mul(k).ok_or(PlethysmError::Overflow)?).ok_or(PlethysmError::Overflow)?;
        }
        self.weights.retain(|_, c| *c != 0);
        Ok(())
    }

    fn zero_like(r: usize, degree: usize, full: bool) -> Self {
        SymmetricCharacter { r, degree, full, weights: FxHashMap::default() }
    }
}

/// Character of `H_r^ν`: weights are SSYT contents.
pub fn character(nu: &Partition, r: usize) -> Result<SymmetricCharacter, PlethysmError> {
    if nu.height() > r {
        return Err(PlethysmError::Height { nu: nu.clone(), r });
    }
    let weights = enumerate_ssyt(nu, r).into_iter().map(|t| (t.content(r).into_iter().map(|e| e as u8).collect(), 1));
    let mut ch = SymmetricCharacter::from_weights(r, true, weights);
    ch.degree = nu.size();
    Ok(ch)
}

/// `z_i ↦ z_i^k`.
pub fn power_substitute(f: &SymmetricCharacter, k: usize) -> Result<SymmetricCharacter, PlethysmError> {
    if !f.full {
        return Err(PlethysmError::NotFull);
    }
    let weights = f.weights.iter().map(|(w, &c)| (w.iter().map(|&e| e * k as u8).collect::<Weight>(), c)).collect();
    Ok(SymmetricCharacter { r: f.r, degree: f.degree * k, full: true, weights })
}

/// Full product of two characters.
pub fn multiply(a: &SymmetricCharacter, b: &SymmetricCharacter) -> Result<SymmetricCharacter, PlethysmError> {
    if !a.full || !b.full {
        return Err(PlethysmError::NotFull);
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out: FxHashMap<Weight, i128> = FxHashMap::default();
    out.reserve(large.len() * 2);
    for (ws, &cs) in &small.weights {
        for (wl, &cl) in &large.weights {
            let w: Weight = ws.iter().zip(wl).map(|(x, y)| x + y).collect();
            let e = out.entry(w).or_insert(0);
            *e = e.checked_add(cs.checked_mul(cl).ok_or(PlethysmError::Overflow)?).ok_or(PlethysmError::Overflow)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(SymmetricCharacter { r: a.r, degree: a.degree + b.degree, full: true, weights: out })
}

/// Dominant part of a product, computed only at dominant targets.
pub fn multiply_dominant(a: &SymmetricCharacter, b: &SymmetricCharacter) -> Result<SymmetricCharacter, PlethysmError> {
    if !a.full || !b.full {
        return Err(PlethysmError::NotFull);
    }
    let r = a.r;
    let degree = a.degree + b.degree;
    let cap_a: usize = (0..r).map(|i| a.weights.keys().map(|w| w[i] as usize).max().unwrap_or(0)).max().unwrap_or(0);
    let cap_b: usize = (0..r).map(|i| b.weights.keys().map(|w| w[i] as usize).max().unwrap_or(0)).max().unwrap_or(0);
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out = FxHashMap::default();
    for target in partitions_in_box(degree, r, cap_a + cap_b) {
        let t: Weight = target.padded(r).into_iter().map(|e| e as u8).collect();
        let mut acc: i128 = 0;
        for (ws, &cs) in &small.weights {
            if ws.iter().zip(&t).any(|(x, y)| x > y) {
                continue;
            }
            let rest: Weight = t.iter().zip(ws).map(|(y, x)| y - x).collect();
            if let Some(&cl) = large.weights.get(&rest) {
                acc = acc.checked_add(cs.checked_mul(cl).ok_or(PlethysmError::Overflow)?).ok_or(PlethysmError::Overflow)?;
            }
        }
        if acc != 0 {
            out.insert(t, acc);
        }
    }
    Ok(SymmetricCharacter { r, degree, full: false, weights: out })
}

/// `h_0[f], h_1[f], …` through `m·h_m = Σ_{k=1}^m p_k[f]·h_{m-k}[f]`.
pub struct PlethysmTower {
    f: SymmetricCharacter,
    powers: Vec<SymmetricCharacter>,
    h: Vec<SymmetricCharacter>,
}

impl PlethysmTower {
    pub fn new(f: SymmetricCharacter) -> Result<Self, PlethysmError> {
        if !f.full {
            return Err(PlethysmError::NotFull);
        }
        let one = SymmetricCharacter::one(f.r);
        Ok(PlethysmTower { f, powers: vec![one.clone()], h: vec![one] })
    }

    pub fn extend_to(&mut self, m: usize) -> Result<(), PlethysmError> {
        while self.h.len() <= m {
            let n = self.h.len();
            self.powers.push(power_substitute(&self.f, n)?);
            let mut acc = SymmetricCharacter::zero_like(self.f.r, self.f.degree * n, true);
            for k in 1..=n {
                acc.add_scaled(&multiply(&self.powers[k], &self.h[n - k])?, 1)?;
            }
            for c in acc.weights.values_mut() {
                assert_eq!(*c % n as i128, 0, "Newton recurrence left a non-integer multiplicity");
                *c /= n as i128;
            }
            self.h.push(acc);
        }
        Ok(())
    }

    pub fn h(&mut self, m: usize) -> Result<&SymmetricCharacter, PlethysmError> {
        self.extend_to(m)?;
        Ok(&self.h[m])
    }

    /// Dominant part of `s_μ[f] = det(h_{μ_i - i + j}[f])`.
    pub fn schur_dominant(&mut self, mu: &Partition) -> Result<SymmetricCharacter, PlethysmError> {
        self.schur_impl(mu, true)
    }

    /// Full character of `s_μ[f]`.
    pub fn schur_full(&mut self, mu: &Partition) -> Result<SymmetricCharacter, PlethysmError> {
        self.schur_impl(mu, false)
    }

    fn schur_impl(&mut self, mu: &Partition, dominant_only: bool) -> Result<SymmetricCharacter, PlethysmError> {
        let l = mu.height();
        let degree = self.f.degree * mu.size();
        if l == 0 {
            return Ok(SymmetricCharacter::one(self.f.r));
        }
        self.extend_to(mu.part(0) + l - 1)?;
        if l == 1 {
            let h = self.h[mu.part(0)].clone();
            return Ok(if dominant_only { h.dominant_part() } else { h });
        }
        let mut out = SymmetricCharacter::zero_like(self.f.r, degree, !dominant_only);
        for sigma in all_permutations(l) {
            let idx: Option<Vec<usize>> = (0..l)
                .map(|i| {
                    let k = mu.part(i) as i64 - i as i64 + sigma[i] as i64;
                    (k >= 0).then_some(k as usize)
                })
                .collect();
            let Some(idx) = idx else { continue };
            let sign = Permutation::from_zero_based(&sigma).expect("permutation").length() % 2;
            let mut term = self.h[idx[0]].clone();
            for (j, &k) in idx.iter().enumerate().skip(1) {
                term = if dominant_only && j == l - 1 { multiply_dominant(&term, &self.h[k])? } else { multiply(&term, &self.h[k])? };
            }
            out.add_scaled(&term, if sign == 0 { 1 } else { -1 })?;
        }
        Ok(out)
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn plethysm_h(m: usize, f: &SymmetricCharacter) -> Result<SymmetricCharacter, PlethysmError> {
    let mut tower = PlethysmTower::new(f.clone())?;
    Ok(tower.h(m)?.clone())
}

pub fn plethysm_schur(mu: &Partition, f: &SymmetricCharacter) -> Result<SymmetricCharacter, PlethysmError> {
    PlethysmTower::new(f.clone())?.schur_full(mu)
}

/// Peel the lexicographically largest dominant weight, subtracting its
/// Kostka row.
pub fn schur_decompose(f: &SymmetricCharacter) -> Result<Vec<(Partition, BigInt)>, PlethysmError> {
    let mut dom = f.dominant();
    dom.retain(|_, c| *c != 0);
    let mut kostka = KostkaTable::new();
    let mut out = Vec::new();
    while let Some((lead, c)) = dom.pop_last() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            return Err(PlethysmError::NegativeMultiplicity { lambda: lead, mult: c });
        }
        for (mu, m) in dom.iter_mut() {
            if !lead.dominates(mu) {
                continue;
            }
            let k = kostka.get(&lead, mu.parts()).to_i128().ok_or(PlethysmError::Overflow)?;
            *m -= c * k;
        }
        out.push((lead, BigInt::from(c)));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlethysmComponent {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(rename = "mult", with = "crate::coefficients::bigint_string")]
    pub multiplicity: BigInt,
}

/// Normalized spectra `(λ/|μ|, μ/|μ|)` of a component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerPoint {
    pub lambda: Vec<BigRational>,
    pub mu: Vec<BigRational>,
    pub component: PlethysmComponent,
}

/// Default caps: `r ≤ 8` and at most this many stored weights in the top
/// symmetric power.
pub const MAX_R: usize = 8;
pub const MAX_WEIGHTS: u128 = 3_000_000;

/// Upper estimate of the number of weights of `h_M[s_ν]` in `r` variables.
pub fn estimated_weights(nu: &Partition, r: usize, m: usize) -> u128 {
    let d = (nu.size() * m) as u128;
    let k = r as u128 - 1;
    // C(d + r - 1, r - 1)
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (d + k - i) / (i + 1);
    }
    c
}

pub fn check_caps(nu: &Partition, r: usize, m: usize) -> Result<(), PlethysmError> {
    if r > MAX_R {
        return Err(PlethysmError::ResourceCap(format!("r = {r} exceeds {MAX_R}")));
    }
    let est = estimated_weights(nu, r, m);
    if est > MAX_WEIGHTS {
        return Err(PlethysmError::ResourceCap(format!("about {est} weights at M = {m} (cap {MAX_WEIGHTS})")));
    }
    Ok(())
}

/// Decompose `s_μ[s_ν]` for every `μ` with `|μ| = m` and at most
/// `rank_bound` rows.
pub fn components_at(tower: &mut PlethysmTower, m: usize, rank_bound: usize) -> Result<Vec<PlethysmComponent>, PlethysmError> {
    let mut out = Vec::new();
    for mu in partitions_in_box(m, rank_bound, m) {
        let ch = tower.schur_dominant(&mu)?;
        for (lambda, mult) in schur_decompose(&ch)? {
            out.push(PlethysmComponent { lambda, mu: mu.clone(), multiplicity: mult });
        }
    }
    Ok(out)
}

pub fn normalize(c: &PlethysmComponent, r: usize, rank_bound: usize) -> InnerPoint {
    let m = BigInt::from(c.mu.size());
    let q = |x: usize| BigRational::new(BigInt::from(x), m.clone());
    InnerPoint {
        lambda: c.lambda.padded(r).into_iter().map(q).collect(),
        mu: c.mu.padded(rank_bound).into_iter().map(q).collect(),
        component: c.clone(),
    }
}

/// All `(λ/|μ|, μ/|μ|)` with `m^μ_λ ≠ 0`, `|μ| ≤ M`, `height(μ) ≤ rank_bound`.
pub fn inner_points(nu: &Partition, r: usize, rank_bound: usize, max_m: usize) -> Result<Vec<InnerPoint>, PlethysmError> {
    check_caps(nu, r, max_m)?;
    let mut tower = PlethysmTower::new(character(nu, r)?)?;
    let mut out = Vec::new();
    for m in 1..=max_m {
        for c in components_at(&mut tower, m, rank_bound)? {
            out.push(normalize(&c, r, rank_bound));
        }
    }
    Ok(out)
}

/// Multiplicity of `H^λ` in a full character via the alternant: the
/// coefficient of `z^{λ+δ}` in `a_δ · f`.
pub fn alternant_multiplicity(f: &SymmetricCharacter, lambda: &Partition) -> Result<BigInt, PlethysmError> {
    if !f.full {
        return Err(PlethysmError::NotFull);
    }
    let r = f.r;
    let target: Vec<i64> = lambda.padded(r).iter().enumerate().map(|(i, &x)| (x + r - 1 - i) as i64).collect();
    let mut total = BigInt::zero();
    for sigma in all_permutations(r) {
        // a_δ = Σ_σ sgn(σ) z^{σ(δ)}
        let sign = Permutation::from_zero_based(&sigma).expect("permutation").length() % 2;
        let need: Option<Weight> = (0..r)
            .map(|i| {
                let e = target[i] - (r - 1 - sigma[i]) as i64;
                (e >= 0).then_some(e as u8)
            })
            .collect();
        if let Some(w) = need {
            let c = BigInt::from(f.multiplicity(&w));
            if sign == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
    }
    Ok(total)
}

//! Sparse multivariate polynomials over the integers, divided differences,
//! Schubert and Schur polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::combinatorics::{enumerate_ssyt, Partition};
use crate::permutations::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("partition {shape} has more than {vars} rows")]
    TooManyRows { shape: Partition, vars: usize },
    #[error("permutation {w} is not in S_{n}")]
    NotInGroup { w: Permutation, n: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Exponent vector with trailing zeros stripped; index 0 is `x_1`.
pub type Monomial = SmallVec<[u8; 16]>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    terms: FxHashMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(), c);
        p
    }

    /// The variable `x_i`, 1-indexed.
    pub fn var(i: usize) -> Self {
        let mut m = Monomial::from_elem(0, i);
        m[i - 1] = 1;
        let mut p = Self::zero();
        p.add_term(m, BigInt::one());
        p
    }

    pub fn monomial(exps: &[u8], c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::from_slice(exps), c);
        p
    }

    /// `Σ c_i x_i` for the given coefficients (index 0 is `x_1`).
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut m = Monomial::from_elem(0, i + 1);
                m[i] = 1;
                p.add_term(m, BigInt::from(c));
            }
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn sorted_terms(&self) -> Vec<(Monomial, BigInt)> {
        let mut v: Vec<(Monomial, BigInt)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| {
            let n = a.0.len().max(b.0.len());
            let ea = (0..n).map(|i| a.0.get(i).copied().unwrap_or(0));
            let eb = (0..n).map(|i| b.0.get(i).copied().unwrap_or(0));
            eb.cmp(ea)
        });
        v
    }

    pub fn coefficient(&self, exps: &[u8]) -> BigInt {
        let m = trim(Monomial::from_slice(exps));
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::new()).cloned(),
            _ => None,
        }
    }

    /// Index of the highest variable that occurs.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exchange `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            if m2.len() < i + 1 {
                m2.resize(i + 1, 0);
            }
            m2.swap(i - 1, i);
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Substitute `x_k ↦ forms[k-1]` for every variable; variables beyond
    /// `forms.len()` are not allowed.
    pub fn substitute(&self, forms: &[SparsePoly]) -> Self {
        let nv = self.nvars();
        assert!(nv <= forms.len(), "substitution misses variables");
        let mut powers: Vec<Vec<SparsePoly>> = vec![vec![Self::one()]; nv];
        let mut out = Self::zero();
        let mut sorted: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        sorted.sort();
        for (m, c) in sorted {
            let mut t = Self::constant(c.clone());
            for (k, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().expect("seeded") * &forms[k];
                    powers[k].push(next);
                }
                t = &t * &powers[k][e as usize];
            }
            out += t;
        }
        out
    }

    /// Evaluate at an integer point (missing coordinates are zero).
    pub fn evaluate(&self, point: &[i64]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.iter().enumerate() {
                if e > 0 {
                    t *= BigInt::from(point.get(k).copied().unwrap_or(0)).pow(e as u32);
                }
            }
            total += t;
        }
        total
    }

    /// Render with the given variable names; falls back to `x<k>`.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut body = String::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = names.get(i).map(|n| n.to_string()).unwrap_or_else(|| format!("x{}", i + 1));
                if !body.is_empty() && names.get(i).is_none() {
                    body.push('*');
                }
                body.push_str(&name);
                if e > 1 {
                    body.push_str(&format!("^{e}"));
                }
            }
            if body.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    if names.is_empty() {
                        s.push('*');
                    }
                }
                s.push_str(&body);
            }
        }
        s
    }

    /// Render with `x, y, z, w` for the first four variables.
    pub fn format_xyz(&self) -> String {
        self.format_with(&["x", "y", "z", "w"])
    }

    /// Parse sums of products such as `x^2y + 3xz - y` over the letters
    /// `x, y, z, w`, or `x1*x2^2 + x3`.
    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let err = || PolyError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Self::zero();
        let mut chunks = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        chunks.push(cur);
        for chunk in chunks {
            let (neg, body) = match chunk.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            let chars: Vec<char> = body.chars().collect();
            let mut k = 0;
            let read_num = |k: &mut usize| -> Option<u64> {
                let start = *k;
                while *k < chars.len() && chars[*k].is_ascii_digit() {
                    *k += 1;
                }
                chars[start..*k].iter().collect::<String>().parse().ok()
            };
            let coeff = read_num(&mut k).map(BigInt::from).unwrap_or_else(BigInt::one);
            let mut m = Monomial::new();
            while k < chars.len() {
                let ch = chars[k];
                k += 1;
                let var = match ch {
                    '*' => continue,
                    'x' if k < chars.len() && chars[k].is_ascii_digit() => read_num(&mut k).ok_or_else(err)? as usize,
                    'x' => 1,
                    'y' => 2,
                    'z' => 3,
                    'w' => 4,
                    _ => return Err(err()),
                };
                if var == 0 {
                    return Err(err());
                }
                let mut e = 1;
                if k < chars.len() && chars[k] == '^' {
                    k += 1;
                    e = read_num(&mut k).ok_or_else(err)? as u8;
                }
                if m.len() < var {
                    m.resize(var, 0);
                }
                m[var - 1] += e;
            }
            out.add_term(m, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&[]))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u8>,
    coeff: String,
}

impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| TermJson { exponents: m.to_vec(), coeff: c.to_string() })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut p = SparsePoly::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(Monomial::from_vec(t.exponents), c);
        }
        Ok(p)
    }
}

impl AddAssign for SparsePoly {
    fn add_assign(&mut self, rhs: SparsePoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += -rhs;
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let n = ma.len().max(mb.len());
                let m: Monomial = (0..n)
                    .map(|i| ma.get(i).copied().unwrap_or(0) + mb.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed term by term.
pub fn divided_difference(i: usize, f: &SparsePoly) -> SparsePoly {
    assert!(i >= 1, "variables are 1-indexed");
    let mut out = SparsePoly::zero();
    for (m, c) in &f.terms {
        let a = m.get(i - 1).copied().unwrap_or(0);
        let b = m.get(i).copied().unwrap_or(0);
        if a == b {
            continue;
        }
        let (lo, hi, coeff) = if a > b { (b, a, c.clone()) } else { (a, b, -c) };
        let mut base = m.clone();
        if base.len() < i + 1 {
            base.resize(i + 1, 0);
        }
        for k in 0..(hi - lo) {
            let mut t = base.clone();
            t[i - 1] = lo + (hi - lo - 1 - k);
            t[i] = lo + k;
            out.add_term(t, coeff.clone());
        }
    }
    out
}

/// `∂_w = ∂_{i_1} ⋯ ∂_{i_l}` along a reduced word; `∂_{i_l}` acts first.
pub fn divided_difference_word(w: &Permutation, f: &SparsePoly) -> SparsePoly {
    divided_difference_along(&w.reduced_word(), f)
}

/// Apply `∂_{i_1} ⋯ ∂_{i_l}` for an arbitrary word.
pub fn divided_difference_along(word: &[usize], f: &SparsePoly) -> SparsePoly {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = divided_difference(i, &g);
    }
    g
}

/// `x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}`.
pub fn staircase(n: usize) -> SparsePoly {
    let exps: Vec<u8> = (0..n).map(|i| (n - 1 - i) as u8).collect();
    SparsePoly::monomial(&exps, BigInt::one())
}

/// Schubert polynomial by definition, `S_w = ∂_{w^{-1} w0} (x_1^{n-1} ⋯ x_{n-1})`.
pub fn schubert_polynomial(w: &Permutation, n: usize) -> Result<SparsePoly, PolyError> {
    if w.n() > n {
        return Err(PolyError::NotInGroup { w: w.clone(), n });
    }
    let u = &w.inverse() * &Permutation::longest(n);
    Ok(divided_difference_word(&u, &staircase(n)))
}

/// Memoized Schubert polynomials through the transition recursion
/// `S_w = x_r S_v + Σ_q S_{v t_{qr}}`.
#[derive(Default)]
pub struct SchubertCache {
    memo: HashMap<Permutation, SparsePoly>,
}

impl SchubertCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, w: &Permutation) -> SparsePoly {
        if let Some(p) = self.memo.get(w) {
            return p.clone();
        }
        let p = self.compute(w);
        self.memo.insert(w.clone(), p.clone());
        p
    }

    fn compute(&mut self, w: &Permutation) -> SparsePoly {
        let Some(&r) = w.descents().last() else {
            return SparsePoly::one();
        };
        let n = w.n();
        let wr = w.apply(r);
        let s = (r + 1..=n).filter(|&j| w.apply(j) < wr).max().expect("descent at r");
        let v = w * &Permutation::transposition(r, s);
        let target = w.length();
        let mut out = &SparsePoly::var(r) * &self.get(&v);
        for q in 1..r {
            let u = &v * &Permutation::transposition(q, r);
            if u.length() == target {
                out += self.get(&u);
            }
        }
        out
    }
}

/// Schubert polynomial through the transition recursion.
pub fn schubert(w: &Permutation) -> SparsePoly {
    SchubertCache::new().get(w)
}

/// Schur polynomial `s_gamma(x_1, …, x_p)` as the sum over SSYT.
pub fn schur_polynomial(gamma: &Partition, p: usize) -> Result<SparsePoly, PolyError> {
    if gamma.height() > p {
        return Err(PolyError::TooManyRows { shape: gamma.clone(), vars: p });
    }
    let mut out = SparsePoly::zero();
    for t in enumerate_ssyt(gamma, p) {
        let exps: Monomial = t.content(p).into_iter().map(|c| c as u8).collect();
        out.add_term(exps, BigInt::one());
    }
    Ok(out)
}

/// Coefficients `c_w = ∂_w f` over `ℓ(w) = d` in `S_n`, `n = nvars + d`.
/// Zero coefficients are omitted.
pub fn schubert_expand(f: &SparsePoly, d: usize) -> Result<BTreeMap<Permutation, BigInt>, PolyError> {
    if !f.is_homogeneous() || f.degree().is_some_and(|e| e != d) {
        return Err(PolyError::NotHomogeneous);
    }
    let n = f.nvars() + d;
    let mut level: BTreeMap<Permutation, SparsePoly> = BTreeMap::new();
    if !f.is_zero() {
        level.insert(Permutation::identity(), f.clone());
    }
    for _ in 0..d {
        let mut next: BTreeMap<Permutation, SparsePoly> = BTreeMap::new();
        for (u, g) in &level {
            let uinv = u.inverse();
            for i in 1..n {
                if uinv.apply(i) < uinv.apply(i + 1) {
                    let child = u.swap_values(i);
                    if next.contains_key(&child) {
                        continue;
                    }
                    let h = divided_difference(i, g);
                    if !h.is_zero() {
                        next.insert(child, h);
                    }
                }
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .filter_map(|(w, g)| {
            let c = g.as_constant().expect("degree exhausted");
            (!c.is_zero()).then_some((w, c))
        })
        .collect())
}

/// `(Σ α_i x_i) S_v = Σ (α_i - α_j) S_{v t_ij}` over `i < j` with
/// `ℓ(v t_ij) = ℓ(v) + 1`.
pub fn monk_multiply(alpha: &[i64], v: &Permutation) -> BTreeMap<Permutation, BigInt> {
    let n = alpha.len().max(v.n()) + 1;
    let a = |i: usize| alpha.get(i - 1).copied().unwrap_or(0);
    let target = v.length() + 1;
    let mut out = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let c = a(i) - a(j);
            if c == 0 {
                continue;
            }
            let u = v * &Permutation::transposition(i, j);
            if u.length() == target {
                *out.entry(u).or_insert_with(BigInt::zero) += BigInt::from(c);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// One row of a printed Schubert table: `w` in zero-based one-line
/// notation and the printed polynomial in `x, y, z, w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertTableRow {
    pub w: String,
    pub printed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertTable {
    pub system: String,
    pub rows: Vec<SchubertTableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertRowReport {
    pub w: String,
    pub printed: String,
    pub computed: String,
    pub literal_match: bool,
    /// Positions `i` with `w(i) < w(i+1)` where `∂_i` of the printed
    /// polynomial is nonzero, or whose degree differs from `ℓ(w)`. Either
    /// one rules the printed value out as `S_w`.
    pub refutations: Vec<String>,
}

pub fn builtin_schubert_table() -> SchubertTable {
    serde_json::from_str(include_str!("../fixtures/schubert_s4.json")).expect("bundled table parses")
}

/// Recompute every row and, for mismatches, look for a structural reason
/// the printed polynomial cannot be the Schubert polynomial.
pub fn verify_schubert_table(table: &SchubertTable) -> Result<Vec<SchubertRowReport>, PolyError> {
    let mut cache = SchubertCache::new();
    table
        .rows
        .iter()
        .map(|row| {
            let w = Permutation::parse_one_line(&row.w).map_err(|e| PolyError::Parse(e.to_string()))?;
            let printed = SparsePoly::parse(&row.printed)?;
            let computed = cache.get(&w);
            let literal_match = computed == printed;
            let mut refutations = Vec::new();
            if !literal_match {
                if !printed.is_homogeneous() || printed.degree().unwrap_or(0) != w.length() {
                    refutations.push(format!("degree is not ℓ(w) = {}", w.length()));
                }
                for i in 1..w.n().max(2) {
                    if w.apply(i) < w.apply(i + 1) && !divided_difference(i, &printed).is_zero() {
                        refutations.push(format!("w({i}) < w({}) but ∂{i} of the printed value is nonzero", i + 1));
                    }
                }
            }
            Ok(SchubertRowReport { w: row.w.clone(), printed: row.printed.clone(), computed: computed.format_xyz(), literal_match, refutations })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::permutations_of_length;

    fn poly(s: &str) -> SparsePoly {
        SparsePoly::parse(s).unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(divided_difference(1, &poly("x")), SparsePoly::one());
        assert!(divided_difference(1, &poly("xy")).is_zero());
        assert_eq!(divided_difference(1, &poly("x^2y")), poly("xy"));
        assert_eq!(divided_difference(1, &poly("y")), poly("-1"));
    }

    #[test]
    fn divided_difference_matches_quotient() {
        // f - s_i f == (x_i - x_{i+1}) ∂_i f
        let f = poly("3x^4y - 2x y^3 z + 5z^2 + x^2 y^2");
        for i in 1..=3 {
            let lhs = &f - &f.swap_vars(i);
            let rhs = &(&SparsePoly::var(i) - &SparsePoly::var(i + 1)) * &divided_difference(i, &f);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn word_examples() {
        let f = poly("x^2y");
        assert_eq!(divided_difference_word(&Permutation::identity(), &f), f);
        assert_eq!(divided_difference_word(&Permutation::longest(3), &f), SparsePoly::one());
        let sym = poly("xyz");
        assert!(divided_difference_along(&[1, 2], &sym).is_zero());
    }

    #[test]
    fn transition_agrees_with_definition() {
        for len in 0..=10 {
            for w in permutations_of_length(5, len) {
                assert_eq!(schubert(&w), schubert_polynomial(&w, 5).unwrap(), "w = {w}");
            }
        }
    }

    #[test]
    fn schur_and_grassmann_schubert() {
        let g = Partition::new(vec![2, 1]).unwrap();
        let s = schur_polynomial(&g, 3).unwrap();
        assert_eq!(s.term_count(), 7);
        assert_eq!(s.evaluate(&[1, 1, 1]), BigInt::from(8));
        let e2 = schur_polynomial(&Partition::column(2), 3).unwrap();
        assert_eq!(e2, poly("xy + xz + yz"));
    }

    #[test]
    fn expand_examples() {
        assert!(SparsePoly::parse("(x)").is_err());
        let f = poly("x^2 + 2xy + y^2");
        let e = schubert_expand(&f, 2).unwrap();
        let mut back = SparsePoly::zero();
        for (w, c) in &e {
            back += schubert(w).scale(c);
        }
        assert_eq!(back, f);
        assert!(schubert_expand(&poly("x + 1"), 1).is_err());
    }

    #[test]
    fn expand_staircase_product() {
        // ∏_{i<j≤3} (x_i + x_j) is the Schur polynomial of the staircase [2,1]
        let f = &(&poly("x+y") * &poly("x+z")) * &poly("y+z");
        let e = schubert_expand(&f, 3).unwrap();
        let v = crate::permutations::grassmann_shuffle(&[1, 3, 5], &[2, 4]).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&v), Some(&BigInt::one()));
    }

    #[test]
    fn monk_examples() {
        assert!(monk_multiply(&[0, 0], &Permutation::identity()).is_empty());
        let m = monk_multiply(&[1], &Permutation::identity());
        assert_eq!(m.len(), 1);
        assert_eq!(m.get(&Permutation::simple(1)), Some(&BigInt::one()));
    }
}

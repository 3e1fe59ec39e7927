//! Pure states in `∧^N H_r` and in `H^ν_r`, their one-particle reduced
//! density matrices and occupation numbers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::Tableau;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StateError {
    #[error("state has no nonzero amplitude")]
    Zero,
    #[error("subset {subset:?} is not an increasing {n}-subset of 1..{r}")]
    BadSubset { subset: Vec<usize>, n: usize, r: usize },
    #[error("support tableaux have different shapes")]
    MixedShapes,
    #[error("support is connected: {0} and {1} differ by a root")]
    Connected(String, String),
    #[error("tableau entry exceeds r = {0}")]
    EntryTooLarge(usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("ratio has length {got}, expected {expected}")]
    RatioLength { got: usize, expected: usize },
}

/// `sign · √radicand` with a nonnegative rational radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootCoefficient {
    pub sign: i8,
    pub radicand: BigRational,
}

impl RootCoefficient {
    pub fn new(sign: i8, radicand: BigRational) -> Self {
        assert!(!radicand.is_negative(), "radicand must be nonnegative");
        RootCoefficient { sign: if sign < 0 { -1 } else { 1 }, radicand }
    }

    pub fn integer(k: i64) -> Self {
        RootCoefficient::new(k.signum() as i8, BigRational::from(BigInt::from(k * k)))
    }

    pub fn sqrt(n: i64) -> Self {
        RootCoefficient::new(1, BigRational::from(BigInt::from(n)))
    }

    /// `|c|²`.
    pub fn square(&self) -> BigRational {
        self.radicand.clone()
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.radicand.is_zero()
    }

    /// The product as an exact surd `q·√s` with squarefree `s`.
    pub fn product(&self, other: &RootCoefficient) -> Surd {
        let (q, s) = sqrt_rational(&(&self.radicand * &other.radicand));
        let sign = i64::from(self.sign) * i64::from(other.sign);
        let mut out = Surd::default();
        out.add(s, q * BigRational::from(BigInt::from(sign)));
        out
    }
}

impl fmt::Display for RootCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (q, s) = sqrt_rational(&self.radicand);
        let q = q * BigRational::from(BigInt::from(self.sign));
        if s.is_one() {
            write!(f, "{q}")
        } else if q.is_one() {
            write!(f, "√{s}")
        } else if (-q.clone()).is_one() {
            write!(f, "-√{s}")
        } else {
            write!(f, "{q}√{s}")
        }
    }
}

/// `√x = q·√s` for rational `x ≥ 0`, `s` a squarefree integer.
pub fn sqrt_rational(x: &BigRational) -> (BigRational, BigInt) {
    if x.is_zero() {
        return (BigRational::zero(), BigInt::one());
    }
    // √(p/d) = √(p·d) / d
    let pd = x.numer() * x.denom();
    let (outside, inside) = split_square(&pd);
    (BigRational::new(outside, x.denom().clone()), inside)
}

fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut n = n.clone();
    let mut outside = BigInt::one();
    let mut inside = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        outside *= p.pow(e / 2);
        if e % 2 == 1 {
            inside *= &p;
        }
        p += 1;
    }
    inside *= n;
    (outside, inside)
}

/// A finite sum `Σ q_s √s` over squarefree `s`; zero iff every `q_s` is.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Surd {
    terms: BTreeMap<BigInt, BigRational>,
}

impl Surd {
    pub fn add(&mut self, s: BigInt, q: BigRational) {
        let e = self.terms.entry(s.clone()).or_insert_with(BigRational::zero);
        *e += q;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add_surd(&mut self, other: &Surd) {
        for (s, q) in &other.terms {
            self.add(s.clone(), q.clone());
        }
    }

    pub fn negate(&self) -> Surd {
        Surd { terms: self.terms.iter().map(|(s, q)| (s.clone(), -q)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(s, q)| q.to_f64().unwrap_or(f64::NAN) * s.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Amplitude {
    Root(RootCoefficient),
    Complex(Complex64),
}

impl Amplitude {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Amplitude::Root(c) => Complex64::new(c.to_f64(), 0.0),
            Amplitude::Complex(z) => *z,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Amplitude::Root(c) => c.is_zero(),
            Amplitude::Complex(z) => z.norm_sqr() == 0.0,
        }
    }
}

/// `ψ = Σ c_S e_S` over increasing `N`-subsets `S` of `1..r`.
#[derive(Clone, Debug, PartialEq)]
pub struct WedgeState {
    n: usize,
    r: usize,
    amplitudes: BTreeMap<Vec<usize>, Amplitude>,
}

impl WedgeState {
    pub fn new(n: usize, r: usize) -> Self {
        WedgeState { n, r, amplitudes: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn amplitudes(&self) -> &BTreeMap<Vec<usize>, Amplitude> {
        &self.amplitudes
    }

    fn check(&self, subset: &[usize]) -> Result<(), StateError> {
        let ok = subset.len() == self.n
            && subset.windows(2).all(|w| w[0] < w[1])
            && subset.first().is_some_and(|&x| x >= 1)
            && subset.last().is_some_and(|&x| x <= self.r);
        if ok {
            Ok(())
        } else {
            Err(StateError::BadSubset { subset: subset.to_vec(), n: self.n, r: self.r })
        }
    }

    pub fn set(&mut self, subset: Vec<usize>, amp: Amplitude) -> Result<(), StateError> {
        self.check(&subset)?;
        if amp.is_zero() {
            self.amplitudes.remove(&subset);
        } else {
            self.amplitudes.insert(subset, amp);
        }
        Ok(())
    }

    pub fn with_root(mut self, subset: &[usize], c: RootCoefficient) -> Result<Self, StateError> {
        self.set(subset.to_vec(), Amplitude::Root(c))?;
        Ok(self)
    }

    pub fn slater(r: usize, subset: &[usize]) -> Result<Self, StateError> {
        WedgeState::new(subset.len(), r).with_root(subset, RootCoefficient::integer(1))
    }

    fn exact_amplitudes(&self) -> Option<Vec<(&Vec<usize>, &RootCoefficient)>> {
        self.amplitudes
            .iter()
            .map(|(s, a)| match a {
                Amplitude::Root(c) => Some((s, c)),
                Amplitude::Complex(_) => None,
            })
            .collect()
    }

    /// Parse `2[123]+√10[145]-[356]`, `sqrt(2)[1,2,3]` or `3√2[146]`.
    pub fn parse(expr: &str, r: usize) -> Result<Self, StateError> {
        let err = || StateError::Parse(expr.to_string());
        let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms: Vec<(RootCoefficient, Vec<usize>)> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let open = rest.find('[').ok_or_else(err)?;
            let close = rest.find(']').ok_or_else(err)?;
            if close < open {
                return Err(err());
            }
            let coeff = parse_root_coefficient(&rest[..open]).ok_or_else(err)?;
            let inner = &rest[open + 1..close];
            let subset: Vec<usize> = if inner.contains(',') {
                inner.split(',').map(|t| t.parse().map_err(|_| err())).collect::<Result<_, _>>()?
            } else {
                inner.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err)).collect::<Result<_, _>>()?
            };
            terms.push((coeff, subset));
            rest = &rest[close + 1..];
        }
        let n = terms.first().map(|t| t.1.len()).ok_or_else(err)?;
        let mut psi = WedgeState::new(n, r);
        for (c, subset) in terms {
            psi.set(subset, Amplitude::Root(c))?;
        }
        if psi.amplitudes.is_empty() {
            return Err(StateError::Zero);
        }
        Ok(psi)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.to_complex().norm_sqr()).sum()
    }
}

fn parse_root_coefficient(s: &str) -> Option<RootCoefficient> {
    let (sign, body) = match s.strip_prefix('-') {
        Some(b) => (-1i8, b),
        None => (1i8, s.strip_prefix('+').unwrap_or(s)),
    };
    let body = body.trim_end_matches('*');
    if body.is_empty() {
        return Some(RootCoefficient::new(sign, BigRational::one()));
    }
    let (outside, inside) = if let Some(idx) = body.find('√') {
        let rad = &body[idx + '√'.len_utf8()..];
        (&body[..idx], rad.trim_start_matches('(').trim_end_matches(')'))
    } else if let Some(idx) = body.find("sqrt(") {
        (&body[..idx], body[idx + 5..].strip_suffix(')')?)
    } else {
        (body, "1")
    };
    let outside: BigRational = if outside.is_empty() { BigRational::one() } else { parse_rational(outside.trim_end_matches('*'))? };
    let inside = parse_rational(inside)?;
    if inside.is_negative() {
        return None;
    }
    let sign = if outside.is_negative() { -sign } else { sign };
    Some(RootCoefficient::new(sign, &outside * &outside * inside))
}

/// Parse `p`, `p/q` or a decimal-free rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.parse().ok()?, q))
        }
        None => Some(BigRational::from(s.parse::<BigInt>().ok()?)),
    }
}

/// The one-particle density matrix normalized to trace `N`.
#[derive(Clone, Debug)]
pub struct OneParticleRdm {
    pub r: usize,
    pub n: usize,
    /// Hermitian matrix entries.
    pub matrix: Vec<Vec<Complex64>>,
    /// Exact diagonal when every amplitude is a signed root.
    pub exact_diagonal: Option<Vec<BigRational>>,
    /// Exact verdict on off-diagonal vanishing; `None` on the floating path.
    pub exactly_diagonal: Option<bool>,
}

fn mask(subset: &[usize]) -> u64 {
    subset.iter().fold(0u64, |m, &i| m | (1 << (i - 1)))
}

fn between(m: u64, i: usize, j: usize) -> u32 {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    // bits strictly between lo and hi (1-based orbitals)
    let width = hi - lo - 1;
    if width == 0 {
        return 0;
    }
    ((m >> lo) & ((1u64 << width) - 1)).count_ones()
}

/// `ρ_ij = Σ_R (-1)^{#R between i,j} c_{R∪i} conj(c_{R∪j}) / ‖ψ‖²`, trace `N`.
pub fn one_particle_rdm(psi: &WedgeState) -> Result<OneParticleRdm, StateError> {
    if psi.amplitudes.is_empty() {
        return Err(StateError::Zero);
    }
    let r = psi.r;
    let lookup: HashMap<u64, Complex64> = psi.amplitudes.iter().map(|(s, a)| (mask(s), a.to_complex())).collect();
    let norm = psi.norm_sqr();
    let mut matrix = vec![vec![Complex64::zero(); r]; r];
    let exact = psi.exact_amplitudes();
    let mut exactly_diagonal = None;
    for (&m, &c) in &lookup {
        for i in 1..=r {
            if m & (1 << (i - 1)) == 0 {
                continue;
            }
            matrix[i - 1][i - 1] += c.norm_sqr() / norm;
            let rest = m & !(1 << (i - 1));
            for j in 1..=r {
                if rest & (1 << (j - 1)) != 0 || j == i {
                    continue;
                }
                let m2 = rest | (1 << (j - 1));
                if let Some(&c2) = lookup.get(&m2) {
                    let sign = if between(rest, i, j).is_multiple_of(2) { 1.0 } else { -1.0 };
                    matrix[i - 1][j - 1] += sign * c * c2.conj() / norm;
                }
            }
        }
    }
    let mut exact_diagonal = None;
    if let Some(ex) = &exact {
        let total: BigRational = ex.iter().map(|(_, c)| c.square()).sum();
        let mut diag = vec![BigRational::zero(); r];
        let by_mask: HashMap<u64, &RootCoefficient> = ex.iter().map(|(s, c)| (mask(s), *c)).collect();
        let mut off: BTreeMap<(usize, usize), Surd> = BTreeMap::new();
        for (&m, c) in &by_mask {
            for i in 1..=r {
                if m & (1 << (i - 1)) == 0 {
                    continue;
                }
                diag[i - 1] += c.square();
                let rest = m & !(1 << (i - 1));
                for j in i + 1..=r {
                    if rest & (1 << (j - 1)) != 0 {
                        continue;
                    }
                    if let Some(c2) = by_mask.get(&(rest | (1 << (j - 1)))) {
                        let mut p = c.product(c2);
                        if between(rest, i, j) % 2 == 1 {
                            p = p.negate();
                        }
                        off.entry((i, j)).or_default().add_surd(&p);
                    }
                }
            }
        }
        for d in diag.iter_mut() {
            *d /= &total;
        }
        exact_diagonal = Some(diag);
        exactly_diagonal = Some(off.values().all(Surd::is_zero));
    }
    Ok(OneParticleRdm { r, n: psi.n, matrix, exact_diagonal, exactly_diagonal })
}

/// Occupation numbers, sorted non-increasingly.
#[derive(Clone, Debug, PartialEq)]
pub struct Occupations {
    pub values: Vec<f64>,
    /// Present when the density matrix is exactly diagonal.
    pub exact: Option<Vec<BigRational>>,
}

pub fn occupation_numbers(psi: &WedgeState) -> Result<Occupations, StateError> {
    let rdm = one_particle_rdm(psi)?;
    if rdm.exactly_diagonal == Some(true) {
        let mut ex = rdm.exact_diagonal.expect("exact path");
        ex.sort_by(|a, b| b.cmp(a));
        let values = ex.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect();
        return Ok(Occupations { values, exact: Some(ex) });
    }
    let mut values = hermitian_eigenvalues(&rdm.matrix);
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    Ok(Occupations { values, exact: None })
}

/// Eigenvalues of a Hermitian matrix through its real `2n × 2n` embedding
/// `[[A, -B], [B, A]]`, whose spectrum repeats each eigenvalue twice.
pub fn hermitian_eigenvalues(h: &[Vec<Complex64>]) -> Vec<f64> {
    let n = h.len();
    let real = h.iter().all(|row| row.iter().all(|z| z.im == 0.0));
    if real {
        let a: Vec<Vec<f64>> = h.iter().map(|row| row.iter().map(|z| z.re).collect()).collect();
        return jacobi_eigenvalues(a);
    }
    let mut m = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = h[i][j].re;
            m[i + n][j + n] = h[i][j].re;
            m[i][j + n] = -h[i][j].im;
            m[i + n][j] = h[i][j].im;
        }
    }
    let mut ev = jacobi_eigenvalues(m);
    ev.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    ev.into_iter().step_by(2).collect()
}

/// Cyclic Jacobi rotations until the off-diagonal norm drops below 1e-14.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

/// Does the occupation spectrum equal `ratio` after scaling to trace `N`?
/// Exact on the diagonal path, within `tol` otherwise.
pub fn verify_vertex(psi: &WedgeState, ratio: &[i64], tol: f64) -> Result<bool, StateError> {
    if ratio.len() != psi.r {
        return Err(StateError::RatioLength { got: ratio.len(), expected: psi.r });
    }
    let occ = occupation_numbers(psi)?;
    let mut sorted = ratio.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let total: i64 = sorted.iter().sum();
    if total == 0 {
        return Ok(false);
    }
    let n = psi.n as i64;
    if let Some(ex) = &occ.exact {
        return Ok(ex
            .iter()
            .zip(&sorted)
            .all(|(x, &k)| *x == BigRational::new(BigInt::from(k * n), BigInt::from(total))));
    }
    Ok(occ
        .values
        .iter()
        .zip(&sorted)
        .all(|(x, &k)| (x - (k * n) as f64 / total as f64).abs() <= tol))
}

/// Two tableaux are joined when their contents differ by moving one entry.
pub fn adjacent(t1: &Tableau, t2: &Tableau, r: usize) -> bool {
    let c1 = t1.content(r);
    let c2 = t2.content(r);
    let l1: usize = c1.iter().zip(&c2).map(|(a, b)| a.abs_diff(*b)).sum();
    l1 == 2
}

/// True iff no two support tableaux differ by a root.
pub fn weight_graph_disconnected(support: &[Tableau]) -> Result<bool, StateError> {
    if let Some(first) = support.first() {
        if support.iter().any(|t| t.shape() != first.shape()) {
            return Err(StateError::MixedShapes);
        }
    }
    let r = support.iter().map(Tableau::max_entry).max().unwrap_or(0);
    for (k, t1) in support.iter().enumerate() {
        for t2 in &support[k + 1..] {
            if adjacent(t1, t2, r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ψ = Σ c_T e_T` over semistandard tableaux of a common shape.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralSupportState {
    pub r: usize,
    pub amplitudes: BTreeMap<Tableau, RootCoefficient>,
}

impl GeneralSupportState {
    pub fn new(r: usize) -> Self {
        GeneralSupportState { r, amplitudes: BTreeMap::new() }
    }

    pub fn with(mut self, t: Tableau, c: RootCoefficient) -> Result<Self, StateError> {
        if t.max_entry() > self.r {
            return Err(StateError::EntryTooLarge(self.r));
        }
        self.amplitudes.insert(t, c);
        Ok(self)
    }
}

/// `λ_i = Σ_T (#i in T) |c_T|² / ‖ψ‖²`, valid on disconnected supports.
pub fn dadok_kac_spectrum(state: &GeneralSupportState) -> Result<Vec<BigRational>, StateError> {
    let support: Vec<Tableau> = state.amplitudes.keys().cloned().collect();
    if support.is_empty() {
        return Err(StateError::Zero);
    }
    if !weight_graph_disconnected(&support)? {
        let r = state.r;
        for (k, t1) in support.iter().enumerate() {
            for t2 in &support[k + 1..] {
                if adjacent(t1, t2, r) {
                    return Err(StateError::Connected(t1.to_string(), t2.to_string()));
                }
            }
        }
    }
    let total: BigRational = state.amplitudes.values().map(RootCoefficient::square).sum();
    if total.is_zero() {
        return Err(StateError::Zero);
    }
    let mut lambda = vec![BigRational::zero(); state.r];
    for (t, c) in &state.amplitudes {
        for i in t.entries() {
            lambda[i - 1] += c.square();
        }
    }
    Ok(lambda.into_iter().map(|x| x / &total).collect())
}

/// One term of a state file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub subset: Vec<usize>,
    pub sign: i8,
    /// Rational radicand as `"p/q"` or `"p"`.
    pub radicand: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateSpec {
    #[serde(rename = "N")]
    pub n: usize,
    pub r: usize,
    pub terms: Vec<TermSpec>,
}

impl StateSpec {
    pub fn to_state(&self) -> Result<WedgeState, StateError> {
        let mut psi = WedgeState::new(self.n, self.r);
        for t in &self.terms {
            let rad = parse_rational(&t.radicand).ok_or_else(|| StateError::Parse(t.radicand.clone()))?;
            if rad.is_negative() {
                return Err(StateError::Parse(t.radicand.clone()));
            }
            psi.set(t.subset.clone(), Amplitude::Root(RootCoefficient::new(t.sign, rad)))?;
        }
        if psi.amplitudes.is_empty() {
            return Err(StateError::Zero);
        }
        Ok(psi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateRow {
    pub state: String,
    #[serde(flatten)]
    pub spec: StateSpec,
    pub ratio: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateTable {
    pub system: String,
    pub rows: Vec<StateRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexReport {
    pub state: String,
    pub ratio: Vec<i64>,
    pub occupations: Vec<f64>,
    /// Exact values as `"p/q"` when the density matrix is diagonal.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<Vec<String>>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

pub fn verify_state_table(table: &StateTable, tol: f64) -> Vec<VertexReport> {
    table
        .rows
        .par_iter()
        .map(|row| {
            let run = || -> Result<(Occupations, bool), StateError> {
                let psi = row.spec.to_state()?;
                let ok = verify_vertex(&psi, &row.ratio, tol)?;
                Ok((occupation_numbers(&psi)?, ok))
            };
            match run() {
                Ok((occ, ok)) => VertexReport {
                    state: row.state.clone(),
                    ratio: row.ratio.clone(),
                    occupations: occ.values,
                    exact: occ.exact.map(|v| v.iter().map(|q| q.to_string()).collect()),
                    ok,
                    error: None,
                },
                Err(e) => VertexReport {
                    state: row.state.clone(),
                    ratio: row.ratio.clone(),
                    occupations: Vec::new(),
                    exact: None,
                    ok: false,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect()
}

/// The three bundled extremal-state tables.
pub fn builtin_state_tables() -> Vec<StateTable> {
    [
        include_str!("../fixtures/states_wedge4_8.json"),
        include_str!("../fixtures/states_wedge3_8.json"),
        include_str!("../fixtures/states_wedge3_7.json"),
    ]
    .iter()
    .map(|s| serde_json::from_str(s).expect("bundled state table parses"))
    .collect()
}

impl FromStr for RootCoefficient {
    type Err = StateError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_root_coefficient(s.trim()).ok_or_else(|| StateError::Parse(s.to_string()))
    }
}

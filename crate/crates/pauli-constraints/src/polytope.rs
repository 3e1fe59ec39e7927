//! Exact rational polytopes by double description, and the inner/outer
//! approximation loop for moment polytopes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coefficients::{inequality_to_triple, linear_form_string, CoefficientError, Triple};
use crate::combinatorics::Partition;
use crate::plethysm::{self, PlethysmError, PlethysmTower};

type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolytopeError {
    #[error("no points")]
    Empty,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error(transparent)]
    Plethysm(#[from] PlethysmError),
}

/// `normal · x ≤ offset`, or `=` when `is_equation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub normal: Vec<Q>,
    pub offset: Q,
    pub is_equation: bool,
}

impl Constraint {
    pub fn le(normal: Vec<Q>, offset: Q) -> Self {
        Constraint { normal, offset, is_equation: false }
    }

    pub fn eq(normal: Vec<Q>, offset: Q) -> Self {
        Constraint { normal, offset, is_equation: true }
    }

    pub fn from_ints(normal: &[i64], offset: i64, is_equation: bool) -> Self {
        Constraint { normal: normal.iter().map(|&c| q(c)).collect(), offset: q(offset), is_equation }
    }

    /// `offset - normal · x`.
    pub fn slack(&self, x: &[Q]) -> Q {
        &self.offset - dot_q(&self.normal, x)
    }

    pub fn holds(&self, x: &[Q]) -> bool {
        let s = self.slack(x);
        if self.is_equation {
            s.is_zero()
        } else {
            !s.is_negative()
        }
    }

    /// Integer primitive form (positive scaling only).
    pub fn primitive(&self) -> (Vec<BigInt>, BigInt) {
        let mut all: Vec<Q> = self.normal.clone();
        all.push(self.offset.clone());
        let ints = primitive_ints(&all);
        let (n, b) = ints.split_at(ints.len() - 1);
        (n.to_vec(), b[0].clone())
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let (n, b) = self.primitive();
        let mut s = String::new();
        for (c, name) in n.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if c.abs() != BigInt::one() {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(name);
        }
        if s.is_empty() {
            s.push('0');
        }
        format!("{s} {} {b}", if self.is_equation { "=" } else { "≤" })
    }
}

fn q(x: i64) -> Q {
    Q::from(BigInt::from(x))
}

fn dot_q(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scale a rational vector by a positive factor to coprime integers.
pub fn primitive_ints(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

fn normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = x.iter().zip(y).map(|(xi, yi)| a * xi - b * yi).collect();
    normalize(&mut v);
    v
}

#[derive(Clone)]
struct Ray {
    v: Vec<BigInt>,
    zeros: Vec<u64>,
}

fn set_bit(z: &mut [u64], k: usize) {
    z[k / 64] |= 1 << (k % 64);
}

fn contains_all(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(a, b)| a & b == *b)
}

/// Lineality basis and extreme rays of `{y : E y = 0, A y ≥ 0}`.
fn double_description(d: usize, eqs: &[Vec<BigInt>], ineqs: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut lin: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    for e in eqs {
        if let Some(pos) = lin.iter().position(|l| !dot(e, l).is_zero()) {
            let l0 = lin.swap_remove(pos);
            let a0 = dot(e, &l0);
            for l in lin.iter_mut() {
                let al = dot(e, l);
                if !al.is_zero() {
                    *l = combine(&a0, l, &al, &l0);
                }
            }
        }
    }
    let words = ineqs.len().div_ceil(64).max(1);
    let mut rays: Vec<Ray> = Vec::new();
    for (k, a) in ineqs.iter().enumerate() {
        if let Some(pos) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lin.swap_remove(pos);
            let mut a0 = dot(a, &l0);
            if a0.is_negative() {
                for x in l0.iter_mut() {
                    *x = -&*x;
                }
                a0 = -a0;
            }
            for l in lin.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = combine(&a0, l, &al, &l0);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&a0, &r.v, &ar, &l0);
                }
                set_bit(&mut r.zeros, k);
            }
            let mut zeros = vec![0u64; words];
            for j in 0..k {
                set_bit(&mut zeros, j);
            }
            rays.push(Ray { v: l0, zeros });
            continue;
        }
        let s: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if s.iter().all(|x| !x.is_negative()) {
            for (r, si) in rays.iter_mut().zip(&s) {
                if si.is_zero() {
                    set_bit(&mut r.zeros, k);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| s[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| s[i].is_negative()).collect();
        let mut fresh = Vec::new();
        let mut common = vec![0u64; words];
        for &p in &pos {
            for &n in &neg {
                for (c, (x, y)) in common.iter_mut().zip(rays[p].zeros.iter().zip(&rays[n].zeros)) {
                    *c = x & y;
                }
                let adjacent = (0..rays.len()).all(|t| t == p || t == n || !contains_all(&rays[t].zeros, &common));
                if adjacent {
                    let v = combine(&s[p], &rays[n].v, &s[n], &rays[p].v);
                    let mut zeros = common.clone();
                    set_bit(&mut zeros, k);
                    fresh.push(Ray { v, zeros });
                }
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, si) in rays.into_iter().zip(&s) {
            if si.is_negative() {
                continue;
            }
            if si.is_zero() {
                set_bit(&mut r.zeros, k);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    (lin, rays.into_iter().map(|r| r.v).collect())
}

/// H- and V-representation of a bounded polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    pub dim: usize,
    pub equations: Vec<Constraint>,
    pub facets: Vec<Constraint>,
    pub vertices: Vec<Vec<Q>>,
}

fn integer_row(v: &[Q]) -> Vec<BigInt> {
    primitive_ints(v)
}

/// Convex hull with an irredundant H-representation.
pub fn hull(points: &[Vec<Q>]) -> Result<RationalPolytope, PolytopeError> {
    let first = points.first().ok_or(PolytopeError::Empty)?;
    let d = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(PolytopeError::Dimension { expected: d, got: p.len() });
    }
    let unique: BTreeSet<Vec<Q>> = points.iter().cloned().collect();
    let mut pts: Vec<Vec<Q>> = unique.into_iter().collect();
    // outermost first keeps intermediate hulls small
    let n = Q::from(BigInt::from(pts.len()));
    let centroid: Vec<Q> = (0..d).map(|i| pts.iter().map(|p| p[i].clone()).sum::<Q>() / &n).collect();
    let dist = |p: &Vec<Q>| -> Q { p.iter().zip(&centroid).map(|(x, c)| (x - c) * (x - c)).sum() };
    pts.sort_by_cached_key(|p| (std::cmp::Reverse(dist(p)), p.clone()));
    let rows: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| {
            let mut h = vec![Q::one()];
            h.extend(p.iter().cloned());
            integer_row(&h)
        })
        .collect();
    let (lin, rays) = double_description(d + 1, &[], &rows);
    let to_q = |v: &[BigInt]| -> Vec<Q> { v.iter().map(|x| Q::from(x.clone())).collect() };
    // a_0 + a·x ≥ 0  ⇔  -a·x ≤ a_0
    let mut equations: Vec<Constraint> =
        lin.iter().map(|l| Constraint::eq(to_q(&l[1..]).into_iter().map(|x| -x).collect(), Q::from(l[0].clone()))).collect();
    equations = rref_equations(&equations);
    let mut facets: Vec<Constraint> =
        rays.iter().map(|r| Constraint::le(to_q(&r[1..]).into_iter().map(|x| -x).collect(), Q::from(r[0].clone()))).collect();
    for f in facets.iter_mut() {
        *f = canonical(f, &equations);
    }
    // a positive constant is a ray of the polar cone only for a single point
    facets.retain(|f| f.normal.iter().any(|x| !x.is_zero()));
    facets.sort();
    facets.dedup();
    let eq_normals: Vec<Vec<Q>> = equations.iter().map(|e| e.normal.clone()).collect();
    let vertices: Vec<Vec<Q>> = pts
        .into_iter()
        .filter(|p| {
            let mut rows = eq_normals.clone();
            rows.extend(facets.iter().filter(|f| f.slack(p).is_zero()).map(|f| f.normal.clone()));
            rank(&rows) == d
        })
        .collect();
    let mut vertices = vertices;
    vertices.sort();
    Ok(RationalPolytope { dim: d, equations, facets, vertices })
}

/// Vertices of a bounded H-polyhedron; empty when infeasible.
pub fn vertices(dim: usize, equations: &[Constraint], inequalities: &[Constraint]) -> Result<Vec<Vec<Q>>, PolytopeError> {
    for c in equations.iter().chain(inequalities) {
        if c.normal.len() != dim {
            return Err(PolytopeError::Dimension { expected: dim, got: c.normal.len() });
        }
    }
    // y = (t, x):  b t - n·x ≥ 0,  t ≥ 0
    let hom = |c: &Constraint| -> Vec<BigInt> {
        let mut h = vec![c.offset.clone()];
        h.extend(c.normal.iter().map(|x| -x));
        integer_row(&h)
    };
    let eqs: Vec<Vec<BigInt>> = equations.iter().map(hom).collect();
    let mut ineqs: Vec<Vec<BigInt>> = inequalities.iter().map(hom).collect();
    let mut t = vec![BigInt::zero(); dim + 1];
    t[0] = BigInt::one();
    ineqs.insert(0, t);
    let (lin, rays) = double_description(dim + 1, &eqs, &ineqs);
    if !lin.is_empty() {
        return Err(PolytopeError::Unbounded);
    }
    let mut out = Vec::new();
    for r in rays {
        if r[0].is_zero() {
            return Err(PolytopeError::Unbounded);
        }
        let t = Q::from(r[0].clone());
        out.push(r[1..].iter().map(|x| Q::from(x.clone()) / &t).collect::<Vec<Q>>());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Polytope from an H-representation, with redundancy removed.
pub fn from_h(dim: usize, equations: &[Constraint], inequalities: &[Constraint]) -> Result<RationalPolytope, PolytopeError> {
    let v = vertices(dim, equations, inequalities)?;
    if v.is_empty() {
        return Err(PolytopeError::Empty);
    }
    hull(&v)
}

impl RationalPolytope {
    pub fn contains(&self, x: &[Q]) -> bool {
        x.len() == self.dim && self.equations.iter().chain(&self.facets).all(|c| c.holds(x))
    }

    /// Mutual containment of vertex sets.
    pub fn equal(&self, other: &RationalPolytope) -> bool {
        self.dim == other.dim && self.vertices.iter().all(|v| other.contains(v)) && other.vertices.iter().all(|v| self.contains(v))
    }

    pub fn affine_dimension(&self) -> usize {
        affine_rank(&self.vertices)
    }

    /// Valid on all vertices and tight on a face of codimension one.
    pub fn is_facet(&self, c: &Constraint) -> bool {
        if !self.vertices.iter().all(|v| c.holds(v)) {
            return false;
        }
        let tight: Vec<Vec<Q>> = self.vertices.iter().filter(|v| c.slack(v).is_zero()).cloned().collect();
        !tight.is_empty() && affine_rank(&tight) + 1 == self.affine_dimension()
    }

    /// Every facet is supported by at least `dim` affinely independent
    /// vertices and every vertex satisfies every constraint.
    pub fn is_consistent(&self) -> bool {
        let d = self.affine_dimension();
        self.vertices.iter().all(|v| self.contains(v))
            && self.facets.iter().all(|f| {
                let tight: Vec<Vec<Q>> = self.vertices.iter().filter(|v| f.slack(v).is_zero()).cloned().collect();
                !tight.is_empty() && affine_rank(&tight) + 1 == d
            })
    }

    pub fn to_json(&self) -> PolytopeJson {
        let s = |v: &[Q]| v.iter().map(|x| x.to_string()).collect::<Vec<String>>();
        PolytopeJson {
            dim: self.dim,
            equations: self.equations.iter().map(|c| FacetJson { normal: s(&c.normal), offset: c.offset.to_string() }).collect(),
            facets: self.facets.iter().map(|c| FacetJson { normal: s(&c.normal), offset: c.offset.to_string() }).collect(),
            vertices: self.vertices.iter().map(|v| s(v)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: Vec<String>,
    pub offset: String,
}

/// Rationals as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub equations: Vec<FacetJson>,
    pub facets: Vec<FacetJson>,
    pub vertices: Vec<Vec<String>>,
}

fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for j in c..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn affine_rank(points: &[Vec<Q>]) -> usize {
    match points.split_first() {
        None => 0,
        Some((p0, rest)) => {
            let diffs: Vec<Vec<Q>> = rest.iter().map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect()).collect();
            rank(&diffs)
        }
    }
}

/// Reduced row echelon form of equations, pivoting from the last
/// coordinate, with integer primitive rows.
pub fn rref_equations(eqs: &[Constraint]) -> Vec<Constraint> {
    let mut m: Vec<(Vec<Q>, Q)> = eqs.iter().map(|e| (e.normal.clone(), e.offset.clone())).collect();
    let cols = m.first().map_or(0, |r| r.0.len());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in (0..cols).rev() {
        let Some(p) = (r..m.len()).find(|&i| !m[i].0[c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r].0[c].clone();
        let row = (m[r].0.iter().map(|x| x / &pivot).collect::<Vec<Q>>(), &m[r].1 / &pivot);
        m[r] = row;
        for i in 0..m.len() {
            if i != r && !m[i].0[c].is_zero() {
                let f = m[i].0[c].clone();
                for j in 0..cols {
                    let t = &m[r].0[j] * &f;
                    m[i].0[j] -= t;
                }
                let t = &m[r].1 * &f;
                m[i].1 -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    m.into_iter()
        .map(|(n, b)| {
            let c = Constraint::eq(n, b);
            let (n, b) = c.primitive();
            Constraint::eq(n.into_iter().map(Q::from).collect(), Q::from(b))
        })
        .collect()
}

fn pivot_of(e: &Constraint) -> Option<usize> {
    (0..e.normal.len()).rev().find(|&i| !e.normal[i].is_zero())
}

/// Reduce a constraint modulo equations in [`rref_equations`] form and
/// scale to integer primitive.
pub fn canonical(c: &Constraint, rref: &[Constraint]) -> Constraint {
    let mut n = c.normal.clone();
    let mut b = c.offset.clone();
    for e in rref {
        let Some(p) = pivot_of(e) else { continue };
        if n[p].is_zero() {
            continue;
        }
        let f = &n[p] / &e.normal[p];
        for (x, y) in n.iter_mut().zip(&e.normal) {
            *x -= &f * y;
        }
        b -= &f * &e.offset;
    }
    let (n, b) = Constraint { normal: n, offset: b, is_equation: c.is_equation }.primitive();
    Constraint { normal: n.into_iter().map(Q::from).collect(), offset: Q::from(b), is_equation: c.is_equation }
}

/// Coordinates `(λ_1..λ_r)` for pure states, `(λ_1..λ_r, μ_1..μ_k)` for
/// mixed states of rank at most `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct System {
    pub nu: Partition,
    pub r: usize,
    pub rank_bound: usize,
}

impl System {
    pub fn new(nu: Partition, r: usize, rank_bound: usize) -> Self {
        System { nu, r, rank_bound: rank_bound.max(1) }
    }

    pub fn is_pure(&self) -> bool {
        self.rank_bound == 1
    }

    pub fn dim(&self) -> usize {
        if self.is_pure() {
            self.r
        } else {
            self.r + self.rank_bound
        }
    }

    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = (1..=self.r).map(|i| format!("λ{i}")).collect();
        if !self.is_pure() {
            v.extend((1..=self.rank_bound).map(|j| format!("μ{j}")));
        }
        v
    }

    pub fn point(&self, p: &plethysm::InnerPoint) -> Vec<Q> {
        let mut x = p.lambda.clone();
        if !self.is_pure() {
            x.extend(p.mu.iter().cloned());
        }
        x
    }

    /// Trace equations.
    pub fn ambient_equations(&self) -> Vec<Constraint> {
        let d = self.dim();
        let mut t = vec![Q::zero(); d];
        for x in t.iter_mut().take(self.r) {
            *x = Q::one();
        }
        let mut out = vec![Constraint::eq(t, q(self.nu.size() as i64))];
        if !self.is_pure() {
            let mut m = vec![Q::zero(); d];
            for x in m.iter_mut().skip(self.r) {
                *x = Q::one();
            }
            out.push(Constraint::eq(m, Q::one()));
        }
        out
    }

    /// Ordering and nonnegativity of `λ` and `μ`.
    pub fn ambient_inequalities(&self) -> Vec<Constraint> {
        let d = self.dim();
        let mut out = Vec::new();
        let mut chain = |start: usize, len: usize| {
            for i in start..start + len - 1 {
                let mut a = vec![Q::zero(); d];
                a[i] = -Q::one();
                a[i + 1] = Q::one();
                out.push(Constraint::le(a, Q::zero()));
            }
            let mut a = vec![Q::zero(); d];
            a[start + len - 1] = -Q::one();
            out.push(Constraint::le(a, Q::zero()));
        };
        chain(0, self.r);
        if !self.is_pure() {
            chain(self.r, self.rank_bound);
        }
        out
    }

    /// `Σ c_i λ_i ≤ Σ β_j μ_j` as a constraint in these coordinates.
    pub fn from_homogeneous(&self, lambda_coeffs: &[i64], mu_coeffs: &[i64]) -> Constraint {
        let mut n: Vec<Q> = lambda_coeffs.iter().map(|&c| q(c)).collect();
        n.resize(self.r, Q::zero());
        if self.is_pure() {
            Constraint::le(n, q(mu_coeffs[0]))
        } else {
            n.extend((0..self.rank_bound).map(|j| -q(mu_coeffs.get(j).copied().unwrap_or(0))));
            Constraint::le(n, Q::zero())
        }
    }

    /// Homogeneous integer form `(c, β)` of `n·x ≤ b`, with the trace shift
    /// that minimizes `Σ|c| + Σ|β|`.
    pub fn homogeneous(&self, c: &Constraint) -> (Vec<i64>, Vec<i64>) {
        let mut v: Vec<Q> = c.normal[..self.r].to_vec();
        if self.is_pure() {
            v.push(c.offset.clone());
        } else {
            v.extend((0..self.rank_bound).map(|j| &c.offset - &c.normal[self.r + j]));
        }
        let ints: Vec<i64> = primitive_ints(&v).iter().map(|x| x.to_i64().expect("small coefficients")).collect();
        let (lam, beta) = ints.split_at(self.r);
        let n = self.nu.size() as i64;
        let cost = |t: i64| -> i64 { lam.iter().map(|&x| (x + t).abs()).sum::<i64>() + beta.iter().map(|&x| (x + t * n).abs()).sum::<i64>() };
        let bound = lam.iter().chain(beta).map(|x| x.abs()).max().unwrap_or(0) + 1;
        let t = (-bound..=bound).min_by_key(|&t| (cost(t), t.abs(), t)).unwrap_or(0);
        (lam.iter().map(|&x| x + t).collect(), beta.iter().map(|&x| x + t * n).collect())
    }

    /// Readable form: `λ1 - λ2 ≤ 1 + μ2` or `λ2 + λ5 ≤ 1`.
    pub fn display(&self, lambda_coeffs: &[i64], mu_coeffs: &[i64]) -> String {
        let lhs = linear_form_string("λ", lambda_coeffs);
        if self.is_pure() {
            if lambda_coeffs.iter().all(|&c| c <= 0) {
                let neg: Vec<i64> = lambda_coeffs.iter().map(|c| -c).collect();
                return format!("{} ≥ {}", linear_form_string("λ", &neg), -mu_coeffs[0]);
            }
            return format!("{lhs} ≤ {}", mu_coeffs[0]);
        }
        let b = mu_coeffs[0];
        let rest: Vec<i64> = mu_coeffs.iter().map(|&x| x - b).collect();
        let tail = linear_form_string("μ", &rest);
        if tail == "0" {
            format!("{lhs} ≤ {b}")
        } else if let Some(t) = tail.strip_prefix('-') {
            format!("{lhs} ≤ {b} - {t}")
        } else {
            format!("{lhs} ≤ {b} + {tail}")
        }
    }
}

/// A facet or equation side of the inner hull and its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedFacet {
    pub inequality: String,
    pub lambda_coeffs: Vec<i64>,
    pub mu_coeffs: Vec<i64>,
    pub triple: Triple,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FacetMatch {
    pub matched: Vec<(Constraint, MatchedFacet)>,
    pub unmatched: Vec<Constraint>,
    pub ambient: Vec<Constraint>,
}

/// Representatives tried per candidate at most.
const REPRESENTATIVE_CAP: usize = 400;

fn candidate_offsets(k: usize) -> Vec<Vec<i64>> {
    let range: i64 = match k {
        0 => 0,
        1..=3 => 2,
        4..=5 => 1,
        _ => 0,
    };
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (-range..=range).map(move |s| [v.clone(), vec![s]].concat())).collect();
    }
    out
}

/// Classify the facets and equation sides of `poly`: ambient (implied by the
/// chamber), matched by a triple with nonzero coefficient, or unmatched.
pub fn facet_match(poly: &RationalPolytope, system: &System) -> FacetMatch {
    let ambient_eqs = rref_equations(&system.ambient_equations());
    let ambient_ineqs = system.ambient_inequalities();
    // a basis of the hull's equations modulo the trace equations
    let mut extra: Vec<Constraint> = Vec::new();
    let mut basis = ambient_eqs.clone();
    for e in &poly.equations {
        let red = canonical(e, &basis);
        if red.normal.iter().any(|x| !x.is_zero()) {
            extra.push(e.clone());
            basis.push(red);
            basis = rref_equations(&basis);
        }
    }
    let all_eqs = rref_equations(&[system.ambient_equations(), extra.clone()].concat());
    let is_ambient = |c: &Constraint, ctx: &[Constraint]| -> bool {
        let cc = canonical(c, ctx);
        ambient_ineqs.iter().any(|a| canonical(a, ctx) == cc)
    };
    let mut candidates: Vec<(Constraint, Vec<Constraint>)> = poly.facets.iter().map(|f| (f.clone(), extra.clone())).collect();
    for (i, e) in extra.iter().enumerate() {
        let others: Vec<Constraint> = extra.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, c)| c.clone()).collect();
        let neg = Constraint::le(e.normal.iter().map(|x| -x).collect(), -&e.offset);
        candidates.push((Constraint::le(e.normal.clone(), e.offset.clone()), others.clone()));
        candidates.push((neg, others));
    }
    let mut out = FacetMatch::default();
    for (cand, context) in candidates {
        let ctx = rref_equations(&[system.ambient_equations(), context.clone()].concat());
        if is_ambient(&cand, if context.len() == extra.len() { &all_eqs } else { &ctx }) {
            out.ambient.push(cand);
            continue;
        }
        match match_candidate(&cand, &context, system) {
            Some(m) if out.matched.iter().any(|(_, x)| x.lambda_coeffs == m.lambda_coeffs && x.mu_coeffs == m.mu_coeffs) => {}
            Some(m) => out.matched.push((cand, m)),
            None => out.unmatched.push(cand),
        }
    }
    out
}

fn match_candidate(cand: &Constraint, context: &[Constraint], system: &System) -> Option<MatchedFacet> {
    let mut reps: Vec<(i64, Vec<i64>, Vec<i64>)> = Vec::new();
    let mut seen = BTreeSet::new();
    for s in candidate_offsets(context.len()) {
        let mut n = cand.normal.clone();
        let mut b = cand.offset.clone();
        for (si, e) in s.iter().zip(context) {
            if *si == 0 {
                continue;
            }
            for (x, y) in n.iter_mut().zip(&e.normal) {
                *x += q(*si) * y;
            }
            b += q(*si) * &e.offset;
        }
        let (lam, beta) = system.homogeneous(&Constraint::le(n, b));
        if seen.insert((lam.clone(), beta.clone())) {
            let cost: i64 = lam.iter().chain(&beta).map(|x| x.abs()).sum();
            let negatives = lam.iter().chain(&beta).filter(|x| **x < 0).count() as i64;
            reps.push((cost * 64 + negatives, lam, beta));
        }
    }
    reps.sort();
    for (_, lam, beta) in reps.into_iter().take(REPRESENTATIVE_CAP) {
        match inequality_to_triple(&lam, &beta, &system.nu) {
            Ok(triple) => {
                return Some(MatchedFacet { inequality: system.display(&lam, &beta), lambda_coeffs: lam, mu_coeffs: beta, triple });
            }
            Err(CoefficientError::Unmatched(_)) | Err(CoefficientError::Trace) => {}
            Err(_) => {}
        }
    }
    None
}

/// State of one step of the approximation loop.
#[derive(Clone, Debug)]
pub struct PipelineStep {
    pub m: usize,
    pub points: usize,
    pub inner: RationalPolytope,
    pub outer: Option<RationalPolytope>,
    pub matched: Vec<MatchedFacet>,
    pub unmatched: Vec<String>,
    pub converged: bool,
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub system: System,
    pub steps: Vec<PipelineStep>,
    pub converged_at: Option<usize>,
    /// Set when the schedule stopped at a resource cap.
    pub capped: Option<String>,
}

impl PipelineReport {
    pub fn last(&self) -> Option<&PipelineStep> {
        self.steps.last()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let names = self.system.names();
        let steps: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "M": s.m,
                    "points": s.points,
                    "inner_vertices": s.inner.vertices.len(),
                    "inner_equations": s.inner.equations.iter().map(|c| c.to_string_with(&names)).collect::<Vec<_>>(),
                    "inner_facets": s.inner.facets.iter().map(|c| c.to_string_with(&names)).collect::<Vec<_>>(),
                    "matched": s.matched,
                    "unmatched": s.unmatched,
                    "converged": s.converged,
                })
            })
            .collect();
        serde_json::json!({
            "nu": self.system.nu,
            "r": self.system.r,
            "rank_bound": self.system.rank_bound,
            "converged_at_M": self.converged_at,
            "resource_cap": self.capped,
            "steps": steps,
            "final": self.last().map(|s| s.inner.to_json()),
        })
    }
}

/// Even schedule `2, 4, …, max_m`.
pub fn even_schedule(max_m: usize) -> Vec<usize> {
    (2..=max_m).step_by(2).collect()
}

/// Grow the inner hull along `schedule` until the outer polytope cut out
/// by matched facets equals it.
pub fn pipeline(system: &System, schedule: &[usize]) -> Result<PipelineReport, PolytopeError> {
    let mut report = PipelineReport { system: system.clone(), steps: Vec::new(), converged_at: None, capped: None };
    let mut tower = PlethysmTower::new(plethysm::character(&system.nu, system.r)?)?;
    let mut points: Vec<Vec<Q>> = Vec::new();
    let mut done = 0;
    for &m in schedule {
        if let Err(e) = plethysm::check_caps(&system.nu, system.r, m) {
            report.capped = Some(e.to_string());
            break;
        }
        for k in done + 1..=m {
            for c in plethysm::components_at(&mut tower, k, system.rank_bound)? {
                points.push(system.point(&plethysm::normalize(&c, system.r, system.rank_bound)));
            }
        }
        done = done.max(m);
        let inner = hull(&points)?;
        let fm = facet_match(&inner, system);
        let mut ineqs = system.ambient_inequalities();
        ineqs.extend(fm.matched.iter().map(|(_, mf)| system.from_homogeneous(&mf.lambda_coeffs, &mf.mu_coeffs)));
        let outer = from_h(system.dim(), &system.ambient_equations(), &ineqs).ok();
        let converged = outer.as_ref().is_some_and(|o| o.equal(&inner));
        let names = system.names();
        report.steps.push(PipelineStep {
            m,
            points: points.len(),
            inner,
            outer,
            matched: fm.matched.into_iter().map(|(_, mf)| mf).collect(),
            unmatched: fm.unmatched.iter().map(|c| c.to_string_with(&names)).collect(),
            converged,
        });
        if converged {
            report.converged_at = Some(m);
            break;
        }
    }
    Ok(report)
}

impl fmt::Display for RationalPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dim).map(|i| format!("x{i}")).collect();
        for e in self.equations.iter().chain(&self.facets) {
            writeln!(f, "{}", e.to_string_with(&names))?;
        }
        Ok(())
    }
}

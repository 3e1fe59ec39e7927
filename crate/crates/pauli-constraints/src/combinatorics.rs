//! Partitions, Young diagrams and semistandard tableaux, with the counting
//! functions built on them (Kostka, Littlewood–Richardson, skew standard
//! tableaux) and the diagram/index-sequence correspondence for framed
//! diagrams.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("diagram {diagram} does not fit a {rows}x{cols} frame")]
    Frame { diagram: Partition, rows: usize, cols: usize },
    #[error("index sequence {0:?} is not strictly increasing and positive")]
    BadIndices(Vec<usize>),
    #[error("tableau rows do not match shape or violate semistandardness")]
    BadTableau,
}

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so `[2,1,0]` and `[2,1]` compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sort arbitrary nonnegative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn row(n: usize) -> Self {
        Partition::new(vec![n]).expect("single part")
    }

    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let w = self.width();
        let parts = (0..w)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cellwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height() && (0..other.height()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.height() <= rows && self.width() <= cols
    }

    /// Partitions obtained by removing one corner cell.
    pub fn remove_corner_cells(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.height() {
            if self.part(i) > self.part(i + 1) {
                let mut p = self.parts.clone();
                p[i] -= 1;
                out.push(Partition::new(p).expect("still decreasing"));
            }
        }
        out
    }

    /// Partitions obtained by adding one cell, with at most `max_rows` rows.
    pub fn add_cells(&self, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.height() {
            if i >= max_rows {
                break;
            }
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition { parts: p });
            }
        }
        out
    }

    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) - j - 1;
        let leg = (i + 1..self.height()).filter(|&k| self.part(k) > j).count();
        arm + leg + 1
    }

    /// Dominance order: `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.height().max(other.height());
        let (mut s, mut t) = (0, 0);
        for i in 0..n {
            s += self.part(i);
            t += other.part(i);
            if s < t {
                return false;
            }
        }
        true
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.part(i)).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombinatoricsError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `3,1`, `[3,1]` and exponent shorthand such as `1^3` or `2,1^2`.
impl FromStr for Partition {
    type Err = CombinatoricsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        let mut parts = Vec::new();
        if !t.is_empty() {
            for tok in t.split(',') {
                let tok = tok.trim();
                let bad = || CombinatoricsError::Parse(s.to_string());
                if let Some((base, exp)) = tok.split_once('^') {
                    let base: usize = base.trim().parse().map_err(|_| bad())?;
                    let exp: usize = exp.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(base, exp));
                } else {
                    parts.push(tok.parse().map_err(|_| bad())?);
                }
            }
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` with at most `max_rows` rows and parts at most
/// `max_part`, in decreasing lexicographic order.
pub fn partitions_in_box(n: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
    fn rec(n: usize, rows: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=cap.min(n)).rev() {
            if p * rows < n {
                break;
            }
            cur.push(p);
            rec(n - p, rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_rows, max_part, &mut Vec::new(), &mut out);
    out
}

/// A semistandard tableau: rows weakly increase, columns strictly increase.
/// Ordered by the row reading word (rows top to bottom, left to right).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, CombinatoricsError> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::BadTableau);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return Err(CombinatoricsError::BadTableau);
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(b, a)| b <= a) {
                return Err(CombinatoricsError::BadTableau);
            }
        }
        Ok(Tableau { rows })
    }

    /// The single-column tableau with the given increasing entries.
    pub fn column(entries: &[usize]) -> Result<Self, CombinatoricsError> {
        Tableau::new(entries.iter().map(|&e| vec![e]).collect())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.entries().collect()
    }

    pub fn max_entry(&self) -> usize {
        self.entries().max().unwrap_or(0)
    }

    /// Content vector of length `r`: entry `i-1` counts occurrences of `i`.
    pub fn content(&self, r: usize) -> Vec<usize> {
        let mut c = vec![0; r.max(self.max_entry())];
        for e in self.entries() {
            c[e - 1] += 1;
        }
        c.truncate(r.max(self.max_entry()));
        c
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.entries().cmp(other.entries()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// All SSYT of `shape` with entries in `1..=max_entry`, sorted by reading word.
pub fn enumerate_ssyt(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.height() > max_entry {
        return out;
    }
    let cells: Vec<(usize, usize)> = (0..shape.height())
        .flat_map(|i| (0..shape.part(i)).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        max_entry: usize,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        // rows below still need room for strictly larger entries
        let below = (i + 1..rows.len()).filter(|&b| rows[b].len() > j).count();
        for e in lo..=max_entry.saturating_sub(below) {
            rows[i][j] = e;
            rec(k + 1, cells, rows, max_entry, out);
        }
        rows[i][j] = 0;
    }
    rec(0, &cells, &mut rows, max_entry, &mut out);
    out
}

/// Dimension of the irreducible GL(r) module with highest weight `shape`,
/// by the hook-content formula.
pub fn weyl_dimension(shape: &Partition, r: usize) -> BigUint {
    if shape.height() > r {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..shape.height() {
        for j in 0..shape.part(i) {
            num *= BigUint::from(r + j - i);
            den *= BigUint::from(shape.hook_length(i, j));
        }
    }
    num / den
}

/// Number of standard tableaux of skew shape `gamma/tau`; zero when
/// `tau` is not contained in `gamma`.
pub fn count_skew_standard(gamma: &Partition, tau: &Partition) -> u128 {
    fn rec(g: &Partition, tau: &Partition, memo: &mut HashMap<Partition, u128>) -> u128 {
        if g == tau {
            return 1;
        }
        if let Some(&v) = memo.get(g) {
            return v;
        }
        let mut total: u128 = 0;
        for h in g.remove_corner_cells() {
            if h.contains(tau) {
                total = total.checked_add(rec(&h, tau, memo)).expect("skew tableau count overflow");
            }
        }
        memo.insert(g.clone(), total);
        total
    }
    if !gamma.contains(tau) {
        return 0;
    }
    rec(gamma, tau, &mut HashMap::new())
}

/// Memoized Kostka numbers. Content order does not matter, so contents are
/// sorted and the smallest part is peeled off as a horizontal strip.
#[derive(Default)]
pub struct KostkaTable {
    memo: HashMap<(Partition, Vec<usize>), BigUint>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, shape: &Partition, content: &[usize]) -> BigUint {
        let mut c: Vec<usize> = content.iter().copied().filter(|&x| x > 0).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        if c.iter().sum::<usize>() != shape.size() {
            return BigUint::zero();
        }
        self.sorted(shape, &c)
    }

    fn sorted(&mut self, shape: &Partition, content: &[usize]) -> BigUint {
        if content.is_empty() {
            return if shape.is_empty() { BigUint::one() } else { BigUint::zero() };
        }
        if shape.height() > content.len() || !shape_dominated_ok(shape, content) {
            return BigUint::zero();
        }
        if content.len() == 1 {
            return if shape.height() <= 1 { BigUint::one() } else { BigUint::zero() };
        }
        let key = (shape.clone(), content.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let k = *content.last().expect("nonempty");
        let rest = &content[..content.len() - 1];
        let mut total = BigUint::zero();
        for inner in horizontal_strip_removals(shape, k) {
            total += self.sorted(&inner, rest);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

// K(λ, μ) ≠ 0 requires λ ⊵ μ.
fn shape_dominated_ok(shape: &Partition, content: &[usize]) -> bool {
    let (mut s, mut t) = (0, 0);
    for i in 0..shape.height().max(content.len()) {
        s += shape.part(i);
        t += content.get(i).copied().unwrap_or(0);
        if s < t {
            return false;
        }
    }
    true
}

/// Shapes `inner ⊆ shape` such that `shape/inner` is a horizontal strip of
/// `k` cells.
pub fn horizontal_strip_removals(shape: &Partition, k: usize) -> Vec<Partition> {
    let h = shape.height();
    let mut out = Vec::new();
    let mut cur = vec![0; h];
    fn rec(i: usize, left: usize, shape: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let h = cur.len();
        if i == h {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let hi = shape.part(i);
        let lo = shape.part(i + 1);
        // remaining rows can remove at most this many cells
        let cap: usize = (i + 1..h).map(|t| shape.part(t) - shape.part(t + 1)).sum();
        for keep in (lo..=hi).rev() {
            let removed = hi - keep;
            if removed > left {
                break;
            }
            if left - removed > cap {
                continue;
            }
            cur[i] = keep;
            rec(i + 1, left - removed, shape, cur, out);
        }
    }
    rec(0, k, shape, &mut cur, &mut out);
    out
}

/// Number of SSYT of `shape` with the given content (any order).
pub fn kostka(shape: &Partition, content: &[usize]) -> BigUint {
    KostkaTable::new().get(shape, content)
}

/// Littlewood–Richardson coefficient `c^nu_{mu,pi}`, counted as LR tableaux
/// of skew shape `nu/mu` and content `pi` whose reverse reading word is a
/// lattice word.
pub fn littlewood_richardson(mu: &Partition, pi: &Partition, nu: &Partition) -> u128 {
    if mu.size() + pi.size() != nu.size() || !nu.contains(mu) {
        return 0;
    }
    // cells of nu/mu in reverse reading order: rows top to bottom, right to left
    let cells: Vec<(usize, usize)> = (0..nu.height())
        .flat_map(|i| (mu.part(i)..nu.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut fill: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0usize; pi.height() + 1];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        pi: &Partition,
        fill: &mut HashMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
    ) -> u128 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let mut hi = pi.height();
        if let Some(&right) = fill.get(&(i, j + 1)) {
            hi = hi.min(right);
        }
        let mut lo = 1;
        if i > 0 && j >= mu.part(i - 1) {
            lo = fill[&(i - 1, j)] + 1;
        }
        let mut total = 0;
        for val in lo..=hi {
            if counts[val] >= pi.part(val - 1) {
                continue;
            }
            if val > 1 && counts[val] + 1 > counts[val - 1] {
                continue;
            }
            counts[val] += 1;
            fill.insert((i, j), val);
            total += rec(k + 1, cells, mu, pi, fill, counts);
            fill.remove(&(i, j));
            counts[val] -= 1;
        }
        total
    }
    rec(0, &cells, mu, pi, &mut fill, &mut counts)
}

/// A Young diagram placed in the north-west corner of a `rows × cols` frame.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedDiagram {
    pub diagram: Partition,
    pub rows: usize,
    pub cols: usize,
}

impl FramedDiagram {
    pub fn new(diagram: Partition, rows: usize, cols: usize) -> Result<Self, CombinatoricsError> {
        if !diagram.fits(rows, cols) {
            return Err(CombinatoricsError::Frame { diagram, rows, cols });
        }
        Ok(FramedDiagram { diagram, rows, cols })
    }

    /// Vertical sequence `i_k = k + gamma_{p-k+1}`, `k = 1..p`.
    pub fn vertical_sequence(&self) -> Vec<usize> {
        let p = self.rows;
        (1..=p).map(|k| k + self.diagram.part(p - k)).collect()
    }

    /// The complementary (horizontal) sequence in `1..=p+q`.
    pub fn horizontal_sequence(&self) -> Vec<usize> {
        let vert = self.vertical_sequence();
        (1..=self.rows + self.cols).filter(|i| !vert.contains(i)).collect()
    }
}

/// Inverse of [`FramedDiagram::vertical_sequence`].
pub fn diagram_from_indices(indices: &[usize], rows: usize, cols: usize) -> Result<FramedDiagram, CombinatoricsError> {
    let ok = indices.len() == rows
        && indices.first().is_none_or(|&i| i >= 1)
        && indices.windows(2).all(|w| w[0] < w[1])
        && indices.last().is_none_or(|&i| i <= rows + cols);
    if !ok {
        return Err(CombinatoricsError::BadIndices(indices.to_vec()));
    }
    let mut parts = vec![0; rows];
    for (k, &i) in indices.iter().enumerate() {
        parts[rows - 1 - k] = i - (k + 1);
    }
    FramedDiagram::new(Partition::new(parts)?, rows, cols)
}

/// Complement of `nu` inside an `r × s` frame: `nu*_i = s - nu_{r+1-i}`.
pub fn complement_diagram(nu: &Partition, r: usize, s: usize) -> Result<Partition, CombinatoricsError> {
    if !nu.fits(r, s) {
        return Err(CombinatoricsError::Frame { diagram: nu.clone(), rows: r, cols: s });
    }
    Partition::new((1..=r).map(|i| s - nu.part(r - i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_parsing_and_trailing_zeros() {
        assert_eq!(p(&[2, 1, 0]), p(&[2, 1]));
        assert_eq!("1^3".parse::<Partition>().unwrap(), p(&[1, 1, 1]));
        assert_eq!("[2,1^2]".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn ssyt_small_counts() {
        assert_eq!(enumerate_ssyt(&p(&[1, 1, 1]), 3).len(), 1);
        assert_eq!(enumerate_ssyt(&p(&[1]), 5).len(), 5);
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).len(), 8);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn ssyt_are_sorted_and_valid() {
        let ts = enumerate_ssyt(&p(&[2, 2, 1]), 4);
        for w in ts.windows(2) {
            assert!(w[0] < w[1]);
        }
        for t in &ts {
            assert_eq!(&Tableau::new(t.rows().to_vec()).unwrap(), t);
        }
    }

    #[test]
    fn skew_standard_counts() {
        assert_eq!(count_skew_standard(&p(&[2, 1]), &p(&[1])), 2);
        assert_eq!(count_skew_standard(&p(&[3, 2]), &p(&[3, 2])), 1);
        assert_eq!(count_skew_standard(&p(&[1]), &p(&[2])), 0);
        assert_eq!(count_skew_standard(&p(&[3, 2, 1]), &Partition::empty()), 16);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), BigUint::from(2u32));
        assert_eq!(kostka(&p(&[3, 2]), &[3, 2]), BigUint::one());
        assert_eq!(kostka(&p(&[2]), &[1, 1]), BigUint::one());
        assert_eq!(kostka(&p(&[2, 2]), &[1, 3]), BigUint::zero());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[2, 1])), 0);
        assert_eq!(littlewood_richardson(&p(&[1, 1]), &p(&[1]), &p(&[1, 1, 1])), 1);
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn vertical_sequences() {
        let f = FramedDiagram::new(p(&[1, 1, 1, 1]), 4, 3).unwrap();
        assert_eq!(f.vertical_sequence(), vec![2, 3, 4, 5]);
        let f = FramedDiagram::new(p(&[3, 1]), 4, 3).unwrap();
        assert_eq!(f.vertical_sequence(), vec![1, 2, 4, 7]);
        assert_eq!(f.horizontal_sequence(), vec![3, 5, 6]);
        let f = FramedDiagram::new(Partition::empty(), 3, 2).unwrap();
        assert_eq!(f.vertical_sequence(), vec![1, 2, 3]);
        assert!(diagram_from_indices(&[2, 2, 3], 3, 3).is_err());
        assert!(diagram_from_indices(&[1, 2, 9], 3, 3).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(complement_diagram(&p(&[1, 1, 1]), 6, 1).unwrap(), p(&[1, 1, 1]));
        assert_eq!(complement_diagram(&p(&[1, 1]), 5, 1).unwrap(), p(&[1, 1, 1]));
        assert_eq!(complement_diagram(&p(&[2, 2]), 3, 2).unwrap(), p(&[2]));
        assert!(complement_diagram(&p(&[3]), 3, 2).is_err());
    }

    #[test]
    fn partitions_in_box_counts() {
        assert_eq!(partitions_in_box(5, 5, 5).len(), 7);
        assert_eq!(partitions_in_box(4, 2, 4).len(), 3);
        assert_eq!(partitions_in_box(0, 3, 3), vec![Partition::empty()]);
    }
}

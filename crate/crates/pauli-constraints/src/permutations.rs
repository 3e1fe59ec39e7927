//! Permutations of `{1..n}` in one-line notation.
//!
//! Composition is right to left: `(a * b)(x) = a(b(x))`. Right
//! multiplication by `s_i` swaps the entries in positions `i` and `i+1`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("{0:?} is not a permutation of 1..n")]
    NotBijection(Vec<usize>),
    #[error("invalid cycle notation: {0}")]
    BadCycle(String),
    #[error("blocks do not partition 1..{n}: {blocks:?}")]
    BadBlocks { blocks: Vec<Vec<usize>>, n: usize },
    #[error("index sets {i:?} and {j:?} do not partition 1..n")]
    BadShuffle { i: Vec<usize>, j: Vec<usize> },
}

/// A permutation, canonicalized by dropping trailing fixed points so that
/// the embeddings `S_n ⊂ S_{n+1}` compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { images: Vec::new() }
    }

    /// From one-line notation (1-indexed).
    pub fn new(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(PermutationError::NotBijection(images));
            }
            seen[x] = true;
        }
        Ok(Self::canonical(images))
    }

    /// From zero-indexed one-line notation such as `1032`.
    pub fn from_zero_based(images: &[usize]) -> Result<Self, PermutationError> {
        Permutation::new(images.iter().map(|&x| x + 1).collect())
    }

    fn canonical(mut images: Vec<usize>) -> Self {
        while let Some(&last) = images.last() {
            if last == images.len() {
                images.pop();
            } else {
                break;
            }
        }
        Permutation { images }
    }

    /// Product of cycles; `(a b c)` sends `a → b → c → a`. Cycles are applied
    /// right to left.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self, PermutationError> {
        let mut w = Permutation::identity();
        for cyc in cycles.iter().rev() {
            if cyc.contains(&0) {
                return Err(PermutationError::BadCycle(format!("{cyc:?}")));
            }
            let mut sorted = cyc.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cyc.len() {
                return Err(PermutationError::BadCycle(format!("{cyc:?}")));
            }
            let n = cyc.iter().copied().max().unwrap_or(0);
            let mut img: Vec<usize> = (1..=n).collect();
            for k in 0..cyc.len() {
                img[cyc[k] - 1] = cyc[(k + 1) % cyc.len()];
            }
            w = Permutation::canonical(img) * w;
        }
        Ok(w)
    }

    /// Parse `(1 2 3)(4 5)`, `(1,2,3)` or `()`.
    pub fn parse_cycles(s: &str) -> Result<Self, PermutationError> {
        let bad = || PermutationError::BadCycle(s.to_string());
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let inner = &body[..end];
            let cyc: Result<Vec<usize>, _> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect();
            let cyc = cyc.map_err(|_| bad())?;
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = body[end + 1..].trim_start();
        }
        Permutation::from_cycles(&cycles)
    }

    /// Parse one-line notation `2,1,3` / `[2,1,3]`, or zero-based digits
    /// such as `1032`.
    pub fn parse_one_line(s: &str) -> Result<Self, PermutationError> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let bad = || PermutationError::BadCycle(s.to_string());
        if t.contains(',') || t.contains(' ') {
            let v: Result<Vec<usize>, _> = t
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(str::parse)
                .collect();
            Permutation::new(v.map_err(|_| bad())?)
        } else {
            let digits: Option<Vec<usize>> = t.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
            Permutation::from_zero_based(&digits.ok_or_else(bad)?)
        }
    }

    /// Simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1, "simple transpositions are 1-indexed");
        Permutation::transposition(i, i + 1)
    }

    pub fn transposition(i: usize, j: usize) -> Self {
        let n = i.max(j);
        let mut img: Vec<usize> = (1..=n).collect();
        img.swap(i - 1, j - 1);
        Permutation::canonical(img)
    }

    /// Longest element `w0 = [n, n-1, …, 1]` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation::canonical((1..=n).rev().collect())
    }

    /// Smallest `n` with `w ∈ S_n`.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images.get(i - 1).copied().unwrap_or(i)
    }

    /// One-line notation padded with fixed points to length `n`.
    pub fn images(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.n())).map(|i| self.apply(i)).collect()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    /// `w * s_i`: swap positions `i` and `i+1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut img = self.images(i + 1);
        img.swap(i - 1, i);
        Permutation::canonical(img)
    }

    /// `s_i * w`: swap the values `i` and `i+1`.
    pub fn swap_values(&self, i: usize) -> Self {
        let img = self
            .images(i + 1)
            .into_iter()
            .map(|x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
            .collect();
        Permutation::canonical(img)
    }

    /// A reduced word `(i_1, …, i_l)` with `w = s_{i_1} ⋯ s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = w.descents().last() {
            w = w.swap_positions(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn from_word(word: &[usize]) -> Self {
        word.iter().fold(Permutation::identity(), |w, &i| w.swap_positions(i))
    }

    /// True iff `w` is increasing on the positions of every block.
    pub fn is_minimal_coset_rep(&self, blocks: &[Vec<usize>]) -> Result<bool, PermutationError> {
        let n = blocks.iter().map(Vec::len).sum::<usize>();
        let mut seen = vec![false; n + 1];
        for b in blocks {
            for &i in b {
                if i == 0 || i > n || seen[i] {
                    return Err(PermutationError::BadBlocks { blocks: blocks.to_vec(), n });
                }
                seen[i] = true;
            }
        }
        if self.n() > n {
            return Err(PermutationError::BadBlocks { blocks: blocks.to_vec(), n });
        }
        Ok(blocks.iter().all(|b| {
            let mut pos = b.clone();
            pos.sort_unstable();
            pos.windows(2).all(|p| self.apply(p[0]) < self.apply(p[1]))
        }))
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_string(&self) -> String {
        let cs = self.cycles();
        if cs.is_empty() {
            return "()".into();
        }
        cs.iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .collect()
    }
}

/// The Grassmann shuffle `[I, J]` in one-line notation.
pub fn grassmann_shuffle(i: &[usize], j: &[usize]) -> Result<Permutation, PermutationError> {
    let err = || PermutationError::BadShuffle { i: i.to_vec(), j: j.to_vec() };
    let inc = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
    if !inc(i) || !inc(j) {
        return Err(err());
    }
    let images: Vec<usize> = i.iter().chain(j).copied().collect();
    Permutation::new(images).map_err(|_| err())
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        let n = self.n().max(rhs.n());
        Permutation::canonical((1..=n).map(|x| self.apply(rhs.apply(x))).collect())
    }
}

impl Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermutationError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All permutations of `S_n` with the given length.
pub fn permutations_of_length(n: usize, len: usize) -> Vec<Permutation> {
    let mut level = vec![Permutation::identity()];
    for _ in 0..len {
        let mut next: Vec<Permutation> = level
            .iter()
            .flat_map(|w| {
                (1..n)
                    .filter(|&i| w.apply(i) < w.apply(i + 1))
                    .map(move |i| w.swap_positions(i))
            })
            .collect();
        next.sort();
        next.dedup();
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity().length(), 0);
        assert_eq!(p(&[4, 3, 2, 1]).length(), 6);
        let c = Permutation::from_cycles(&[vec![2, 3, 4, 5, 6]]).unwrap();
        assert_eq!(c.length(), 4);
    }

    #[test]
    fn cycle_direction() {
        let c = Permutation::from_cycles(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(c.one_line(), &[2, 3, 1]);
        assert_eq!(Permutation::parse_cycles("(1 2 3)").unwrap(), c);
        assert_eq!(Permutation::parse_cycles("()").unwrap(), Permutation::identity());
        assert_eq!(c.cycles(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn reduced_words() {
        let c = Permutation::from_cycles(&[vec![2, 3, 4, 5, 6]]).unwrap();
        assert_eq!(c.reduced_word(), vec![2, 3, 4, 5]);
        assert!(Permutation::identity().reduced_word().is_empty());
        assert_eq!(Permutation::simple(1).reduced_word(), vec![1]);
        let w = p(&[3, 1, 4, 2]);
        assert_eq!(Permutation::from_word(&w.reduced_word()), w);
    }

    #[test]
    fn minimal_cosets() {
        assert!(Permutation::identity().is_minimal_coset_rep(&[vec![1, 2], vec![3]]).unwrap());
        assert!(!p(&[2, 1, 3]).is_minimal_coset_rep(&[vec![1, 2], vec![3]]).unwrap());
        assert!(p(&[1, 2]).is_minimal_coset_rep(&[vec![1, 1]]).is_err());
    }

    #[test]
    fn shuffles() {
        assert!(grassmann_shuffle(&[1, 2, 3], &[4, 5]).unwrap().is_identity());
        assert_eq!(grassmann_shuffle(&[2, 3, 4, 5], &[1, 6, 7]).unwrap().length(), 4);
        assert_eq!(grassmann_shuffle(&[1, 2, 4, 7], &[3, 5, 6]).unwrap().length(), 4);
        assert!(grassmann_shuffle(&[1, 2], &[2, 3]).is_err());
        assert!(grassmann_shuffle(&[1, 3], &[4]).is_err());
    }

    #[test]
    fn composition_convention() {
        let a = Permutation::simple(1);
        let b = Permutation::simple(2);
        // (s1 s2)(1) = s1(s2(1)) = s1(1) = 2
        assert_eq!((&a * &b).apply(1), 2);
        assert_eq!(Permutation::identity().swap_positions(2), b);
        assert_eq!(&p(&[3, 1, 2]) * &p(&[3, 1, 2]).inverse(), Permutation::identity());
    }

    #[test]
    fn length_levels() {
        assert_eq!(permutations_of_length(4, 0).len(), 1);
        assert_eq!(permutations_of_length(4, 1).len(), 3);
        assert_eq!(permutations_of_length(4, 3).len(), 6);
        assert_eq!(permutations_of_length(4, 6), vec![Permutation::longest(4)]);
    }
}

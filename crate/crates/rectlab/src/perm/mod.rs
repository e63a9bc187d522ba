//! Permutations in one-line notation, mesh patterns, permutation classes and
//! the weak Bruhat order.

mod bruhat;
mod classes;
mod pattern;

pub use bruhat::{bruhat_covers, bruhat_leq, inversion_set};
pub use classes::{classify, ClassFlags, PermClass};
pub use pattern::{contains_pattern, occurrences, patterns, MeshPattern};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("entries are not a bijection on 1..{0}")]
    NotBijection(usize),
    #[error("invalid token {token:?} at position {position}")]
    Parse { token: String, position: usize },
    #[error("permutations of different sizes ({left} and {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("shaded cell ({0}, {1}) outside the pattern grid")]
    CellOutOfRange(usize, usize),
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijection(n));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn reverse(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    /// Entry `n + 1 - π(i)` at every position.
    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// 0-based position of each value: `positions()[v - 1]`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v - 1] = i;
        }
        pos
    }

    /// The permutation with the entries at positions `i` and `i + 1` exchanged.
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e.swap(i, i + 1);
        Permutation(e)
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Permutation::identity(n)) }
    }
}

pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut e = current.0.clone();
        let n = e.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| e[i] < e[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| e[j] > e[i]).unwrap();
                e.swap(i, j);
                e[i + 1..].reverse();
                self.next = Some(Permutation(e));
            }
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let entries = s
            .split_whitespace()
            .enumerate()
            .map(|(position, token)| {
                token
                    .parse::<usize>()
                    .map_err(|_| PermError::Parse { token: token.to_string(), position: position + 1 })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(entries)
    }
}

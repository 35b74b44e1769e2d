//! Column index sets.

use std::fmt;

use crate::error::{Error, Result};

/// A strictly increasing set of 0-based column indices.
///
/// Human-facing output uses 1-based indices; see [`SubsetIndex::to_one_based`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex(Vec<usize>);

impl SubsetIndex {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if let Some(w) = indices.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Index(format!(
                "indices must be strictly increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Self(indices))
    }

    /// Builds from 1-based indices, as printed in reports.
    pub fn from_one_based(indices: &[usize]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::Index("1-based index 0 is not valid".into()));
        }
        Self::new(indices.iter().map(|&i| i - 1).collect())
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self(indices)
    }

    /// Checks every index is below `n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&last) if last >= n => Err(Error::Index(format!("index {last} out of range for {n} columns"))),
            _ => Ok(()),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    /// The indices of `[0, n)` not in this set.
    pub fn complement(&self, n: usize) -> Self {
        Self((0..n).filter(|i| !self.contains(*i)).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for SubsetIndex {
    /// Renders 1-based, e.g. `{1,2,3,5}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, i) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// Lexicographic iterator over the `k`-subsets of `[0, n)`.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }

    /// Starts at `first` (which must be a sorted `k`-subset of `[0, n)`).
    pub fn starting_at(n: usize, first: Vec<usize>) -> Self {
        let done = first.last().is_some_and(|&l| l >= n);
        Self {
            n,
            current: first,
            done,
        }
    }

    fn advance(&mut self) {
        let k = self.current.len();
        let mut end = k;
        while end > 0 {
            let pos = end - 1;
            self.current[pos] += 1;
            if self.current[pos] < self.n - (k - end) {
                for i in end..k {
                    self.current[i] = self.current[i - 1] + 1;
                }
                return;
            }
            end -= 1;
        }
        self.done = true;
    }
}

impl Iterator for Combinations {
    type Item = SubsetIndex;

    fn next(&mut self) -> Option<SubsetIndex> {
        if self.done {
            return None;
        }
        let out = SubsetIndex::from_sorted_unchecked(self.current.clone());
        self.advance();
        Some(out)
    }
}

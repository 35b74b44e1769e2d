//! Brute-force classification of every `k`-column subset by rank.
//!
//! Subsets are walked depth-first in lexicographic order while an XOR basis
//! of the chosen prefix is kept up to date. Once a prefix is dependent every
//! completion of it is dependent too, so the whole subtree is counted with a
//! single binomial. Work is split across threads by the first column of the
//! subset, i.e. into contiguous lexicographic ranges, and the per-range
//! results are concatenated in order.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::binomial;
use crate::error::{Error, Result};
use crate::gf2::{words_for, BitMatrix};
use crate::subset::{Combinations, SubsetIndex};

/// Default cap on the number of subsets the oracle will classify.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Default cap on the number of subsets for which lists are kept.
pub const DEFAULT_LIST_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Refuse when `C(n, k)` exceeds this.
    pub budget: u64,
    /// Keep the dependent and independent set lists.
    pub collect_sets: bool,
    /// Lists are dropped when `C(n, k)` exceeds this.
    pub list_limit: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            collect_sets: false,
            list_limit: DEFAULT_LIST_LIMIT,
        }
    }
}

impl OracleOptions {
    pub fn with_sets(mut self) -> Self {
        self.collect_sets = true;
        self
    }
}

/// Result of [`brute_force_counts`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCounts {
    pub singular: u64,
    pub full_rank: u64,
    /// Lexicographically sorted, present when requested and within the list limit.
    pub dependent_sets: Option<Vec<SubsetIndex>>,
    pub independent_sets: Option<Vec<SubsetIndex>>,
}

/// Classifies every `k × k` column submatrix of a full-row-rank `k × n` matrix.
pub fn brute_force_counts(m: &BitMatrix, opts: &OracleOptions) -> Result<OracleCounts> {
    let (k, n) = (m.rows(), m.cols());
    let found = m.rank();
    if found != k {
        return Err(Error::Rank { found, expected: k });
    }
    let total_big = binomial(n, k);
    let total = total_big
        .to_u64()
        .filter(|&t| t <= opts.budget)
        .ok_or_else(|| Error::Budget {
            what: "brute-force rank enumeration",
            needed: total_big.to_string(),
            budget: opts.budget,
        })?;
    let collect = opts.collect_sets && total <= opts.list_limit;

    if k == 0 {
        return Ok(OracleCounts {
            singular: 0,
            full_rank: 1,
            dependent_sets: collect.then(Vec::new),
            independent_sets: collect.then(|| vec![SubsetIndex::default()]),
        });
    }

    let binom = pascal(n);
    let parts: Vec<Walker<'_>> = match m.column_words() {
        Some(words) => (0..=n - k)
            .into_par_iter()
            .map(|first| {
                let mut w = Walker::new(n, k, &binom, collect);
                w.walk_from(&mut WordBasis::new(&words), first);
                w
            })
            .collect(),
        None => {
            let cols = column_vectors(m);
            (0..=n - k)
                .into_par_iter()
                .map(|first| {
                    let mut w = Walker::new(n, k, &binom, collect);
                    w.walk_from(&mut MultiBasis::new(&cols, k), first);
                    w
                })
                .collect()
        }
    };

    let mut out = OracleCounts {
        singular: 0,
        full_rank: 0,
        dependent_sets: collect.then(Vec::new),
        independent_sets: collect.then(Vec::new),
    };
    for part in parts {
        out.singular += part.singular;
        out.full_rank += part.full_rank;
        if let (Some(all), Some(mut local)) = (out.dependent_sets.as_mut(), part.dependent) {
            all.append(&mut local);
        }
        if let (Some(all), Some(mut local)) = (out.independent_sets.as_mut(), part.independent) {
            all.append(&mut local);
        }
    }
    if out.singular + out.full_rank != total {
        return Err(Error::Invariant(format!(
            "oracle classified {} of {total} subsets",
            out.singular + out.full_rank
        )));
    }
    Ok(out)
}

/// The lexicographically sorted dependent `k`-subsets of `m`.
pub fn dependent_family(m: &BitMatrix, opts: &OracleOptions) -> Result<Vec<SubsetIndex>> {
    let opts = OracleOptions {
        collect_sets: true,
        list_limit: opts.budget,
        ..opts.clone()
    };
    Ok(brute_force_counts(m, &opts)?
        .dependent_sets
        .expect("lists are kept up to the budget"))
}

/// `C(a, b)` for `a, b <= n`, saturating. Every value the walker reads is at
/// most `C(n, k)`, which the budget check has bounded.
fn pascal(n: usize) -> Vec<Vec<u64>> {
    let mut t: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    for a in 0..=n {
        let mut row = vec![1u64; a + 1];
        for b in 1..a {
            row[b] = t[a - 1][b - 1].saturating_add(t[a - 1][b]);
        }
        t.push(row);
    }
    t
}

fn column_vectors(m: &BitMatrix) -> Vec<Vec<u64>> {
    let words = words_for(m.rows());
    (0..m.cols())
        .map(|j| {
            let mut v = vec![0u64; words];
            for i in (0..m.rows()).filter(|&i| m.get(i, j)) {
                v[i / 64] |= 1 << (i % 64);
            }
            v
        })
        .collect()
}

/// An XOR basis that supports undoing the most recent insertion.
trait ColumnBasis {
    /// Inserts column `j`; returns the pivot slot, or `None` if `j` is in the span.
    fn try_insert(&mut self, j: usize) -> Option<usize>;
    fn remove(&mut self, slot: usize);
}

struct WordBasis<'a> {
    cols: &'a [u64],
    pivots: [u64; 64],
}

impl<'a> WordBasis<'a> {
    fn new(cols: &'a [u64]) -> Self {
        Self { cols, pivots: [0; 64] }
    }
}

impl ColumnBasis for WordBasis<'_> {
    #[inline]
    fn try_insert(&mut self, j: usize) -> Option<usize> {
        let mut v = self.cols[j];
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if self.pivots[h] == 0 {
                self.pivots[h] = v;
                return Some(h);
            }
            v ^= self.pivots[h];
        }
        None
    }

    #[inline]
    fn remove(&mut self, slot: usize) {
        self.pivots[slot] = 0;
    }
}

struct MultiBasis<'a> {
    cols: &'a [Vec<u64>],
    pivots: Vec<Option<Vec<u64>>>,
}

impl<'a> MultiBasis<'a> {
    fn new(cols: &'a [Vec<u64>], bits: usize) -> Self {
        Self {
            cols,
            pivots: vec![None; bits],
        }
    }
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

impl ColumnBasis for MultiBasis<'_> {
    fn try_insert(&mut self, j: usize) -> Option<usize> {
        let mut v = self.cols[j].clone();
        while let Some(h) = leading_bit(&v) {
            match &self.pivots[h] {
                None => {
                    self.pivots[h] = Some(v);
                    return Some(h);
                }
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
            }
        }
        None
    }

    fn remove(&mut self, slot: usize) {
        self.pivots[slot] = None;
    }
}

struct Walker<'a> {
    n: usize,
    k: usize,
    binom: &'a [Vec<u64>],
    chosen: Vec<usize>,
    singular: u64,
    full_rank: u64,
    dependent: Option<Vec<SubsetIndex>>,
    independent: Option<Vec<SubsetIndex>>,
}

impl<'a> Walker<'a> {
    fn new(n: usize, k: usize, binom: &'a [Vec<u64>], collect: bool) -> Self {
        Self {
            n,
            k,
            binom,
            chosen: Vec::with_capacity(k),
            singular: 0,
            full_rank: 0,
            dependent: collect.then(Vec::new),
            independent: collect.then(Vec::new),
        }
    }

    /// Handles all subsets whose next element (after `chosen`) is `j`.
    fn step<B: ColumnBasis>(&mut self, basis: &mut B, j: usize) {
        let need = self.k - self.chosen.len() - 1;
        match basis.try_insert(j) {
            Some(slot) => {
                self.chosen.push(j);
                if need == 0 {
                    self.full_rank += 1;
                    if let Some(list) = self.independent.as_mut() {
                        list.push(SubsetIndex::from_sorted_unchecked(self.chosen.clone()));
                    }
                } else {
                    for next in j + 1..=self.n - need {
                        self.step(basis, next);
                    }
                }
                self.chosen.pop();
                basis.remove(slot);
            }
            None => {
                let rest = self.n - j - 1;
                self.singular += self.binom[rest][need];
                if let Some(list) = self.dependent.as_mut() {
                    for tail in Combinations::new(rest, need) {
                        let mut set = self.chosen.clone();
                        set.push(j);
                        set.extend(tail.as_slice().iter().map(|t| t + j + 1));
                        list.push(SubsetIndex::from_sorted_unchecked(set));
                    }
                }
            }
        }
    }

    fn walk_from<B: ColumnBasis>(&mut self, basis: &mut B, first: usize) {
        self.step(basis, first);
    }
}

//! Empirical search for `k × n` matrices with many full-rank `k × k` submatrices.
//!
//! Only systematic candidates `[I | P]` are scored: every full-row-rank matrix
//! reaches one by row operations and a column permutation, neither of which
//! changes the count.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use subrank::{analyze, AnalyzeOptions, BitMatrix, Error, Mode, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub k: usize,
    pub n: usize,
    pub strategy: Strategy,
    /// Cap on the number of candidates.
    pub budget: u64,
    /// Witnesses to report.
    pub keep: usize,
    pub analyze: AnalyzeOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub k: usize,
    pub n: usize,
    pub strategy: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub candidates: u64,
    #[serde(rename = "max_I", serialize_with = "ser_big")]
    pub max_full_rank: BigUint,
    /// Candidates attaining the maximum.
    pub attaining: u64,
    /// Up to `keep` attaining matrices, earliest candidates first, as row strings.
    pub witnesses: Vec<Vec<String>>,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Debug, Clone)]
struct Best {
    max: BigUint,
    attaining: u64,
    witnesses: Vec<(u64, BitMatrix)>,
}

impl Best {
    fn empty() -> Self {
        Self {
            max: BigUint::default(),
            attaining: 0,
            witnesses: Vec::new(),
        }
    }

    /// Order-independent, so any reduction tree gives the same answer.
    fn merge(mut self, other: Best, keep: usize) -> Best {
        match self.max.cmp(&other.max) {
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Equal => {
                self.attaining += other.attaining;
                self.witnesses.extend(other.witnesses);
                self.witnesses.sort_by_key(|(i, _)| *i);
                self.witnesses.truncate(keep);
                self
            }
        }
    }
}

fn candidate(k: usize, n: usize, bit: impl Fn(usize) -> bool) -> BitMatrix {
    let r = n - k;
    BitMatrix::from_fn(k, n, |i, j| if j < k { i == j } else { bit(i * r + j - k) })
}

pub fn search(opts: &SearchOptions) -> Result<SearchOutcome> {
    let (k, n) = (opts.k, opts.n);
    if k == 0 || k >= n {
        return Err(Error::Argument(format!(
            "search needs 1 <= k < n, got k = {k}, n = {n}"
        )));
    }
    let bits = k * (n - k);
    let (count, seed) = match opts.strategy {
        Strategy::Exhaustive => {
            if bits >= 64 || (1u64 << bits) > opts.budget {
                return Err(Error::Budget {
                    what: "exhaustive search",
                    needed: format!("2^{bits}"),
                    budget: opts.budget,
                });
            }
            (1u64 << bits, None)
        }
        Strategy::Random { samples, seed } => {
            if samples > opts.budget {
                return Err(Error::Budget {
                    what: "random search",
                    needed: samples.to_string(),
                    budget: opts.budget,
                });
            }
            (samples, Some(seed))
        }
    };

    let score = |index: u64| -> Result<Best> {
        let m = match opts.strategy {
            Strategy::Exhaustive => candidate(k, n, |b| index >> b & 1 == 1),
            Strategy::Random { seed, .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(index);
                let p: Vec<bool> = (0..bits).map(|_| rng.gen()).collect();
                candidate(k, n, |b| p[b])
            }
        };
        let report = analyze(&m, Mode::Auto, &opts.analyze)?;
        Ok(Best {
            max: report.full_rank_count().clone(),
            attaining: 1,
            witnesses: if opts.keep > 0 { vec![(index, m)] } else { Vec::new() },
        })
    };

    let keep = opts.keep;
    let best = (0..count)
        .into_par_iter()
        .map(score)
        .try_reduce(Best::empty, |a, b| Ok(a.merge(b, keep)))?;

    Ok(SearchOutcome {
        k,
        n,
        strategy: match opts.strategy {
            Strategy::Exhaustive => "exhaustive",
            Strategy::Random { .. } => "random",
        },
        seed,
        candidates: count,
        max_full_rank: best.max,
        attaining: best.attaining,
        witnesses: best
            .witnesses
            .iter()
            .map(|(_, m)| (0..m.rows()).map(|i| m.row_string(i)).collect())
            .collect(),
    })
}

//! Singular and full-rank `k × k` submatrix counts.
//!
//! For a full-row-rank `k × n` matrix `G`, a `k`-set of columns is singular
//! exactly when it contains the support of a nonzero codeword of the dual
//! code. When `3·d* > 2·max(k, n−k)` no `k`-set contains two such supports,
//! so the singular count is a weighted sum over the weight enumerator. When
//! `k < n−k` the same argument runs on the dual generator, whose `(n−k)`-sets
//! are singular exactly when the complementary `k`-sets of `G` are.

mod oracle;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::codes::{dual_of, min_weight, weight_enumerator_with, WeightEnumerator, DEFAULT_MAX_DIMENSION};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, SystematicForm};
use crate::subset::SubsetIndex;

pub use oracle::{
    brute_force_counts, dependent_family, OracleCounts, OracleOptions, DEFAULT_BUDGET, DEFAULT_LIST_LIMIT,
};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `3·d*/2 > max(k, n−k)`, evaluated as `3·d* > 2·max(k, n−k)`.
pub fn condition_check(d_star: usize, k: usize, n: usize) -> bool {
    3 * d_star > 2 * k.max(n - k)
}

/// `Σ_{d=1}^{k} A_d · C(n−d, n−k)`.
///
/// `we` is the enumerator of the orthogonal complement of the matrix whose
/// `k × k` submatrices are being counted (length `n = we.n()`). The sum is
/// evaluated unconditionally; it equals the singular count only under
/// [`condition_check`].
pub fn singular_count_formula(we: &WeightEnumerator, k: usize) -> BigUint {
    let n = we.n();
    (1..=k.min(n))
        .filter(|&d| !we.coeff(d).is_zero())
        .map(|d| we.coeff(d) * binomial(n - d, n - k))
        .sum()
}

/// `C(n, k) − singular_count_formula(we, k)`.
pub fn full_rank_count_formula(we: &WeightEnumerator, k: usize, n: usize) -> Result<BigUint> {
    if we.n() != n || k > n {
        return Err(Error::Argument(format!(
            "enumerator of length {} used for k = {k}, n = {n}",
            we.n()
        )));
    }
    let total = binomial(n, k);
    let singular = singular_count_formula(we, k);
    if singular > total {
        return Err(Error::Condition(format!(
            "formula sum {singular} exceeds C({n},{k}) = {total}"
        )));
    }
    Ok(total - singular)
}

/// Which code's enumerator feeds the formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The dual code, used when `k >= n−k`.
    Dual,
    /// The code itself, used when `k < n−k`.
    Primal,
}

/// How the reported counts were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

/// What [`analyze`] is allowed to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Formula only; fails when the condition does not hold.
    Formula,
    /// Brute force only.
    Oracle,
    /// Formula when the condition holds, brute force otherwise.
    #[default]
    Auto,
    /// Both, required to agree.
    Both,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" | "formula-only" => Ok(Mode::Formula),
            "oracle" | "oracle-only" => Ok(Mode::Oracle),
            "auto" => Ok(Mode::Auto),
            "both" => Ok(Mode::Both),
            other => Err(Error::Argument(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Formula => "formula",
            Mode::Oracle => "oracle",
            Mode::Auto => "auto",
            Mode::Both => "both",
        })
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Dual => "dual",
            Side::Primal => "primal",
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub oracle: OracleOptions,
    /// Largest code dimension the weight enumeration may visit.
    pub max_dimension: usize,
    /// Include 1-based dependent and independent set lists in the report.
    pub list_sets: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            oracle: OracleOptions::default(),
            max_dimension: DEFAULT_MAX_DIMENSION,
            list_sets: false,
        }
    }
}

/// Outcome of [`analyze`]. `D + I = C(n, k)` holds for every value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawReport")]
pub struct CountReport {
    n: usize,
    k: usize,
    d_star: Option<usize>,
    condition_holds: bool,
    side: Side,
    #[serde(rename = "D", with = "crate::bigint_serde")]
    singular_count: BigUint,
    #[serde(rename = "I", with = "crate::bigint_serde")]
    full_rank_count: BigUint,
    method: Method,
    enumerator: WeightEnumerator,
    #[serde(skip_serializing_if = "Option::is_none")]
    dependent_sets: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    independent_sets: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
struct RawReport {
    n: usize,
    k: usize,
    d_star: Option<usize>,
    condition_holds: bool,
    side: Side,
    #[serde(rename = "D", with = "crate::bigint_serde")]
    singular_count: BigUint,
    #[serde(rename = "I", with = "crate::bigint_serde")]
    full_rank_count: BigUint,
    method: Method,
    enumerator: WeightEnumerator,
    #[serde(default)]
    dependent_sets: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    independent_sets: Option<Vec<Vec<usize>>>,
}

impl TryFrom<RawReport> for CountReport {
    type Error = Error;

    fn try_from(r: RawReport) -> Result<Self> {
        let report = CountReport {
            n: r.n,
            k: r.k,
            d_star: r.d_star,
            condition_holds: r.condition_holds,
            side: r.side,
            singular_count: r.singular_count,
            full_rank_count: r.full_rank_count,
            method: r.method,
            enumerator: r.enumerator,
            dependent_sets: r.dependent_sets,
            independent_sets: r.independent_sets,
        };
        report.validate()?;
        Ok(report)
    }
}

impl CountReport {
    fn validate(&self) -> Result<()> {
        let total = binomial(self.n, self.k);
        if &self.singular_count + &self.full_rank_count != total {
            return Err(Error::Invariant(format!(
                "D + I = {} but C({},{}) = {total}",
                &self.singular_count + &self.full_rank_count,
                self.n,
                self.k
            )));
        }
        if self.enumerator.n() != self.n {
            return Err(Error::Invariant("enumerator length differs from n".into()));
        }
        for (sets, count) in [
            (&self.dependent_sets, &self.singular_count),
            (&self.independent_sets, &self.full_rank_count),
        ] {
            if let Some(sets) = sets {
                if BigUint::from(sets.len()) != *count {
                    return Err(Error::Invariant("set list length differs from its count".into()));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum weight of the enumerated side; `None` when that code is `{0}`.
    pub fn d_star(&self) -> Option<usize> {
        self.d_star
    }

    pub fn condition_holds(&self) -> bool {
        self.condition_holds
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `D`.
    pub fn singular_count(&self) -> &BigUint {
        &self.singular_count
    }

    /// `I`.
    pub fn full_rank_count(&self) -> &BigUint {
        &self.full_rank_count
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn enumerator(&self) -> &WeightEnumerator {
        &self.enumerator
    }

    /// 1-based, lexicographic.
    pub fn dependent_sets(&self) -> Option<&[Vec<usize>]> {
        self.dependent_sets.as_deref()
    }

    /// 1-based, lexicographic.
    pub fn independent_sets(&self) -> Option<&[Vec<usize>]> {
        self.independent_sets.as_deref()
    }
}

/// Side-selection and enumeration steps shared by [`analyze`] and callers
/// that want the intermediate objects.
#[derive(Clone, Debug)]
pub struct Enumerated {
    pub systematic: SystematicForm,
    pub side: Side,
    /// Generator of the enumerated side.
    pub generator: BitMatrix,
    pub enumerator: WeightEnumerator,
    pub d_star: Option<usize>,
    pub condition_holds: bool,
    /// Size of the square submatrices the formula counts on the chosen side.
    pub counted: usize,
}

/// Systematic form, side choice, enumeration, `d*` and the condition.
pub fn enumerate_side(m: &BitMatrix, max_dimension: usize) -> Result<Enumerated> {
    let (k, n) = (m.rows(), m.cols());
    let systematic = m.systematic_form()?;
    let (side, generator, counted) = if k < n.div_ceil(2) {
        (Side::Primal, systematic.matrix().clone(), n - k)
    } else {
        (Side::Dual, dual_of(&systematic), k)
    };
    let enumerator = weight_enumerator_with(&generator, max_dimension)?;
    let d_star = match min_weight(&enumerator) {
        Ok(d) => Some(d),
        Err(Error::UndefinedDistance) => None,
        Err(e) => return Err(e),
    };
    // With no nonzero codeword on the enumerated side nothing is singular.
    let condition_holds = d_star.is_none_or(|d| condition_check(d, k, n));
    Ok(Enumerated {
        systematic,
        side,
        generator,
        enumerator,
        d_star,
        condition_holds,
        counted,
    })
}

/// Counts singular and full-rank `k × k` submatrices of a full-row-rank `m`.
pub fn analyze(m: &BitMatrix, mode: Mode, opts: &AnalyzeOptions) -> Result<CountReport> {
    let (k, n) = (m.rows(), m.cols());
    let e = enumerate_side(m, opts.max_dimension)?;
    let hypothesis_error = || {
        let d = e.d_star.unwrap_or(0);
        Error::Condition(format!(
            "d* = {d}, k = {k}, n = {n}: 3·{d} = {} is not above 2·{} = {}",
            3 * d,
            k.max(n - k),
            2 * k.max(n - k)
        ))
    };

    let (use_formula, use_oracle) = match mode {
        Mode::Formula if opts.list_sets => {
            return Err(Error::Argument("listing sets needs the oracle".into()));
        }
        Mode::Formula | Mode::Both if !e.condition_holds => return Err(hypothesis_error()),
        Mode::Formula => (true, false),
        Mode::Both => (true, true),
        Mode::Oracle => (false, true),
        Mode::Auto if e.condition_holds => (true, opts.list_sets),
        Mode::Auto => (false, true),
    };

    let formula = if use_formula {
        let i = full_rank_count_formula(&e.enumerator, e.counted, n)?;
        Some((binomial(n, k) - &i, i))
    } else {
        None
    };

    let oracle = if use_oracle {
        let oracle_opts = OracleOptions {
            collect_sets: opts.list_sets,
            ..opts.oracle.clone()
        };
        Some(brute_force_counts(m, &oracle_opts)?)
    } else {
        None
    };

    let (singular_count, full_rank_count, method) = match (&formula, &oracle) {
        (Some((d, i)), Some(o)) => {
            if d.to_u64() != Some(o.singular) || i.to_u64() != Some(o.full_rank) {
                return Err(Error::Invariant(format!(
                    "formula gives D = {d}, I = {i} but the oracle gives D = {}, I = {}",
                    o.singular, o.full_rank
                )));
            }
            (d.clone(), i.clone(), Method::Both)
        }
        (Some((d, i)), None) => (d.clone(), i.clone(), Method::Formula),
        (None, Some(o)) => (BigUint::from(o.singular), BigUint::from(o.full_rank), Method::Oracle),
        (None, None) => unreachable!("some method always runs"),
    };

    let to_lists = |sets: &Option<Vec<SubsetIndex>>| {
        sets.as_ref()
            .map(|v| v.iter().map(SubsetIndex::to_one_based).collect::<Vec<_>>())
    };
    let (dependent_sets, independent_sets) = match &oracle {
        Some(o) if opts.list_sets => (to_lists(&o.dependent_sets), to_lists(&o.independent_sets)),
        _ => (None, None),
    };

    let report = CountReport {
        n,
        k,
        d_star: e.d_star,
        condition_holds: e.condition_holds,
        side: e.side,
        singular_count,
        full_rank_count,
        method,
        enumerator: e.enumerator,
        dependent_sets,
        independent_sets,
    };
    report.validate()?;
    Ok(report)
}

/// Checks that a `k`-set is dependent in `g` exactly when its complement is
/// dependent in the dual generator, and that the independent counts agree.
pub fn complement_duality_check(g: &SystematicForm, opts: &OracleOptions) -> Result<bool> {
    complement_duality_pair_check(g.matrix(), &dual_of(g), opts)
}

/// [`complement_duality_check`] for an explicitly supplied pair. A rank-deficient
/// `h` fails the check.
pub fn complement_duality_pair_check(g: &BitMatrix, h: &BitMatrix, opts: &OracleOptions) -> Result<bool> {
    let (k, n) = (g.rows(), g.cols());
    if h.cols() != n || h.rows() + k != n {
        return Err(Error::Dimension(format!(
            "{}x{} matrix cannot be the dual of a {k}x{n} matrix",
            h.rows(),
            h.cols()
        )));
    }
    let list_opts = OracleOptions {
        collect_sets: true,
        list_limit: opts.budget,
        ..opts.clone()
    };
    let on_g = brute_force_counts(g, &list_opts)?;
    let on_h = match brute_force_counts(h, &list_opts) {
        Ok(c) => c,
        Err(Error::Rank { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    let mut mapped: Vec<SubsetIndex> = on_g
        .dependent_sets
        .expect("lists kept")
        .iter()
        .map(|s| s.complement(n))
        .collect();
    mapped.sort();
    Ok(on_g.full_rank == on_h.full_rank && mapped == on_h.dependent_sets.expect("lists kept"))
}

/// Applies `ops` random elementary row operations (swaps and row additions).
pub fn random_row_operations<R: Rng + ?Sized>(m: &BitMatrix, rng: &mut R, ops: usize) -> BitMatrix {
    let mut out = m.clone();
    let k = m.rows();
    if k < 2 {
        return out;
    }
    for _ in 0..ops {
        let a = rng.gen_range(0..k);
        let b = (a + rng.gen_range(1..k)) % k;
        if rng.gen_bool(0.5) {
            out.swap_rows(a, b);
        } else {
            out.add_row(a, b);
        }
    }
    out
}

/// Checks that `trials` random invertible row-operation sequences leave the
/// family of dependent `k`-column sets unchanged.
pub fn row_op_invariance_check<R: Rng + ?Sized>(
    m: &BitMatrix,
    trials: usize,
    rng: &mut R,
    opts: &OracleOptions,
) -> Result<bool> {
    let base = dependent_family(m, opts)?;
    for _ in 0..trials {
        let ops = rng.gen_range(1..=3 * m.rows().max(1));
        let moved = random_row_operations(m, rng, ops);
        if dependent_family(&moved, opts)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

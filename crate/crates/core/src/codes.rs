//! Linear-code layer: duals, weight enumerators, the MacWilliams transform,
//! minimum weight and effective distances.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{mat_mul_transpose, BitMatrix, SystematicForm};
use crate::subset::SubsetIndex;

/// Largest generator dimension [`weight_enumerator`] will enumerate by default.
pub const DEFAULT_MAX_DIMENSION: usize = 28;

/// Enumerations below this dimension run on one thread.
const PARALLEL_MIN_DIMENSION: usize = 16;

/// Coefficients `A_0..=A_n` of a code's weight enumerating function
/// `W(x, y) = Σ A_d x^(n−d) y^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEnumerator")]
pub struct WeightEnumerator {
    n: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    coeffs: Vec<BigUint>,
}

#[derive(Deserialize)]
struct RawEnumerator {
    n: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    coeffs: Vec<BigUint>,
}

impl TryFrom<RawEnumerator> for WeightEnumerator {
    type Error = Error;

    fn try_from(raw: RawEnumerator) -> Result<Self> {
        Self::new(raw.n, raw.coeffs)
    }
}

impl WeightEnumerator {
    pub fn new(n: usize, coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::Consistency(format!(
                "length {n} needs {} coefficients, got {}",
                n + 1,
                coeffs.len()
            )));
        }
        if coeffs[0].is_zero() {
            return Err(Error::Consistency("A_0 must be at least 1".into()));
        }
        Ok(Self { n, coeffs })
    }

    pub fn from_counts(n: usize, counts: &[u64]) -> Result<Self> {
        Self::new(n, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Enumerator of the zero code `{0}` of length `n`.
    pub fn zero_code(n: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); n + 1];
        coeffs[0] = BigUint::one();
        Self { n, coeffs }
    }

    /// Enumerator of the full space `F_2^n`: `A_d = C(n, d)`.
    pub fn full_space(n: usize) -> Self {
        let coeffs = (0..=n).map(|d| crate::counting::binomial(n, d)).collect();
        Self { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &BigUint {
        &self.coeffs[d]
    }

    /// Number of codewords, `Σ A_d`.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `log2` of the codeword count, when that count is a power of two.
    pub fn dimension(&self) -> Option<usize> {
        let total = self.total();
        let bits = total.bits() as usize;
        (bits >= 1 && total == BigUint::one() << (bits - 1)).then_some(bits - 1)
    }
}

impl fmt::Display for WeightEnumerator {
    /// Renders the polynomial, e.g. `x^7 + 7x^4y^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let xe = self.n - d;
            let mono = monomial("x", xe) + &monomial("y", d);
            if a.is_one() && !mono.is_empty() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{a}{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

/// Generator `[Pᵀ | I_(n−k)]` of the dual code of `[I_k | P]`.
///
/// When `k = n` the dual is the zero code and the result has no rows.
pub fn dual_of(g: &SystematicForm) -> BitMatrix {
    let (k, n) = (g.k(), g.n());
    let Some(p) = g.parity_block() else {
        return BitMatrix::zeros(0, n);
    };
    let r = n - k;
    BitMatrix::from_fn(r, n, |i, j| if j < k { p.get(j, i) } else { j - k == i })
}

/// A systematic generator together with its dual generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodePair {
    g: SystematicForm,
    h: BitMatrix,
}

impl CodePair {
    pub fn new(g: SystematicForm) -> Result<Self> {
        let h = dual_of(&g);
        let r = g.n() - g.k();
        if h.rows() > 0 {
            if !mat_mul_transpose(g.matrix(), &h)?.is_zero() {
                return Err(Error::Invariant("G·Hᵀ is not zero".into()));
            }
            let found = h.rank();
            if found != r {
                return Err(Error::Invariant(format!("dual has rank {found}, expected {r}")));
            }
        }
        Ok(Self { g, h })
    }

    pub fn g(&self) -> &SystematicForm {
        &self.g
    }

    pub fn h(&self) -> &BitMatrix {
        &self.h
    }
}

/// Weight enumerator of the row space of `gen`, with the default dimension guard.
pub fn weight_enumerator(gen: &BitMatrix) -> Result<WeightEnumerator> {
    weight_enumerator_with(gen, DEFAULT_MAX_DIMENSION)
}

/// Weight enumerator of the row space of `gen`, refusing dimensions above
/// `max_dimension`.
///
/// Codewords are visited in reflected Gray-code order of the message, so each
/// step costs one row XOR and a popcount. Large message spaces are split into
/// contiguous Gray-code segments run in parallel; tallies are summed, so the
/// output does not depend on the split.
pub fn weight_enumerator_with(gen: &BitMatrix, max_dimension: usize) -> Result<WeightEnumerator> {
    let k = gen.rows();
    let found = gen.rank();
    if found != k {
        return Err(Error::Rank { found, expected: k });
    }
    if k > max_dimension || k >= 64 {
        return Err(Error::Budget {
            what: "weight enumeration",
            needed: format!("2^{k}"),
            budget: 1u64 << max_dimension.min(63),
        });
    }
    let n = gen.cols();
    let total = 1u64 << k;
    let seg_bits = if k < PARALLEL_MIN_DIMENSION {
        0
    } else {
        (k - 12).min(10)
    };
    let seg_len = total >> seg_bits;
    let tally = (0..1u64 << seg_bits)
        .into_par_iter()
        .map(|s| tally_segment(gen, s * seg_len, seg_len))
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                a
            },
        );
    WeightEnumerator::from_counts(n, &tally)
}

/// Weight tally for Gray-code messages `start..start+len`.
fn tally_segment(gen: &BitMatrix, start: u64, len: u64) -> Vec<u64> {
    let n = gen.cols();
    let mut tally = vec![0u64; n + 1];
    let gray = start ^ (start >> 1);
    if gen.stride() == 1 {
        let rows: Vec<u64> = (0..gen.rows()).map(|i| gen.row(i)[0]).collect();
        let mut code = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| gray >> i & 1 == 1)
            .fold(0u64, |acc, (_, r)| acc ^ r);
        tally[code.count_ones() as usize] += 1;
        for i in start + 1..start + len {
            code ^= rows[i.trailing_zeros() as usize];
            tally[code.count_ones() as usize] += 1;
        }
    } else {
        let mut code = vec![0u64; gen.stride()];
        for r in (0..gen.rows()).filter(|r| gray >> r & 1 == 1) {
            code.iter_mut().zip(gen.row(r)).for_each(|(c, w)| *c ^= w);
        }
        let weight = |c: &[u64]| c.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        tally[weight(&code)] += 1;
        for i in start + 1..start + len {
            let row = gen.row(i.trailing_zeros() as usize);
            code.iter_mut().zip(row).for_each(|(c, w)| *c ^= w);
            tally[weight(&code)] += 1;
        }
    }
    tally
}

/// Dual enumerator by the MacWilliams identity
/// `W_dual(x, y) = W(x + y, x − y) / 2^k`, expanded in exact integers.
pub fn macwilliams(we: &WeightEnumerator, k: usize) -> Result<WeightEnumerator> {
    let expected = BigUint::one() << k;
    let total = we.total();
    if total != expected {
        return Err(Error::Consistency(format!(
            "coefficients sum to {total}, expected 2^{k}"
        )));
    }
    let n = we.n();
    let binom = binomial_table(n);
    let divisor = BigInt::from(expected);
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // Coefficient of x^(n−j) y^j in Σ_d A_d (x+y)^(n−d) (x−y)^d.
        let mut acc = BigInt::zero();
        for (d, a) in we.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut kraw = BigInt::zero();
            for i in j.saturating_sub(n - d)..=j.min(d) {
                let term = &binom[d][i] * &binom[n - d][j - i];
                if i % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += BigInt::from(a.clone()) * kraw;
        }
        let (q, r) = acc.div_rem(&divisor);
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "MacWilliams coefficient {j} is not an integer"
            )));
        }
        if q.sign() == Sign::Minus {
            return Err(Error::Invariant(format!("MacWilliams coefficient {j} is negative")));
        }
        coeffs.push(q.to_biguint().expect("nonnegative"));
    }
    WeightEnumerator::new(n, coeffs)
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for a in 0..=n {
        let mut row = vec![BigInt::one(); a + 1];
        for b in 1..a {
            row[b] = &t[a - 1][b - 1] + &t[a - 1][b];
        }
        t.push(row);
    }
    t
}

/// Smallest `d ≥ 1` with `A_d > 0`.
pub fn min_weight(we: &WeightEnumerator) -> Result<usize> {
    (1..=we.n())
        .find(|&d| !we.coeff(d).is_zero())
        .ok_or(Error::UndefinedDistance)
}

/// Effective distance of a set of `P` columns: the weight of their XOR plus
/// the number of columns chosen.
pub fn effective_distance(p: &BitMatrix, t_set: &SubsetIndex) -> Result<usize> {
    if t_set.is_empty() {
        return Err(Error::Argument("effective distance needs at least one column".into()));
    }
    t_set.check_within(p.cols())?;
    let weight = (0..p.rows())
        .filter(|&i| t_set.as_slice().iter().filter(|&&j| p.get(i, j)).count() % 2 == 1)
        .count();
    Ok(weight + t_set.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const HAMMING74_GS: [&str; 4] = ["1000111", "0100110", "0010101", "0001011"];
    const EX107_GS: [&str; 7] = [
        "1000000110",
        "0100000011",
        "0010000111",
        "0001000101",
        "0000100010",
        "0000010111",
        "0000001101",
    ];

    fn gs(rows: &[&str]) -> SystematicForm {
        SystematicForm::from_systematic(BitMatrix::from_text_rows(rows).unwrap()).unwrap()
    }

    fn counts(we: &WeightEnumerator) -> Vec<u64> {
        we.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    /// Multiplies every message vector by the generator.
    fn naive_enumerator(gen: &BitMatrix) -> Vec<u64> {
        let mut tally = vec![0u64; gen.cols() + 1];
        for msg in 0u64..1 << gen.rows() {
            let w = (0..gen.cols())
                .filter(|&j| (0..gen.rows()).filter(|&i| msg >> i & 1 == 1 && gen.get(i, j)).count() % 2 == 1)
                .count();
            tally[w] += 1;
        }
        tally
    }

    fn random_systematic(rng: &mut impl Rng, k: usize, n: usize) -> SystematicForm {
        let m = BitMatrix::from_fn(k, n, |i, j| if j < k { i == j } else { rng.gen() });
        SystematicForm::from_systematic(m).unwrap()
    }

    #[test]
    fn dual_of_hamming() {
        let h = dual_of(&gs(&HAMMING74_GS));
        assert_eq!(
            h,
            BitMatrix::from_text_rows(&["1110100", "1101010", "1011001"]).unwrap()
        );
    }

    #[test]
    fn dual_of_full_space_is_empty() {
        let h = dual_of(&SystematicForm::from_systematic(BitMatrix::identity(2)).unwrap());
        assert_eq!((h.rows(), h.cols()), (0, 2));
        assert_eq!(weight_enumerator(&h).unwrap(), WeightEnumerator::zero_code(2));
    }

    #[test]
    fn dual_of_ten_seven() {
        let h = dual_of(&gs(&EX107_GS));
        let expected = ["1011011100", "1110110010", "0111011001"];
        assert_eq!(h, BitMatrix::from_text_rows(&expected).unwrap());
    }

    #[test]
    fn code_pair_invariants() {
        let pair = CodePair::new(gs(&HAMMING74_GS)).unwrap();
        assert_eq!(pair.h().rank(), 3);
    }

    #[test]
    fn enumerator_of_hamming_dual() {
        let h = BitMatrix::from_text_rows(&["1110100", "1101010", "1011001"]).unwrap();
        let we = weight_enumerator(&h).unwrap();
        assert_eq!(counts(&we), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        // Σ A_d x^(n−d) y^d: the weight-4 term is x^3y^4.
        assert_eq!(we.to_string(), "x^7 + 7x^3y^4");
        assert_eq!(min_weight(&we).unwrap(), 4);
    }

    #[test]
    fn enumerator_of_ten_seven_dual() {
        // The printed dual generator has r1 + r3 = 1100000101 of weight 4, so
        // its enumerator is x^10 + x^6y^4 + 6x^4y^6.
        let h = dual_of(&gs(&EX107_GS));
        let we = weight_enumerator(&h).unwrap();
        assert_eq!(counts(&we), naive_enumerator(&h));
        assert_eq!(counts(&we), vec![1, 0, 0, 0, 1, 0, 6, 0, 0, 0, 0]);
        assert_eq!(min_weight(&we).unwrap(), 4);
    }

    #[test]
    fn enumerator_of_simplex_15_4() {
        let cols: Vec<u64> = (1u64..16).filter(|c| c.count_ones() >= 2).collect();
        let g = BitMatrix::from_fn(
            11,
            15,
            |i, j| if j < 11 { i == j } else { cols[i] >> (j - 11) & 1 == 1 },
        );
        let h = dual_of(&SystematicForm::from_systematic(g).unwrap());
        let we = weight_enumerator(&h).unwrap();
        let mut expected = vec![0u64; 16];
        expected[0] = 1;
        expected[8] = 15;
        assert_eq!(counts(&we), expected);
        assert_eq!(we.to_string(), "x^15 + 15x^7y^8");
    }

    #[test]
    fn enumerator_rejects_rank_deficient() {
        let m = BitMatrix::from_text_rows(&["101", "101"]).unwrap();
        assert!(matches!(
            weight_enumerator(&m),
            Err(Error::Rank { found: 1, expected: 2 })
        ));
    }

    #[test]
    fn enumerator_guard() {
        let m = BitMatrix::identity(6);
        assert!(matches!(weight_enumerator_with(&m, 5), Err(Error::Budget { .. })));
        assert!(weight_enumerator_with(&m, 6).is_ok());
    }

    #[test]
    fn enumerator_one_by_one() {
        let we = weight_enumerator(&BitMatrix::identity(1)).unwrap();
        assert_eq!(counts(&we), vec![1, 1]);
        assert_eq!(min_weight(&we).unwrap(), 1);
    }

    #[test]
    fn parallel_segments_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let sf = random_systematic(&mut rng, 18, 30);
        let we = weight_enumerator(sf.matrix()).unwrap();
        assert_eq!(we.total(), BigUint::one() << 18);
        // Total weight of a code is 2^(k-1) times its support size.
        let support = (0..30).filter(|&j| (0..18).any(|i| sf.matrix().get(i, j))).count() as u64;
        let weighted: u64 = counts(&we).iter().enumerate().map(|(d, a)| d as u64 * a).sum();
        assert_eq!(weighted, support << 17);
        assert_eq!(counts(&tally_segment_whole(sf.matrix())), counts(&we));
    }

    fn tally_segment_whole(gen: &BitMatrix) -> WeightEnumerator {
        let t = tally_segment(gen, 0, 1u64 << gen.rows());
        WeightEnumerator::from_counts(gen.cols(), &t).unwrap()
    }

    #[test]
    fn multiword_rows_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let sf = random_systematic(&mut rng, 6, 90);
        let we = weight_enumerator(sf.matrix()).unwrap();
        assert_eq!(counts(&we), naive_enumerator(sf.matrix()));
    }

    #[test]
    fn macwilliams_of_hamming_dual() {
        let dual = WeightEnumerator::from_counts(7, &[1, 0, 0, 0, 7, 0, 0, 0]).unwrap();
        let primal = macwilliams(&dual, 3).unwrap();
        let oracle = naive_enumerator(&BitMatrix::from_text_rows(&HAMMING74_GS).unwrap());
        assert_eq!(oracle, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(counts(&primal), oracle);
    }

    #[test]
    fn macwilliams_of_zero_code_is_full_space() {
        for n in 1..12 {
            let full = macwilliams(&WeightEnumerator::zero_code(n), 0).unwrap();
            assert_eq!(full, WeightEnumerator::full_space(n));
        }
    }

    #[test]
    fn macwilliams_rejects_bad_sum() {
        let we = WeightEnumerator::from_counts(7, &[1, 0, 0, 0, 6, 0, 0, 0]).unwrap();
        assert!(matches!(macwilliams(&we, 3), Err(Error::Consistency(_))));
    }

    #[test]
    fn macwilliams_flags_non_code_input() {
        // 3[1,1] + [1,-1] = [4,2], and 2 is not divisible by 4.
        let we = WeightEnumerator::from_counts(1, &[3, 1]).unwrap();
        assert!(matches!(macwilliams(&we, 2), Err(Error::Invariant(_))));
        // [1,2,1] + 3[1,-2,1] = [4,-4,4] gives a negative coefficient.
        let we = WeightEnumerator::from_counts(2, &[1, 0, 3]).unwrap();
        assert!(matches!(macwilliams(&we, 2), Err(Error::Invariant(_))));
    }

    #[test]
    fn min_weight_of_zero_code_is_undefined() {
        assert_eq!(
            min_weight(&WeightEnumerator::zero_code(4)),
            Err(Error::UndefinedDistance)
        );
        assert_eq!(min_weight(&WeightEnumerator::full_space(5)).unwrap(), 1);
    }

    #[test]
    fn enumerator_json_shape() {
        let we = WeightEnumerator::from_counts(3, &[1, 0, 3, 0]).unwrap();
        let json = serde_json::to_string(&we).unwrap();
        assert_eq!(json, r#"{"n":3,"coeffs":[1,0,3,0]}"#);
        let back: WeightEnumerator = serde_json::from_str(&json).unwrap();
        assert_eq!(back, we);
        assert!(serde_json::from_str::<WeightEnumerator>(r#"{"n":3,"coeffs":[1,0]}"#).is_err());
        let big = WeightEnumerator::full_space(70);
        let back: WeightEnumerator = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn effective_distances_of_the_three_by_six_example() {
        let p = BitMatrix::from_text_rows(&["111", "110", "101"]).unwrap();
        let cases: [(&[usize], usize); 7] = [
            (&[4], 4),
            (&[5], 3),
            (&[6], 3),
            (&[4, 5], 3),
            (&[4, 6], 3),
            (&[5, 6], 4),
            (&[4, 5, 6], 4),
        ];
        for (one_based, expected) in cases {
            let idx: Vec<usize> = one_based.iter().map(|c| c - 4).collect();
            let got = effective_distance(&p, &SubsetIndex::new(idx).unwrap()).unwrap();
            assert_eq!(got, expected, "columns {one_based:?}");
        }
        assert!(matches!(
            effective_distance(&p, &SubsetIndex::default()),
            Err(Error::Argument(_))
        ));
        assert!(effective_distance(&p, &SubsetIndex::new(vec![3]).unwrap()).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn systematic() -> impl Strategy<Value = SystematicForm> {
            (1usize..=10, 0usize..=10, any::<u64>()).prop_map(|(k, r, seed)| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                random_systematic(&mut rng, k, k + r)
            })
        }

        proptest! {
            #[test]
            fn gray_matches_naive(sf in systematic()) {
                let we = weight_enumerator(sf.matrix()).unwrap();
                prop_assert_eq!(counts(&we), naive_enumerator(sf.matrix()));
                if sf.matrix().rows() > 0 {
                    let brute_min = (1u64..1 << sf.k())
                        .map(|msg| (0..sf.n()).filter(|&j| (0..sf.k()).filter(|&i| msg >> i & 1 == 1 && sf.matrix().get(i, j)).count() % 2 == 1).count())
                        .min()
                        .unwrap();
                    prop_assert_eq!(min_weight(&we).unwrap(), brute_min);
                }
            }

            #[test]
            fn macwilliams_consistency(sf in systematic()) {
                let k = sf.k();
                let h = dual_of(&sf);
                let we = weight_enumerator(sf.matrix()).unwrap();
                let dual = weight_enumerator(&h).unwrap();
                prop_assert_eq!(&macwilliams(&we, k).unwrap(), &dual);
                prop_assert_eq!(&macwilliams(&dual, sf.n() - k).unwrap(), &we);
            }

            #[test]
            fn effective_distance_is_dual_codeword_weight(sf in systematic(), mask in any::<u16>()) {
                prop_assume!(sf.n() > sf.k());
                let p = sf.parity_block().unwrap();
                let h = dual_of(&sf);
                let r = p.cols();
                let idx: Vec<usize> = (0..r).filter(|j| mask >> j & 1 == 1).collect();
                prop_assume!(!idx.is_empty());
                let mut code = vec![false; sf.n()];
                for &i in &idx {
                    for (j, c) in code.iter_mut().enumerate() {
                        *c ^= h.get(i, j);
                    }
                }
                let weight = code.iter().filter(|&&b| b).count();
                prop_assert_eq!(effective_distance(&p, &SubsetIndex::new(idx).unwrap()).unwrap(), weight);
            }
        }
    }
}

//! Bit-packed matrices over GF(2).
//!
//! Rows are stored as contiguous runs of `u64` words, column `j` living in word
//! `j / 64` at bit `j % 64`. Padding bits past the last column are kept zero so
//! that whole-word popcounts and comparisons are exact.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::subset::SubsetIndex;

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(cols: usize) -> u64 {
    match cols % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A dense binary matrix with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// All-zero `rows × cols` matrix.
    ///
    /// Zero rows is allowed (the dual of a full space); zero columns is not.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols >= 1, "a BitMatrix needs at least one column");
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from a predicate on `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds from per-row packed words; bits beyond `cols` must be clear.
    pub fn from_row_words(cols: usize, rows: &[u64]) -> Self {
        assert!(cols <= WORD_BITS);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, &w) in rows.iter().enumerate() {
            assert_eq!(w & !tail_mask(cols), 0, "row {i} has bits past column {cols}");
            m.data[i] = w;
        }
        m
    }

    /// Parses rows of `0`/`1` characters. Whitespace inside a row is ignored.
    pub fn from_text_rows<S: AsRef<str>>(lines: &[S]) -> Result<Self> {
        let rows: Vec<(usize, String)> = lines
            .iter()
            .enumerate()
            .map(|(i, l)| (i + 1, l.as_ref().chars().filter(|c| !c.is_whitespace()).collect()))
            .collect();
        Self::from_numbered_rows(&rows)
    }

    fn from_numbered_rows(rows: &[(usize, String)]) -> Result<Self> {
        let Some((_, first)) = rows.first() else {
            return Err(Error::Format {
                line: 0,
                reason: "no matrix rows".into(),
            });
        };
        let cols = first.len();
        let mut m = None::<BitMatrix>;
        for (i, (line, text)) in rows.iter().enumerate() {
            if text.is_empty() {
                return Err(Error::Format {
                    line: *line,
                    reason: "empty row".into(),
                });
            }
            if text.len() != cols {
                return Err(Error::Format {
                    line: *line,
                    reason: format!("row has {} entries, expected {cols}", text.len()),
                });
            }
            let m = m.get_or_insert_with(|| BitMatrix::zeros(rows.len(), cols));
            for (j, c) in text.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => {
                        return Err(Error::Format {
                            line: *line,
                            reason: format!("illegal character {other:?}"),
                        })
                    }
                }
            }
        }
        Ok(m.expect("at least one row"))
    }

    /// Parses the matrix text format: one row per line, `#` comment lines and
    /// blank lines skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows: Vec<(usize, String)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| {
                let t = l.trim_start();
                !t.is_empty() && !t.starts_with('#')
            })
            .map(|(i, l)| (i + 1, l.chars().filter(|c| !c.is_whitespace()).collect()))
            .collect();
        Self::from_numbered_rows(&rows)
    }

    /// Renders in the text format, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            s.push_str(&self.row_string(i));
            s.push('\n');
        }
        s
    }

    pub fn row_string(&self, i: usize) -> String {
        (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Words per packed row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        let bit = 1u64 << (j % WORD_BITS);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        let v = self.get(i, j);
        self.set(i, j, !v);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        let s = self.stride;
        for w in 0..s {
            let v = self.data[src * s + w];
            self.data[dst * s + w] ^= v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for w in 0..s {
            self.data.swap(a * s + w, b * s + w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(false).len()
    }

    /// Gaussian elimination in place; returns pivot columns in row order.
    ///
    /// The pivot row for each column is the lowest-index remaining row with a
    /// 1 in that column. With `reduce_above` the result is the reduced row
    /// echelon form.
    fn eliminate(&mut self, reduce_above: bool) -> Vec<usize> {
        let s = self.stride;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (wi, bit) = (c / WORD_BITS, 1u64 << (c % WORD_BITS));
            let Some(p) = (r..self.rows).find(|&i| self.data[i * s + wi] & bit != 0) else {
                continue;
            };
            self.swap_rows(r, p);
            let start = if reduce_above { 0 } else { r + 1 };
            for i in start..self.rows {
                if i != r && self.data[i * s + wi] & bit != 0 {
                    // Words left of `wi` are already zero in the pivot row.
                    for w in wi..s {
                        let v = self.data[r * s + w];
                        self.data[i * s + w] ^= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Row-reduces to `[I | P]`, permuting columns when the leading columns
    /// are dependent.
    pub fn systematic_form(&self) -> Result<SystematicForm> {
        let mut work = self.clone();
        let pivots = work.eliminate(true);
        if pivots.len() != self.rows {
            return Err(Error::Rank {
                found: pivots.len(),
                expected: self.rows,
            });
        }
        let mut col_perm = vec![usize::MAX; self.cols];
        for (pos, &c) in pivots.iter().enumerate() {
            col_perm[c] = pos;
        }
        let mut next = pivots.len();
        for slot in col_perm.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let matrix = work.permute_columns(&col_perm);
        Ok(SystematicForm { matrix, col_perm })
    }

    /// Moves column `j` to position `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> BitMatrix {
        assert_eq!(perm.len(), self.cols);
        let mut out = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &to) in perm.iter().enumerate() {
                if self.get(i, j) {
                    out.set(i, to, true);
                }
            }
        }
        out
    }

    /// The submatrix formed by the columns in `idx`, in order.
    pub fn select_columns(&self, idx: &SubsetIndex) -> Result<BitMatrix> {
        idx.check_within(self.cols)?;
        if idx.is_empty() {
            return Err(Error::Index("empty column selection".into()));
        }
        let mut out = BitMatrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (to, &from) in idx.as_slice().iter().enumerate() {
                if self.get(i, from) {
                    out.set(i, to, true);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BitMatrix {
        assert!(self.rows >= 1, "cannot transpose a matrix with no rows");
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Columns packed one per word (bit `i` = row `i`); requires `rows <= 64`.
    pub fn column_words(&self) -> Option<Vec<u64>> {
        if self.rows > WORD_BITS {
            return None;
        }
        let mut cols = vec![0u64; self.cols];
        for i in 0..self.rows {
            for (j, c) in cols.iter_mut().enumerate() {
                if self.get(i, j) {
                    *c |= 1 << i;
                }
            }
        }
        Some(cols)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot stack {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        Ok(out)
    }

    /// Columns `start..start+len` as a new matrix.
    pub fn column_block(&self, start: usize, len: usize) -> BitMatrix {
        assert!(start + len <= self.cols && len >= 1);
        BitMatrix::from_fn(self.rows, len, |i, j| self.get(i, start + j))
    }
}

/// `a · bᵀ` over GF(2): entry `(i, j)` is the parity of `row_i(a) & row_j(b)`.
///
/// `b` must have at least one row.
pub fn mat_mul_transpose(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    if a.cols != b.cols {
        return Err(Error::Dimension(format!(
            "a has {} columns but b has {}",
            a.cols, b.cols
        )));
    }
    if b.rows == 0 {
        return Err(Error::Dimension("b has no rows, the product has no columns".into()));
    }
    let mut out = BitMatrix::zeros(a.rows, b.rows);
    for i in 0..a.rows {
        let ra = a.row(i);
        for j in 0..b.rows {
            let ones: u32 = ra.iter().zip(b.row(j)).map(|(x, y)| (x & y).count_ones()).sum();
            if ones & 1 == 1 {
                out.set(i, j, true);
            }
        }
    }
    Ok(out)
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row_string(i))?;
        }
        Ok(())
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

/// A generator in `[I | P]` form together with the column permutation used to
/// reach it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystematicForm {
    matrix: BitMatrix,
    col_perm: Vec<usize>,
}

impl SystematicForm {
    /// Wraps a matrix already in `[I | P]` form.
    pub fn from_systematic(matrix: BitMatrix) -> Result<Self> {
        let k = matrix.rows();
        if k == 0 || k > matrix.cols() || matrix.column_block(0, k) != BitMatrix::identity(k) {
            return Err(Error::Argument("matrix is not of the form [I | P]".into()));
        }
        let col_perm = (0..matrix.cols()).collect();
        Ok(Self { matrix, col_perm })
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Original column index → systematic column index.
    pub fn col_perm(&self) -> &[usize] {
        &self.col_perm
    }

    pub fn k(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_identity_perm(&self) -> bool {
        self.col_perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Systematic column index → original column index.
    pub fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.col_perm.len()];
        for (orig, &sys) in self.col_perm.iter().enumerate() {
            inv[sys] = orig;
        }
        inv
    }

    /// Maps a matrix whose columns are in systematic order back to the
    /// original column order.
    pub fn restore_columns(&self, m: &BitMatrix) -> BitMatrix {
        m.permute_columns(&self.inverse_perm())
    }

    /// The `k × (n−k)` block `P`, or `None` when `k = n`.
    pub fn parity_block(&self) -> Option<BitMatrix> {
        let (k, n) = (self.k(), self.n());
        (k < n).then(|| self.matrix.column_block(k, n - k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const HAMMING74_G: [&str; 4] = ["1110100", "1011001", "1111111", "0110011"];
    pub(crate) const HAMMING74_GS: [&str; 4] = ["1000111", "0100110", "0010101", "0001011"];

    fn naive_rank(m: &BitMatrix) -> usize {
        let mut a: Vec<Vec<u8>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j) as u8).collect())
            .collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            if let Some(p) = (rank..a.len()).find(|&i| a[i][c] == 1) {
                a.swap(rank, p);
                for i in 0..a.len() {
                    if i != rank && a[i][c] == 1 {
                        let pivot = a[rank].clone();
                        a[i].iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn parse_identity_and_errors() {
        let m = BitMatrix::from_text_rows(&["10", "01"]).unwrap();
        assert_eq!(m, BitMatrix::identity(2));
        assert!(matches!(
            BitMatrix::from_text_rows(&["10", "011"]),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            BitMatrix::from_text_rows(&["10", "0x"]),
            Err(Error::Format { .. })
        ));
        assert!(BitMatrix::from_text_rows::<&str>(&[]).is_err());
        assert!(BitMatrix::from_text_rows(&["", ""]).is_err());
    }

    #[test]
    fn parse_text_skips_comments_and_whitespace() {
        let m: BitMatrix = "# comment\n1 0 0\n\n  0 1 1\n".parse().unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.row_string(1), "011");
        assert_eq!(m.to_text(), "100\n011\n");
    }

    #[test]
    fn parse_hamming_systematic() {
        let m = BitMatrix::from_text_rows(&HAMMING74_GS).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 7));
        assert!(m.get(0, 4) && m.get(0, 5) && m.get(0, 6));
        assert!(!m.get(3, 4));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(4).rank(), 4);
        assert_eq!(BitMatrix::from_text_rows(&HAMMING74_G).unwrap().rank(), 4);
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(BitMatrix::from_text_rows(&["11", "11"]).unwrap().rank(), 1);
    }

    #[test]
    fn rank_multiword_rows() {
        let m = BitMatrix::from_fn(5, 130, |i, j| j == 128 + (i % 2) || j == i * 20);
        assert_eq!(m.rank(), naive_rank(&m));
        assert_eq!(m.rank(), 5);
    }

    #[test]
    fn systematic_form_of_hamming_generator() {
        let g = BitMatrix::from_text_rows(&HAMMING74_G).unwrap();
        let sf = g.systematic_form().unwrap();
        assert_eq!(sf.matrix(), &BitMatrix::from_text_rows(&HAMMING74_GS).unwrap());
        assert!(sf.is_identity_perm());
    }

    #[test]
    fn systematic_form_fixed_point() {
        let gs = BitMatrix::from_text_rows(&HAMMING74_GS).unwrap();
        let sf = gs.systematic_form().unwrap();
        assert_eq!(sf.matrix(), &gs);
        assert!(sf.is_identity_perm());
    }

    #[test]
    fn systematic_form_with_column_pivoting() {
        // [I_3 | P] with columns permuted so the first three are dependent.
        let sys = BitMatrix::from_text_rows(&["10010", "01010", "00101"]).unwrap();
        let perm = [0, 1, 4, 2, 3];
        let m = sys.permute_columns(&perm);
        assert_eq!(m.column_block(0, 3).rank(), 2);
        let sf = m.systematic_form().unwrap();
        assert!(!sf.is_identity_perm());
        assert_eq!(sf.matrix().column_block(0, 3), BitMatrix::identity(3));
        // Row spaces agree: stacking adds no rank.
        let restored = sf.restore_columns(sf.matrix());
        let mut stacked = BitMatrix::zeros(6, 5);
        for i in 0..3 {
            for j in 0..5 {
                stacked.set(i, j, m.get(i, j));
                stacked.set(i + 3, j, restored.get(i, j));
            }
        }
        assert_eq!(stacked.rank(), 3);
    }

    #[test]
    fn systematic_form_rank_error() {
        let m = BitMatrix::from_text_rows(&["110", "110"]).unwrap();
        assert_eq!(m.systematic_form(), Err(Error::Rank { found: 1, expected: 2 }));
    }

    #[test]
    fn select_columns_examples() {
        let gs = BitMatrix::from_text_rows(&HAMMING74_GS).unwrap();
        let d1 = gs.select_columns(&SubsetIndex::new(vec![0, 1, 2, 4]).unwrap()).unwrap();
        assert_eq!(d1.rank(), 3);
        let i16 = gs.select_columns(&SubsetIndex::new(vec![0, 3, 5, 6]).unwrap()).unwrap();
        assert_eq!(i16.rank(), 4);
        assert_eq!(gs.select_columns(&SubsetIndex::full(7)).unwrap(), gs);
        assert!(gs.select_columns(&SubsetIndex::new(vec![0, 7]).unwrap()).is_err());
    }

    #[test]
    fn mat_mul_transpose_examples() {
        let gs = BitMatrix::from_text_rows(&HAMMING74_GS).unwrap();
        let h = BitMatrix::from_text_rows(&["1110100", "1101010", "1011001"]).unwrap();
        let prod = mat_mul_transpose(&gs, &h).unwrap();
        assert_eq!((prod.rows(), prod.cols()), (4, 3));
        assert!(prod.is_zero());
        let i3 = BitMatrix::identity(3);
        assert_eq!(mat_mul_transpose(&i3, &i3).unwrap(), i3);
        assert!(matches!(
            mat_mul_transpose(&gs, &BitMatrix::identity(3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn column_words_layout() {
        let m = BitMatrix::from_text_rows(&["101", "011"]).unwrap();
        assert_eq!(m.column_words().unwrap(), vec![0b01, 0b10, 0b11]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
            (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
                proptest::collection::vec(any::<bool>(), r * c)
                    .prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
            })
        }

        proptest! {
            #[test]
            fn rank_matches_naive(m in matrix(8, 80)) {
                prop_assert_eq!(m.rank(), naive_rank(&m));
            }

            #[test]
            fn rank_invariant_under_operations(
                m in matrix(6, 12),
                ops in proptest::collection::vec((0usize..6, 0usize..6, any::<bool>()), 0..12),
                seed in any::<u64>(),
            ) {
                let r = m.rank();
                let mut w = m.clone();
                for (a, b, swap) in ops {
                    let (a, b) = (a % w.rows(), b % w.rows());
                    if swap { w.swap_rows(a, b) } else if a != b { w.add_row(a, b) }
                }
                prop_assert_eq!(w.rank(), r);
                let mut perm: Vec<usize> = (0..m.cols()).collect();
                let mut s = seed;
                for i in (1..perm.len()).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    perm.swap(i, (s >> 33) as usize % (i + 1));
                }
                prop_assert_eq!(m.permute_columns(&perm).rank(), r);
            }

            #[test]
            fn systematic_form_is_identity_on_left(m in matrix(6, 14)) {
                prop_assume!(m.rank() == m.rows());
                let sf = m.systematic_form().unwrap();
                let k = m.rows();
                prop_assert_eq!(sf.matrix().rank(), k);
                prop_assert_eq!(sf.matrix().column_block(0, k), BitMatrix::identity(k));
                if m.column_block(0, k).rank() == k {
                    prop_assert!(sf.is_identity_perm());
                }
                let restored = sf.restore_columns(sf.matrix());
                let both = BitMatrix::from_fn(2 * k, m.cols(), |i, j| {
                    if i < k { m.get(i, j) } else { restored.get(i - k, j) }
                });
                prop_assert_eq!(both.rank(), k);
            }

            #[test]
            fn select_then_rank_matches_naive(m in matrix(6, 12), mask in any::<u16>()) {
                let idx: Vec<usize> = (0..m.cols()).filter(|j| mask >> j & 1 == 1).collect();
                prop_assume!(!idx.is_empty());
                let sub = m.select_columns(&SubsetIndex::new(idx.clone()).unwrap()).unwrap();
                let oracle = BitMatrix::from_fn(m.rows(), idx.len(), |i, j| m.get(i, idx[j]));
                prop_assert_eq!(sub.rank(), naive_rank(&oracle));
            }

            #[test]
            fn mat_mul_transpose_entrywise(a in matrix(5, 70), seed in any::<u64>()) {
                let b = BitMatrix::from_fn(3, a.cols(), |i, j| (seed >> ((i * 7 + j) % 64)) & 1 == 1);
                let prod = mat_mul_transpose(&a, &b).unwrap();
                for i in 0..a.rows() {
                    for j in 0..b.rows() {
                        let parity = (0..a.cols()).filter(|&c| a.get(i, c) && b.get(j, c)).count() % 2 == 1;
                        prop_assert_eq!(prod.get(i, j), parity);
                    }
                }
                let self_prod = mat_mul_transpose(&a, &a).unwrap();
                for i in 0..a.rows() {
                    prop_assert_eq!(self_prod.get(i, i), a.row_weight(i) % 2 == 1);
                }
            }
        }
    }
}

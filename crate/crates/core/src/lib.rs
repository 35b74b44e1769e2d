//! Exact counts of full-rank `k × k` submatrices of binary `k × n` matrices.
//!
//! The count is read off the weight enumerator of the matrix's row space (or
//! of its orthogonal complement, whichever has the smaller dimension) when the
//! minimum weight `d*` satisfies `3·d* > 2·max(k, n−k)`, and is otherwise
//! obtained, or cross-checked, by classifying every column subset by rank.
//!
//! ```
//! use subrank::{analyze, AnalyzeOptions, BitMatrix, Mode};
//!
//! let g = BitMatrix::from_text_rows(&["1110100", "1011001", "1111111", "0110011"]).unwrap();
//! let report = analyze(&g, Mode::Both, &AnalyzeOptions::default()).unwrap();
//! assert_eq!(report.full_rank_count().to_string(), "28");
//! ```

mod bigint_serde;
pub mod codes;
pub mod counting;
pub mod error;
pub mod gf2;
pub mod subset;

pub use codes::{
    dual_of, effective_distance, macwilliams, min_weight, weight_enumerator, weight_enumerator_with, CodePair,
    WeightEnumerator,
};
pub use counting::{
    analyze, binomial, brute_force_counts, complement_duality_check, complement_duality_pair_check, condition_check,
    full_rank_count_formula, row_op_invariance_check, singular_count_formula, AnalyzeOptions, CountReport, Method,
    Mode, OracleCounts, OracleOptions, Side,
};
pub use error::{Error, Result};
pub use gf2::{mat_mul_transpose, BitMatrix, SystematicForm};
pub use subset::{Combinations, SubsetIndex};

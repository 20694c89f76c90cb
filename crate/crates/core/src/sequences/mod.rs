//! Closed forms for every sequence, independent of the series engine.
//!
//! [`h_def`] is the reference value of `H_{n,λ}`; the other harmonic
//! expressions are alternative formulas that the verifier checks against it.

mod classical;
mod harmonic;
mod kseq;
mod stirling;
mod table;
mod transform;

pub use classical::{derangement, harmonic, harmonic_order, lah, stirling1_unsigned_classical};
pub use harmonic::{
    h_binom, h_def, h_def_table, h_derangement, h_order, h_stirling, harmonic_difference_sides,
    StirlingVariant,
};
pub use kseq::{k_binom, k_lah, k_nested, k_nested_enumerated, k_single_sum, weighted_inversion_sides};
pub use stirling::{
    deg_derangement, deg_stirling1, deg_stirling1_triangle, deg_stirling1_unsigned, one_falling_neg,
};
pub use table::{build_table, SequenceId, SequenceTable, TableIndex, TableRow};
pub use transform::{
    binomial_inversion, chain_sum, chain_sum_enumerated, iterated_weighted_transform,
    weighted_inversion, WeightedTransform,
};

use crate::factorial::{binom_column, lambda_plus};
use crate::poly::PolyLambda;
use crate::rational::Rational;

/// `[binom(λ+j, j)]` for `j = 0..=jmax`; entry `k−1` is `binom(λ+k−1, k−1)`.
pub(crate) fn rising_binom_column(jmax: u64) -> Vec<PolyLambda> {
    let mut out = Vec::with_capacity(jmax as usize + 1);
    let mut cur = PolyLambda::one();
    out.push(cur.clone());
    for j in 1..=jmax {
        cur = (&cur * &lambda_plus(j as i64)).scale(&Rational::new(1, j as i64));
        out.push(cur.clone());
    }
    out
}

/// `[binom(λ−1, j)]` for `j = 0..=jmax`.
pub(crate) fn lambda_minus_one_column(jmax: u64) -> Vec<PolyLambda> {
    binom_column(&lambda_plus(-1), jmax)
}

/// `(−1)^{k−1} binom(λ−1, k−1)` for `k = 1..=n`, i.e. the sequence whose
/// chain sums and partial sums produce the harmonic-type numbers.
pub(crate) fn signed_lambda_minus_one(n: u64) -> Vec<PolyLambda> {
    if n == 0 {
        return Vec::new();
    }
    lambda_minus_one_column(n - 1)
        .into_iter()
        .enumerate()
        .map(|(j, b)| b.scale(&Rational::sign_power(j as u64)))
        .collect()
}

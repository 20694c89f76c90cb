//! The numbers `K^{(m)}_{n,λ}`, defined by
//! `Σ K^{(m)}_{n,λ} t^n = −Li_{m,−λ}(−t/(1−t))/(1−t)`, in four closed forms.
//!
//! All functions take `m ≥ 1`; `m = 0` and `n = 0` give the zero polynomial.

use crate::factorial::{binomial_q, factorial_q};
use crate::poly::PolyLambda;
use crate::rational::Rational;

use super::classical::lah;
use super::transform::{chain_sum, chain_sum_enumerated_at};
use super::{rising_binom_column, signed_lambda_minus_one};

fn inv_pow(k: u64, m: u32) -> Rational {
    Rational::from_integer(k as i64).pow(-(m as i32)).expect("k ≥ 1")
}

/// `Σ_{k=1}^n binom(n, k)(−1)^{k−1}/k^m · binom(λ+k−1, k−1)`.
fn single_sum_with(rising: &[PolyLambda], n: u64, m: u32) -> PolyLambda {
    (1..=n)
        .map(|k| {
            let w = binomial_q(n, k) * Rational::sign_power(k - 1) * inv_pow(k, m);
            rising[k as usize - 1].scale(&w)
        })
        .sum()
}

/// `Σ_{j=1}^n (1/j) Σ_{k=1}^j binom(j, k)(−1)^{k−1}/k^{m−1} · binom(λ+k−1, k−1)`,
/// the coefficient extraction of the generating function.
pub fn k_binom(n: u64, m: u32) -> PolyLambda {
    if n == 0 || m == 0 {
        return PolyLambda::zero();
    }
    let rising = rising_binom_column(n - 1);
    (1..=n)
        .map(|j| single_sum_with(&rising, j, m - 1).scale(&Rational::new(1, j as i64)))
        .sum()
}

/// The single-sum form `Σ_{k=1}^n binom(n, k)(−1)^{k−1}/k^m · binom(λ+k−1, k−1)`.
pub fn k_single_sum(n: u64, m: u32) -> PolyLambda {
    if n == 0 || m == 0 {
        return PolyLambda::zero();
    }
    single_sum_with(&rising_binom_column(n - 1), n, m)
}

/// Chain-sum form `Σ_{1≤k₁≤…≤k_m≤n} (−1)^{k₁−1}/(k₁···k_m) · binom(λ−1, k₁−1)`,
/// evaluated with the prefix-sum recursion.
pub fn k_nested(n: u64, m: u32) -> PolyLambda {
    if n == 0 || m == 0 {
        return PolyLambda::zero();
    }
    chain_sum(&signed_lambda_minus_one(n), m).swap_remove(n as usize - 1)
}

/// [`k_nested`] by brute-force enumeration of index chains.
pub fn k_nested_enumerated(n: u64, m: u32) -> PolyLambda {
    if n == 0 || m == 0 {
        return PolyLambda::zero();
    }
    chain_sum_enumerated_at(&signed_lambda_minus_one(n), n as usize, m)
}

/// Lah-number form
/// `Σ_{j=1}^n (1/j!) Σ_{k=1}^j (−1)^{k−1}/k^m · binom(λ+k−1, k−1) · k! · L(j, k)`.
pub fn k_lah(n: u64, m: u32) -> PolyLambda {
    if n == 0 || m == 0 {
        return PolyLambda::zero();
    }
    let rising = rising_binom_column(n - 1);
    (1..=n)
        .map(|j| {
            let inner: PolyLambda = (1..=j)
                .map(|k| {
                    let w = Rational::sign_power(k - 1)
                        * inv_pow(k, m)
                        * factorial_q(k)
                        * Rational::from_bigint(lah(j, k));
                    rising[k as usize - 1].scale(&w)
                })
                .sum();
            inner.scale(&factorial_q(j).recip().expect("nonzero"))
        })
        .sum()
}

/// Both sides of the weighted inversion of `binom(λ+k−1, k−1)/k`:
/// the single sum with weight `1/k^m` and the `m`-fold chain sum.
pub fn weighted_inversion_sides(n: u64, m: u32) -> (PolyLambda, PolyLambda) {
    (k_single_sum(n, m), k_nested(n, m))
}

//! Classical (λ-free) numbers: the limits the degenerate sequences reduce to.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::factorial::{binomial, factorial, factorial_q};
use crate::rational::Rational;

/// `H_n = 1 + 1/2 + … + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> Rational {
    (1..=n).map(|k| Rational::new(1, k as i64)).sum()
}

/// `H_n^{(α)} = Σ_{k≤n} 1/k^α`, with `H_0^{(α)} = 0`.
pub fn harmonic_order(n: u64, alpha: u32) -> Rational {
    (1..=n)
        .map(|k| Rational::from_integer(k as i64).pow(-(alpha as i32)).expect("k ≥ 1"))
        .sum()
}

/// Unsigned Lah number `L(n, k) = binom(n−1, k−1)·n!/k!`.
///
/// `L(0, 0) = 1`; zero outside `n ≥ k ≥ 1`.
pub fn lah(n: u64, k: u64) -> BigInt {
    match (n, k) {
        (0, 0) => BigInt::one(),
        _ if k == 0 || k > n => BigInt::zero(),
        _ => binomial(n - 1, k - 1) * factorial(n) / factorial(k),
    }
}

/// Derangement number `d_n = n!·Σ_{k≤n} (−1)^k/k!`.
pub fn derangement(n: u64) -> BigInt {
    let sum: Rational = (0..=n)
        .map(|k| Rational::sign_power(k) * factorial_q(k).recip().expect("nonzero"))
        .sum();
    (factorial_q(n) * sum).to_integer().expect("d_n is an integer")
}

/// Classical unsigned Stirling numbers of the first kind, by
/// `c(n, k) = c(n−1, k−1) + (n−1)·c(n−1, k)`.
pub fn stirling1_unsigned_classical(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); i as usize + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            if j >= 1 {
                *slot += &row[j - 1];
            }
            if j < row.len() {
                *slot += &row[j] * (i - 1);
            }
        }
        row = next;
    }
    row[k as usize].clone()
}

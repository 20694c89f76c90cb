use crate::factorial::{deg_falling, factorial_q};
use crate::poly::PolyLambda;
use crate::rational::Rational;

/// Rows `0..=nmax` of the signed degenerate Stirling numbers of the first
/// kind, `S_{1,λ}(n, k)` at `[n][k]`.
///
/// They are the coordinates of `(x)_n` in the basis `(x)_{k,λ}`. Writing
/// `(x)_n = (x)_{n−1}(x − (n−1))` and `(x)_{k,λ}·x = (x)_{k+1,λ} + kλ(x)_{k,λ}`
/// gives `S(n, k) = S(n−1, k−1) + (kλ − (n−1))·S(n−1, k)`.
pub fn deg_stirling1_triangle(nmax: u64) -> Vec<Vec<PolyLambda>> {
    let mut rows = vec![vec![PolyLambda::one()]];
    for n in 1..=nmax as usize {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let mut v = if k >= 1 { prev[k - 1].clone() } else { PolyLambda::zero() };
                if k < prev.len() {
                    let w = PolyLambda::linear(
                        Rational::from_integer(-(n as i64 - 1)),
                        Rational::from_integer(k as i64),
                    );
                    v += &(&w * &prev[k]);
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `S_{1,λ}(n, k)`; zero for `k > n`.
pub fn deg_stirling1(n: u64, k: u64) -> PolyLambda {
    if k > n {
        return PolyLambda::zero();
    }
    deg_stirling1_triangle(n).swap_remove(n as usize).swap_remove(k as usize)
}

/// Unsigned `[n, k]_λ = (−1)^{n−k} S_{1,λ}(n, k)`.
pub fn deg_stirling1_unsigned(n: u64, k: u64) -> PolyLambda {
    if k > n {
        return PolyLambda::zero();
    }
    deg_stirling1(n, k).scale(&Rational::sign_power(n - k))
}

/// Degenerate derangement number `d_{n,λ} = n!·Σ_{k≤n} (−1)_{k,λ}/k!`.
pub fn deg_derangement(n: u64) -> PolyLambda {
    let minus_one = Rational::from_integer(-1);
    let sum: PolyLambda = (0..=n)
        .map(|k| deg_falling(&minus_one, k).scale(&factorial_q(k).recip().expect("nonzero")))
        .sum();
    sum.scale(&factorial_q(n))
}

/// `(1)_{k,−λ} = 1·(1 + λ)···(1 + (k−1)λ)`.
pub fn one_falling_neg(k: u64) -> PolyLambda {
    deg_falling(&Rational::one(), k).substitute_neg_lambda()
}

//! Degenerate harmonic numbers `H_{n,λ}` and `H^{(m)}_{n,λ}`, with every
//! alternative closed form that is checked against the defining sum.

use crate::factorial::{binomial_q, deg_falling, factorial_q, falling_poly, lambda_plus, rising_poly};
use crate::poly::PolyLambda;
use crate::rational::Rational;

use super::stirling::{deg_derangement, deg_stirling1_triangle, one_falling_neg};
use super::{rising_binom_column, signed_lambda_minus_one};

/// The defining sum `H_{n,λ} = Σ_{k=1}^n binom(λ−1, k−1)(−1)^{k−1}/k`.
///
/// `H_{0,λ} = 0`. This is the reference value for every other formula.
pub fn h_def(n: u64) -> PolyLambda {
    h_order(n, 1)
}

/// `[H_{0,λ}, H_{1,λ}, …, H_{n,λ}]` by partial sums.
pub fn h_def_table(n: u64) -> Vec<PolyLambda> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = PolyLambda::zero();
    out.push(acc.clone());
    for (k, term) in signed_lambda_minus_one(n).iter().enumerate() {
        acc += &term.scale(&Rational::new(1, k as i64 + 1));
        out.push(acc.clone());
    }
    out
}

/// `H_{n,λ} = Σ_{k=1}^n binom(n, k)(−1)^{k−1}/k · binom(λ+k−1, k−1)`.
pub fn h_binom(n: u64) -> PolyLambda {
    if n == 0 {
        return PolyLambda::zero();
    }
    let rising = rising_binom_column(n - 1);
    (1..=n)
        .map(|k| {
            let w = binomial_q(n, k) * Rational::sign_power(k - 1) * Rational::new(1, k as i64);
            rising[k as usize - 1].scale(&w)
        })
        .sum()
}

/// Degenerate harmonic number of order `m`:
/// `H^{(m)}_{n,λ} = Σ_{j=1}^n (−1)^{j−1}/j^m · binom(λ−1, j−1)`.
pub fn h_order(n: u64, m: u32) -> PolyLambda {
    signed_lambda_minus_one(n)
        .iter()
        .enumerate()
        .map(|(i, term)| {
            let j = Rational::from_integer(i as i64 + 1);
            term.scale(&j.pow(-(m as i32)).expect("j ≥ 1"))
        })
        .sum()
}

/// Which reading of the Stirling-number expression for `H_{n,λ}` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingVariant {
    /// `Σ_k k·(1)_{k,−λ}·[n,k]_λ`, with no `1/n!`.
    AsPrinted,
    /// `(1/n!)·Σ_k k·(1)_{k−1,−λ}·[n,k]_λ`, the form that follows from
    /// expanding `e_{−λ}(log_{−λ}(1/(1−t)))·log_{−λ}(1/(1−t))`.
    AsDerived,
}

/// `H_{n,λ}` through unsigned degenerate Stirling numbers of the first kind.
///
/// Only [`StirlingVariant::AsDerived`] agrees with [`h_def`]; the printed
/// variant is kept so the discrepancy stays testable.
pub fn h_stirling(n: u64, variant: StirlingVariant) -> PolyLambda {
    if n == 0 {
        return PolyLambda::zero();
    }
    let tri = deg_stirling1_triangle(n);
    let row = &tri[n as usize];
    let sum: PolyLambda = (1..=n)
        .map(|k| {
            let unsigned = row[k as usize].scale(&Rational::sign_power(n - k));
            let rising = match variant {
                StirlingVariant::AsPrinted => one_falling_neg(k),
                StirlingVariant::AsDerived => one_falling_neg(k - 1),
            };
            (&rising * &unsigned).scale(&Rational::from_integer(k as i64))
        })
        .sum();
    match variant {
        StirlingVariant::AsPrinted => sum,
        StirlingVariant::AsDerived => sum.scale(&factorial_q(n).recip().expect("nonzero")),
    }
}

/// `H_{n,λ}` via degenerate derangement numbers:
/// `(1/n!) Σ_j binom(n,j) d_{n−j,λ} Σ_k k! binom(j,k) (H_{k,λ} − H_{k−1,λ}) (1)_{j−k,λ}`.
pub fn h_derangement(n: u64) -> PolyLambda {
    if n == 0 {
        return PolyLambda::zero();
    }
    let h = h_def_table(n);
    let one = Rational::one();
    let falling: Vec<PolyLambda> = (0..=n).map(|i| deg_falling(&one, i)).collect();
    let derange: Vec<PolyLambda> = (0..=n).map(deg_derangement).collect();
    let sum: PolyLambda = (1..=n)
        .map(|j| {
            let inner: PolyLambda = (1..=j)
                .map(|k| {
                    let dh = &h[k as usize] - &h[k as usize - 1];
                    let w = factorial_q(k) * binomial_q(j, k);
                    (&dh * &falling[(j - k) as usize]).scale(&w)
                })
                .sum();
            (&derange[(n - j) as usize] * &inner).scale(&binomial_q(n, j))
        })
        .sum();
    sum.scale(&factorial_q(n).recip().expect("nonzero"))
}

/// Two expressions for `H_{n,λ} − H_{n−1,λ}` minus the shared last term:
///
/// * left: `(−1)^{n−1}/n! · ((λ−1)_{n−1} − ⟨λ+1⟩_{n−1})`
/// * right: `Σ_{k=1}^{n−1} binom(n−1, k−1)(−1)^{k−1}/k · binom(λ+k−1, k−1)`
///
/// Returns `(left, right)`; they agree for every `n ≥ 1`.
pub fn harmonic_difference_sides(n: u64) -> (PolyLambda, PolyLambda) {
    if n == 0 {
        return (PolyLambda::zero(), PolyLambda::zero());
    }
    let diff = &falling_poly(&lambda_plus(-1), n - 1) - &rising_poly(&lambda_plus(1), n - 1);
    let w = Rational::sign_power(n - 1) * factorial_q(n).recip().expect("nonzero");
    let lhs = diff.scale(&w);
    let rising = rising_binom_column(n.saturating_sub(1));
    let rhs = (1..n)
        .map(|k| {
            let w = binomial_q(n - 1, k - 1) * Rational::sign_power(k - 1) * Rational::new(1, k as i64);
            rising[k as usize - 1].scale(&w)
        })
        .sum();
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorial::binom_poly;
    use crate::sequences::classical::{harmonic, harmonic_order};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(c: &[(i64, i64)]) -> PolyLambda {
        PolyLambda::new(c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    /// Direct transcription of the defining sum, used as the oracle below.
    fn h_literal(n: u64) -> PolyLambda {
        (1..=n)
            .map(|k| {
                binom_poly(&lambda_plus(-1), k - 1)
                    .scale(&(Rational::sign_power(k - 1) * q(1, k as i64)))
            })
            .sum()
    }

    #[test]
    fn h_def_examples() {
        assert_eq!(h_def(0), PolyLambda::zero());
        assert_eq!(h_def(1), PolyLambda::one());
        assert_eq!(h_def(2), poly(&[(3, 2), (-1, 2)]));
        assert_eq!(h_def(3), poly(&[(11, 6), (-1, 1), (1, 6)]));
        assert_eq!(h_def(3).eval_at_zero(), harmonic(3));
        let table = h_def_table(25);
        for n in 0..=25 {
            assert_eq!(table[n as usize], h_literal(n));
            assert_eq!(h_def(n), table[n as usize]);
        }
    }

    #[test]
    fn h_binom_examples() {
        assert_eq!(h_binom(0), PolyLambda::zero());
        assert_eq!(h_binom(1), PolyLambda::one());
        assert_eq!(h_binom(2), poly(&[(3, 2), (-1, 2)]));
        for n in 0..=25 {
            assert_eq!(h_binom(n), h_def(n), "n={n}");
        }
    }

    #[test]
    fn h_order_examples() {
        for n in 0..=25 {
            assert_eq!(h_order(n, 1), h_def(n));
        }
        assert_eq!(h_order(2, 2), poly(&[(5, 4), (-1, 4)]));
        assert_eq!(h_order(2, 2).eval_at_zero(), harmonic_order(2, 2));
        assert_eq!(h_order(0, 3), PolyLambda::zero());
    }

    #[test]
    fn stirling_variants() {
        assert_eq!(h_stirling(1, StirlingVariant::AsPrinted), PolyLambda::one());
        assert_eq!(h_stirling(1, StirlingVariant::AsDerived), PolyLambda::one());
        assert_eq!(h_stirling(2, StirlingVariant::AsDerived), poly(&[(3, 2), (-1, 2)]));
        // 1·1·(1−λ) + 2·(1+λ)·1
        assert_eq!(h_stirling(2, StirlingVariant::AsPrinted), poly(&[(3, 1), (1, 1)]));
        assert_ne!(h_stirling(2, StirlingVariant::AsPrinted), h_def(2));
        for n in 1..=25 {
            assert_eq!(h_stirling(n, StirlingVariant::AsDerived), h_def(n), "n={n}");
        }
    }

    #[test]
    fn derangement_form() {
        assert_eq!(h_derangement(1), PolyLambda::one());
        assert_eq!(h_derangement(2), poly(&[(3, 2), (-1, 2)]));
        for n in 1..=20 {
            assert_eq!(h_derangement(n), h_def(n), "n={n}");
        }
    }

    #[test]
    fn difference_sides() {
        assert_eq!(harmonic_difference_sides(1), (PolyLambda::zero(), PolyLambda::zero()));
        assert_eq!(harmonic_difference_sides(2), (PolyLambda::one(), PolyLambda::one()));
        for n in 1..=25 {
            let (l, r) = harmonic_difference_sides(n);
            assert_eq!(l, r, "n={n}");
        }
    }

    #[test]
    fn recurrence() {
        let h = h_def_table(25);
        for n in 1..=25u64 {
            let step = binom_poly(&lambda_plus(-1), n - 1)
                .scale(&(Rational::sign_power(n - 1) * q(1, n as i64)));
            assert_eq!(&h[n as usize] - &h[n as usize - 1], step);
        }
    }
}

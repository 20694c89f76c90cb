//! Generating functions of the degenerate sequences, built from scratch as
//! truncated series.
//!
//! Harmonic-type builders (`gf_h`, `gf_h_order`, `gf_k`, `gf_polylog`) are
//! ordinary generating functions. Stirling, Lah and derangement builders are
//! exponential: multiply the coefficient of `t^n` by `n!` (see
//! [`TruncatedSeries::egf_to_sequence`]) to read off the numbers.

use crate::factorial::{binom_column, deg_falling, factorial_q, lambda_plus};
use crate::poly::PolyLambda;
use crate::rational::Rational;
use crate::series::TruncatedSeries;
use crate::Error;

/// Working order used when a caller has no reason to pick another.
pub const DEFAULT_ORDER: usize = 32;

/// Degenerate exponential `e_λ^x(t) = Σ (x)_{k,λ} t^k / k!`.
pub fn gf_deg_exp(x: &Rational, order: usize) -> TruncatedSeries {
    let mut falling = PolyLambda::one();
    let mut inv_fact = Rational::one();
    TruncatedSeries::from_fn(order, |k| {
        if k > 0 {
            let step = PolyLambda::linear(x.clone(), Rational::from_integer(1 - k as i64));
            falling = &falling * &step;
            inv_fact = inv_fact.clone() / Rational::from_integer(k as i64);
        }
        falling.scale(&inv_fact)
    })
}

/// Degenerate logarithm `log_λ(1 + t) = Σ_{n≥1} binom(λ−1, n−1) t^n / n`.
pub fn gf_deg_log(order: usize) -> TruncatedSeries {
    let col = binom_column(&lambda_plus(-1), order.saturating_sub(1) as u64);
    TruncatedSeries::from_fn(order, |n| match n {
        0 => PolyLambda::zero(),
        _ => col[n - 1].scale(&Rational::new(1, n as i64)),
    })
}

/// `log_λ(1 + t)` obtained independently as the compositional inverse of
/// `e_λ(t) − 1`.
pub fn gf_deg_log_by_reversion(order: usize) -> TruncatedSeries {
    let shifted = &gf_deg_exp(&Rational::one(), order) - &TruncatedSeries::one(order);
    shifted
        .reversion()
        .expect("e_λ(t) − 1 has zero constant term and unit linear term")
}

/// Degenerate polylogarithm `Li_{m,λ}(t)`, whose `t^n` coefficient is
/// `(−1)^{n−1} binom(λ−1, n−1) / n^m`. Any integer `m` is allowed.
pub fn gf_polylog(m: i32, order: usize) -> TruncatedSeries {
    let col = binom_column(&lambda_plus(-1), order.saturating_sub(1) as u64);
    TruncatedSeries::from_fn(order, |n| match n {
        0 => PolyLambda::zero(),
        _ => {
            let weight = Rational::from_integer(n as i64)
                .pow(-m)
                .expect("n ≥ 1")
                * Rational::sign_power(n as u64 - 1);
            col[n - 1].scale(&weight)
        }
    })
}

/// `t / (1 − t)`.
pub fn t_over_one_minus_t(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| if n == 0 { PolyLambda::zero() } else { PolyLambda::one() })
}

/// `Σ H_{n,λ} t^n = (1/(1−t))·log_{−λ}(1 + t/(1−t))`.
pub fn gf_h(order: usize) -> TruncatedSeries {
    let log_neg = gf_deg_log(order).substitute_neg_lambda();
    let inner = log_neg
        .compose(&t_over_one_minus_t(order))
        .expect("t/(1−t) has zero constant term");
    &TruncatedSeries::geometric(order) * &inner
}

fn require_positive(name: &str, m: u32) -> Result<(), Error> {
    if m == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `Σ H^{(m)}_{n,λ} t^n = Li_{m,λ}(t) / (1 − t)`.
pub fn gf_h_order(m: u32, order: usize) -> Result<TruncatedSeries, Error> {
    require_positive("order m", m)?;
    Ok(&TruncatedSeries::geometric(order) * &gf_polylog(m as i32, order))
}

/// `Σ K^{(m)}_{n,λ} t^n = −Li_{m,−λ}(−t/(1−t)) / (1 − t)`.
pub fn gf_k(m: u32, order: usize) -> Result<TruncatedSeries, Error> {
    require_positive("order m", m)?;
    let li_neg = gf_polylog(m as i32, order).substitute_neg_lambda();
    let inner = -t_over_one_minus_t(order);
    let composed = li_neg.compose(&inner)?;
    Ok(-(&TruncatedSeries::geometric(order) * &composed))
}

/// `−log_λ(1 − t)`, which is also `Li_{1,λ}(t)`.
pub fn gf_neg_log_one_minus_t(order: usize) -> TruncatedSeries {
    let inner = -TruncatedSeries::t(order);
    -gf_deg_log(order)
        .compose(&inner)
        .expect("−t has zero constant term")
}

/// EGF `(1/k!)(−log_λ(1 − t))^k` of the unsigned degenerate Stirling numbers
/// of the first kind.
pub fn gf_stirling_unsigned(k: u32, order: usize) -> TruncatedSeries {
    let inv = factorial_q(k as u64).recip().expect("k! is nonzero");
    gf_neg_log_one_minus_t(order).pow(k).scale(&inv)
}

/// EGF `(1/k!)(t/(1−t))^k` of the unsigned Lah numbers.
pub fn gf_lah(k: u32, order: usize) -> TruncatedSeries {
    let inv = factorial_q(k as u64).recip().expect("k! is nonzero");
    t_over_one_minus_t(order).pow(k).scale(&inv)
}

/// EGF `e_λ^{−1}(t)/(1 − t)` of the degenerate derangement numbers.
pub fn gf_deg_derangement(order: usize) -> TruncatedSeries {
    &TruncatedSeries::geometric(order) * &gf_deg_exp(&Rational::from_integer(-1), order)
}

/// Classical `(1/(1−t))·log(1/(1−t)) = Σ H_n t^n`, built from `Σ t^n / n`
/// with no λ involved.
pub fn gf_classical_harmonic(order: usize) -> TruncatedSeries {
    let log = TruncatedSeries::from_fn(order, |n| match n {
        0 => PolyLambda::zero(),
        _ => PolyLambda::constant(Rational::new(1, n as i64)),
    });
    &TruncatedSeries::geometric(order) * &log
}

/// `(x)_{n,λ} / n!` for a single `n`; used by tests and the CLI.
pub fn deg_exp_coefficient(x: &Rational, n: u64) -> PolyLambda {
    deg_falling(x, n).scale(&factorial_q(n).recip().expect("n! is nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(c: &[(i64, i64)]) -> PolyLambda {
        PolyLambda::new(c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn deg_exp_coefficients() {
        let e1 = gf_deg_exp(&q(1, 1), 6);
        assert_eq!(e1.coeff(0), &PolyLambda::one());
        assert_eq!(e1.coeff(2), &poly(&[(1, 2), (-1, 2)]));
        let em1 = gf_deg_exp(&q(-1, 1), 6);
        assert_eq!(em1.coeff(2), &poly(&[(1, 2), (1, 2)]));
        for n in 0..=6 {
            assert_eq!(e1.coeff(n), &deg_exp_coefficient(&q(1, 1), n as u64));
        }
    }

    #[test]
    fn deg_log_coefficients() {
        let l = gf_deg_log(10);
        assert_eq!(l.coeff(0), &PolyLambda::zero());
        assert_eq!(l.coeff(1), &PolyLambda::one());
        assert_eq!(l.coeff(2), &poly(&[(-1, 2), (1, 2)]));
        let limit = l.eval_lambda(&Rational::zero());
        for n in 1..=10 {
            let expected = Rational::sign_power(n as u64 - 1) * q(1, n as i64);
            assert_eq!(limit.coeff(n), &PolyLambda::constant(expected));
        }
    }

    #[test]
    fn deg_log_has_a_dual_construction() {
        assert_eq!(gf_deg_log_by_reversion(16), gf_deg_log(16));
    }

    #[test]
    fn exp_log_round_trip() {
        let n = 16;
        let t = TruncatedSeries::t(n);
        let exp_m1 = &gf_deg_exp(&q(1, 1), n) - &TruncatedSeries::one(n);
        let log = gf_deg_log(n);
        assert_eq!(exp_m1.compose(&log).unwrap(), t);
        assert_eq!(log.compose(&exp_m1).unwrap(), t);
    }

    #[test]
    fn polylog_coefficients() {
        let li1 = gf_polylog(1, 6);
        assert_eq!(li1.coeff(1), &PolyLambda::one());
        assert_eq!(li1.coeff(2), &poly(&[(1, 2), (-1, 2)]));
        assert_eq!(gf_polylog(0, 6).coeff(2), &poly(&[(1, 1), (-1, 1)]));
        assert_eq!(gf_polylog(-3, 6).coeff(1), &PolyLambda::one());
        assert_eq!(gf_polylog(5, 6).coeff(1), &PolyLambda::one());
        assert_eq!(li1, gf_neg_log_one_minus_t(6));
    }

    #[test]
    fn polylog_classical_limit() {
        for m in -2..=4 {
            let limit = gf_polylog(m, 12).eval_lambda(&Rational::zero());
            for n in 1..=12i64 {
                let expected = Rational::from_integer(n).pow(-m).unwrap();
                assert_eq!(limit.coeff(n as usize), &PolyLambda::constant(expected), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn harmonic_builders() {
        let h = gf_h(8);
        assert_eq!(h.coeff(0), &PolyLambda::zero());
        assert_eq!(h.coeff(1), &PolyLambda::one());
        assert_eq!(h.coeff(2), &poly(&[(3, 2), (-1, 2)]));
        assert_eq!(gf_k(1, 8).unwrap(), h);
        assert_eq!(gf_h_order(1, 8).unwrap(), h);
        assert!(gf_k(0, 8).is_err());
        assert!(gf_h_order(0, 8).is_err());
    }

    #[test]
    fn telescoping() {
        let h = gf_h(12);
        let li = gf_polylog(1, 12);
        for n in 1..=12 {
            assert_eq!(li.coeff(n), &(h.coeff(n) - h.coeff(n - 1)));
        }
    }

    #[test]
    fn egf_builders() {
        let s1 = gf_stirling_unsigned(1, 6).egf_to_sequence();
        assert_eq!(s1[2], poly(&[(1, 1), (-1, 1)]));
        assert_eq!(gf_stirling_unsigned(0, 6).egf_to_sequence()[0], PolyLambda::one());
        let lah2 = gf_lah(2, 6).egf_to_sequence();
        assert_eq!(lah2[3], PolyLambda::from(6));
        assert_eq!(gf_lah(2, 6).coeff(3), &PolyLambda::one());
        let d = gf_deg_derangement(6).egf_to_sequence();
        assert_eq!(d[0], PolyLambda::one());
        assert_eq!(d[2], poly(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn classical_harmonic_series() {
        let h = gf_classical_harmonic(5);
        assert_eq!(h.coeff(3), &PolyLambda::constant(q(11, 6)));
        assert_eq!(gf_h(5).eval_lambda(&Rational::zero()), h);
    }
}

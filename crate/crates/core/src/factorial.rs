//! Factorial-type building blocks: integer factorials and binomials, the
//! degenerate falling factorial `(x)_{n,λ}`, unit-step falling and rising
//! factorials of a polynomial, generalized binomial coefficients, and the
//! beta function at positive integers.

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::PolyLambda;
use crate::rational::Rational;
use crate::Error;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn factorial_q(n: u64) -> Rational {
    Rational::from_bigint(factorial(n))
}

pub(crate) fn binomial_q(n: u64, k: u64) -> Rational {
    Rational::from_bigint(binomial(n, k))
}

/// The degenerate falling factorial `x(x − λ)(x − 2λ)···(x − (n−1)λ)`.
///
/// `(x)_{0,λ} = 1`. At λ = 0 this is `x^n`.
pub fn deg_falling(x: &Rational, n: u64) -> PolyLambda {
    (0..n).fold(PolyLambda::one(), |acc, i| {
        acc * PolyLambda::linear(x.clone(), Rational::from_integer(-(i as i64)))
    })
}

/// `p(p − 1)···(p − n + 1)`.
pub fn falling_poly(p: &PolyLambda, n: u64) -> PolyLambda {
    (0..n).fold(PolyLambda::one(), |acc, i| {
        acc * (p - &PolyLambda::from_integer(i as i64))
    })
}

/// `p(p + 1)···(p + n − 1)`.
pub fn rising_poly(p: &PolyLambda, n: u64) -> PolyLambda {
    (0..n).fold(PolyLambda::one(), |acc, i| {
        acc * (p + &PolyLambda::from_integer(i as i64))
    })
}

/// Generalized binomial coefficient `falling_poly(p, k) / k!`.
pub fn binom_poly(p: &PolyLambda, k: u64) -> PolyLambda {
    let f = factorial_q(k).recip().expect("k! is nonzero");
    falling_poly(p, k).scale(&f)
}

/// `[binom(p, 0), binom(p, 1), …, binom(p, kmax)]`, built incrementally.
pub fn binom_column(p: &PolyLambda, kmax: u64) -> Vec<PolyLambda> {
    let mut out = Vec::with_capacity(kmax as usize + 1);
    let mut cur = PolyLambda::one();
    out.push(cur.clone());
    for j in 1..=kmax {
        let step = p - &PolyLambda::from_integer(j as i64 - 1);
        cur = (&cur * &step).scale(&Rational::new(1, j as i64));
        out.push(cur.clone());
    }
    out
}

/// `λ + c` for an integer shift; most binomials in the formulas have this top.
pub fn lambda_plus(c: i64) -> PolyLambda {
    PolyLambda::linear(Rational::from_integer(c), Rational::one())
}

/// `B(a, b) = (a−1)!(b−1)!/(a+b−1)!` for positive integers.
pub fn beta_int(a: u64, b: u64) -> Result<Rational, Error> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!(
            "beta function needs positive integer arguments, got ({a}, {b})"
        )));
    }
    let num = factorial(a - 1) * factorial(b - 1);
    Rational::try_from_bigints(num, factorial(a + b - 1))
}

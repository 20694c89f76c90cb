//! Truncated formal power series in `t` with coefficients in Q[λ].
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `t^0, …, t^N`. Binary operations truncate to the smaller order of their
//! operands; nothing here is lazy.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{convolve_into, PolyLambda};
use crate::rational::Rational;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    // Invariant: len == order + 1.
    coeffs: Vec<PolyLambda>,
}

impl TruncatedSeries {
    /// Builds a series of the given order, zero-padding or truncating `coeffs`.
    pub fn new(order: usize, mut coeffs: Vec<PolyLambda>) -> Self {
        coeffs.resize(order + 1, PolyLambda::zero());
        Self { coeffs }
    }

    /// Builds a series whose coefficients are `f(0), …, f(order)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> PolyLambda) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, PolyLambda::one())
    }

    pub fn constant(order: usize, c: PolyLambda) -> Self {
        Self::new(order, vec![c])
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(order, PolyLambda::one(), 1)
    }

    /// `c·t^k` (zero if `k > order`).
    pub fn monomial(order: usize, c: PolyLambda, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1/(1 − t) = Σ t^n`.
    pub fn geometric(order: usize) -> Self {
        Self::from_fn(order, |_| PolyLambda::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> &PolyLambda {
        static ZERO: PolyLambda = PolyLambda::zero();
        self.coeffs.get(n).unwrap_or(&ZERO)
    }

    pub fn coeffs(&self) -> &[PolyLambda] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order()), self.coeffs.clone())
    }

    pub fn map(&self, f: impl FnMut(&PolyLambda) -> PolyLambda) -> Self {
        Self { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn scale_poly(&self, c: &PolyLambda) -> Self {
        self.map(|p| p * c)
    }

    /// Replaces λ by −λ in every coefficient.
    pub fn substitute_neg_lambda(&self) -> Self {
        self.map(PolyLambda::substitute_neg_lambda)
    }

    /// Specializes λ to a rational value.
    pub fn eval_lambda(&self, x: &Rational) -> Self {
        self.map(|p| PolyLambda::constant(p.eval(x)))
    }

    /// Multiplies the coefficient of `t^n` by `n!`, turning an exponential
    /// generating function into its sequence.
    pub fn egf_to_sequence(&self) -> Vec<PolyLambda> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= &Rational::from_integer(n as i64);
                }
                c.scale(&fact)
            })
            .collect()
    }

    /// Coefficients up to `order` as integer vectors over one shared denominator.
    fn integer_parts(&self, order: usize) -> (Vec<Vec<BigInt>>, BigInt) {
        let coeffs = &self.coeffs[..=order];
        let den = coeffs
            .iter()
            .flat_map(|p| p.coeffs())
            .fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        (coeffs.iter().map(|p| p.numerators_over(&den)).collect(), den)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// `self / rhs` to the common order. The constant term of `rhs` must be a
    /// nonzero rational.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        let b0 = rhs
            .coeff(0)
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NonInvertibleConstantTerm)?;
        let inv = b0.recip()?;
        let order = self.order().min(rhs.order());
        let mut out: Vec<PolyLambda> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                let b = &rhs.coeffs[i];
                if !b.is_zero() {
                    acc = &acc - &(b * &out[n - i]);
                }
            }
            out.push(acc.scale(&inv));
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner(t))`, truncated to the smaller order. `inner` must have a
    /// zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, Error> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Σ f_k·inner^k. inner^k vanishes below t^k, and the product skips
        // zero coefficients, so later powers are cheap.
        let mut out = Self::constant(order, self.coeffs[0].clone());
        let mut power = Self::one(order);
        for k in 1..=order {
            power = &power * &inner;
            let f = &self.coeffs[k];
            if f.is_zero() {
                continue;
            }
            for n in k..=order {
                let term = f * power.coeff(n);
                out.coeffs[n] += &term;
            }
        }
        Ok(out)
    }

    /// Compositional inverse `g` with `f(g(t)) = t = g(f(t))`.
    ///
    /// Requires `f(0) = 0` and a nonzero rational coefficient of `t`.
    /// Coefficients come from Lagrange inversion:
    /// `[t^n] g = (1/n)·[u^{n−1}] (u / f(u))^n`.
    pub fn reversion(&self) -> Result<Self, Error> {
        let order = self.order();
        if !self.coeff(0).is_zero() {
            return Err(Error::ReversionPrecondition("constant term must be zero"));
        }
        match self.coeff(1).as_constant() {
            Some(c) if !c.is_zero() => {}
            _ => {
                return Err(Error::ReversionPrecondition(
                    "linear coefficient must be a nonzero constant",
                ))
            }
        }
        if order == 0 {
            return Ok(Self::zero(0));
        }
        // f(u)/u, known to order N−1.
        let quotient = Self::new(order - 1, self.coeffs[1..].to_vec());
        let h = Self::one(order - 1).checked_div(&quotient)?;
        let mut out = vec![PolyLambda::zero(); order + 1];
        let mut power = h.clone();
        for (n, slot) in out.iter_mut().enumerate().skip(1) {
            let inv_n = Rational::new(1, n as i64);
            *slot = power.coeff(n - 1).scale(&inv_n);
            if n < order {
                power = &power * &h;
            }
        }
        Ok(Self { coeffs: out })
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.map(|p| -p)
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    /// Cauchy product truncated to the smaller order.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let (a, da) = self.integer_parts(order);
        let (b, db) = rhs.integer_parts(order);
        let width = |v: &[Vec<BigInt>]| v.iter().map(Vec::len).max().unwrap_or(0);
        let len = (width(&a) + width(&b)).saturating_sub(1);
        let mut acc = vec![vec![BigInt::zero(); len]; order + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_empty() {
                continue;
            }
            for (j, y) in b.iter().take(order + 1 - i).enumerate() {
                if !y.is_empty() {
                    convolve_into(&mut acc[i + j], x, y);
                }
            }
        }
        let den = da * db;
        let coeffs = acc.into_iter().map(|c| PolyLambda::from_integer_parts(c, &den)).collect();
        TruncatedSeries { coeffs }
    }
}

macro_rules! owned_series_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$method(rhs)
            }
        }
    };
}

owned_series_binop!(Add, add);
owned_series_binop!(Sub, sub);
owned_series_binop!(Mul, mul);

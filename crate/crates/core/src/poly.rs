//! Dense polynomials in the formal parameter λ with rational coefficients.
//!
//! Every degenerate sequence in this crate is a polynomial in λ, so values are
//! kept symbolic and identities are checked as polynomial equality. The
//! representation is canonical (no trailing zero coefficients), which makes
//! the derived `PartialEq` structural equality in Q[λ].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::rational::Rational;
use crate::Error;

/// A polynomial `c0 + c1·λ + c2·λ² + …` over Q.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyLambda {
    coeffs: Vec<Rational>,
}

/// How the indeterminate and operators are spelled when rendering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RenderStyle {
    /// `3/2 − 1/2·λ + λ²`
    #[default]
    Unicode,
    /// `3/2 - 1/2*L + L^2`
    Ascii,
}

impl PolyLambda {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub const fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(n))
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c·λ^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `a + b·λ`, a shorthand used all over the formulas.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `λ^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation at `λ = x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at λ = 0, the classical limit.
    pub fn eval_at_zero(&self) -> Rational {
        self.coeff(0)
    }

    /// Replaces λ by −λ.
    pub fn substitute_neg_lambda(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn checked_div_rational(&self, c: &Rational) -> Result<Self, Error> {
        Ok(self.scale(&c.recip()?))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Canonical text form, see [`RenderStyle`].
    pub fn render(&self, style: RenderStyle) -> String {
        let (minus, dot, var) = match style {
            RenderStyle::Unicode => ("−", "·", "λ"),
            RenderStyle::Ascii => ("-", "*", "L"),
        };
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push_str(minus);
                }
            } else {
                out.push(' ');
                out.push_str(if c.is_negative() { minus } else { "+" });
                out.push(' ');
            }
            let mag = c.abs();
            if i == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push_str(dot);
            }
            out.push_str(var);
            if i > 1 {
                match style {
                    RenderStyle::Unicode => out.push_str(&superscript(i)),
                    RenderStyle::Ascii => {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().bytes().map(|b| DIGITS[(b - b'0') as usize]).collect()
}

impl PolyLambda {
    /// `(nums, den)` with `self = nums / den` and `den` the lcm of the
    /// coefficient denominators.
    pub(crate) fn integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        (self.numerators_over(&den), den)
    }

    /// Numerators of the coefficients over `den`, which every coefficient
    /// denominator must divide.
    pub(crate) fn numerators_over(&self, den: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.numer() * (den / c.denom())).collect()
    }

    pub(crate) fn from_integer_parts(nums: Vec<BigInt>, den: &BigInt) -> Self {
        PolyLambda::new(
            nums.into_iter()
                .map(|n| Rational::try_from_bigints(n, den.clone()).expect("nonzero denominator"))
                .collect(),
        )
    }
}

/// `acc[i + j] += a[i]·b[j]`; integer arithmetic avoids a gcd per term.
pub(crate) fn convolve_into(acc: &mut [BigInt], a: &[BigInt], b: &[BigInt]) {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
}

impl fmt::Display for PolyLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderStyle::Unicode))
    }
}

/// Serialized as `{"text": <canonical rendering>, "coeffs": [["num", "den"], …]}`
/// with coefficients in ascending powers and integers as decimal strings.
impl Serialize for PolyLambda {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<[String; 2]> = self
            .coeffs
            .iter()
            .map(|c| [c.numer().to_string(), c.denom().to_string()])
            .collect();
        let mut st = serializer.serialize_struct("PolyLambda", 2)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl From<Rational> for PolyLambda {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for PolyLambda {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Add<&PolyLambda> for &PolyLambda {
    type Output = PolyLambda;
    fn add(self, rhs: &PolyLambda) -> PolyLambda {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        PolyLambda::new(coeffs)
    }
}

impl AddAssign<&PolyLambda> for PolyLambda {
    fn add_assign(&mut self, rhs: &PolyLambda) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &PolyLambda {
    type Output = PolyLambda;
    fn neg(self) -> PolyLambda {
        PolyLambda { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for PolyLambda {
    type Output = PolyLambda;
    fn neg(self) -> PolyLambda {
        -&self
    }
}

impl Sub<&PolyLambda> for &PolyLambda {
    type Output = PolyLambda;
    fn sub(self, rhs: &PolyLambda) -> PolyLambda {
        self + &(-rhs)
    }
}

impl Mul<&PolyLambda> for &PolyLambda {
    type Output = PolyLambda;
    fn mul(self, rhs: &PolyLambda) -> PolyLambda {
        if self.is_zero() || rhs.is_zero() {
            return PolyLambda::zero();
        }
        let (a, da) = self.integer_parts();
        let (b, db) = rhs.integer_parts();
        let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
        convolve_into(&mut acc, &a, &b);
        PolyLambda::from_integer_parts(acc, &(da * db))
    }
}

impl Mul<&Rational> for &PolyLambda {
    type Output = PolyLambda;
    fn mul(self, rhs: &Rational) -> PolyLambda {
        self.scale(rhs)
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<PolyLambda> for PolyLambda {
            type Output = PolyLambda;
            fn $method(self, rhs: PolyLambda) -> PolyLambda {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&PolyLambda> for PolyLambda {
            type Output = PolyLambda;
            fn $method(self, rhs: &PolyLambda) -> PolyLambda {
                (&self).$method(rhs)
            }
        }
        impl $Trait<PolyLambda> for &PolyLambda {
            type Output = PolyLambda;
            fn $method(self, rhs: PolyLambda) -> PolyLambda {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Mul<Rational> for PolyLambda {
    type Output = PolyLambda;
    fn mul(self, rhs: Rational) -> PolyLambda {
        self.scale(&rhs)
    }
}

impl Sum for PolyLambda {
    fn sum<I: Iterator<Item = PolyLambda>>(iter: I) -> PolyLambda {
        iter.fold(PolyLambda::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a PolyLambda> for PolyLambda {
    fn sum<I: Iterator<Item = &'a PolyLambda>>(iter: I) -> PolyLambda {
        iter.fold(PolyLambda::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

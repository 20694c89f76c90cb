//! Exact degenerate harmonic numbers and their relatives.
//!
//! Every degenerate sequence here is a polynomial in the parameter λ with
//! rational coefficients. Values are computed symbolically as [`PolyLambda`]
//! and identities between them are checked as exact polynomial equality,
//! with truncated generating functions ([`TruncatedSeries`]) as an
//! independent route to the same numbers.
//!
//! ```
//! use degharm::sequences::{h_def, h_binom};
//!
//! let h3 = h_def(3);
//! assert_eq!(h3.to_string(), "11/6 − λ + 1/6·λ²");
//! assert_eq!(h_binom(3), h3);
//! ```
//!
//! The `book/` directory at the repository root walks through the
//! mathematics; its code samples are compiled as doctests of this crate.

mod error;
pub mod factorial;
pub mod gf;
pub mod poly;
pub mod rational;
pub mod sequences;
pub mod series;
pub mod verify;

pub use error::Error;
pub use poly::{PolyLambda, RenderStyle};
pub use rational::Rational;
pub use series::TruncatedSeries;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/power-series.md")]
    mod power_series {}
    #[doc = include_str!("../../../book/src/harmonic.md")]
    mod harmonic {}
    #[doc = include_str!("../../../book/src/k-numbers.md")]
    mod k_numbers {}
    #[doc = include_str!("../../../book/src/stirling-derangement.md")]
    mod stirling_derangement {}
    #[doc = include_str!("../../../book/src/transforms.md")]
    mod transforms {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}

//! Exact arithmetic and certification routines for Speyer's g-polynomials of
//! uniform matroids `U(n, d)` and their generating polynomials
//! `h_n(x; t) = sum_d g_{n,d}(t) x^d`.
//!
//! Everything except the normality diagnostics in [`stats`] runs over exact
//! rationals, so every check in this crate is a certificate at the concrete
//! `(n, t)` it was run for.

pub mod error;
pub mod exactnum;
pub mod gamma;
pub mod gpoly;
pub mod laguerre;
pub mod poly;
pub mod realroots;
pub mod report;
pub mod seqineq;
pub mod stats;

pub use error::{Error, Result};
pub use exactnum::{binomial, parse_rational, rational, BigInt, Rational};
pub use poly::{BiPoly, UniPoly};
pub use report::{Entry, VerificationReport};

//! Arbitrary-precision integers and rationals plus the binomial coefficient.
//!
//! [`BigInt`] and [`Rational`] are the `num` crate types; `Ratio` already
//! normalizes on construction (positive denominator, coprime parts), which
//! makes structural equality coincide with numeric equality.

pub use num_bigint::BigInt;
use num_bigint::Sign;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Normalized `p/q`.
pub fn rational(p: i64, q: i64) -> Result<Rational> {
    if q == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
///
/// Computed by the running product `C(n-k+j, j)`, each partial product being
/// an integer, so no factorial is ever materialized.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Ok(BigInt::zero());
    }
    if n < 0 {
        return Err(Error::NegativeBinomial { n, k });
    }
    if k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc *= BigInt::from(n - k + j);
        acc = acc.div_floor(&BigInt::from(j));
    }
    Ok(acc)
}

/// Binomial for indices already known to be in the nonnegative domain.
pub(crate) fn binom_u(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    binomial(n, k).expect("nonnegative n")
}

pub fn sign(v: &Rational) -> i8 {
    match v.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

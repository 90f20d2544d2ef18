//! Integer polynomials up to positive scaling.
//!
//! Sturm chains and Euclidean remainder sequences only care about each
//! member up to a positive constant, so they run on primitive integer
//! polynomials here instead of on rationals.

use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::exactnum::{BigInt, Rational};

/// Coefficients lowest first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly(pub Vec<BigInt>);

fn sign_of(v: &BigInt) -> i8 {
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl IntPoly {
    fn trim(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        IntPoly(v)
    }

    /// Positive rational multiple of `p` with coprime integer coefficients.
    pub fn primitive_of(p: &UniPoly) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly(v).primitive()
    }

    pub fn to_uni(&self) -> UniPoly {
        UniPoly::from_coeffs(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    /// Divides out the (positive) gcd of the coefficients.
    pub fn primitive(self) -> Self {
        let g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return self;
        }
        IntPoly(self.0.into_iter().map(|c| c / &g).collect())
    }

    pub fn neg(self) -> Self {
        IntPoly(self.0.into_iter().map(|c| -c).collect())
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPoly::trim(v)
    }

    /// A positive multiple of the remainder of `self` by `d` (`d` nonzero).
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.leading().unwrap();
        let lc_abs = lc.abs();
        let lc_neg = lc.is_negative();
        let mut r = self.0.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let mut top = r.pop().unwrap();
            if lc_neg {
                top = -top;
            }
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            for (j, dc) in d.0[..dd].iter().enumerate() {
                r[k + j] -= &top * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly(r)
    }

    /// Sign of `p(v)`.
    pub fn sign_at(&self, v: &Rational) -> i8 {
        let Some(deg) = self.degree() else { return 0 };
        let (p, q) = (v.numer(), v.denom());
        // q^deg * p(p/q), evaluated homogeneously; q > 0 keeps the sign.
        let mut acc = self.0[deg].clone();
        let mut qpow = BigInt::one();
        for i in (0..deg).rev() {
            qpow *= q;
            acc = acc * p + &self.0[i] * &qpow;
        }
        sign_of(&acc)
    }

    /// Sign of `p(x)` as `x -> +inf` (or `-inf` when `positive` is false).
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        let Some(deg) = self.degree() else { return 0 };
        let s = sign_of(&self.0[deg]);
        if !positive && deg % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

/// Monic gcd by the primitive remainder sequence.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (a.clone().primitive(), b.clone().primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive();
        a = b;
        b = r;
    }
    a
}

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::int::{self, IntPoly};
use super::render::{join_terms, TermOrder};
use super::forward_binop;
use crate::error::{Error, Result};
use crate::exactnum::{int, parse_rational, Rational};

/// Dense univariate polynomial over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// Builds from coefficients lowest first; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::from_coeffs(v.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// `order`-fold formal derivative; order 0 is the identity.
    pub fn derivative(&self, order: usize) -> Self {
        if order >= self.coeffs.len() {
            return Self::zero();
        }
        let v = (order..self.coeffs.len())
            .map(|k| {
                let falling: i64 = ((k - order + 1)..=k).map(|j| j as i64).product();
                &self.coeffs[k] * int(falling)
            })
            .collect();
        Self::from_coeffs(v)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let inv = d.leading().unwrap().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let top = r.pop().unwrap() * &inv;
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                r[k + j] -= &top * dc;
            }
            q[k] = top;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = int::gcd(&IntPoly::primitive_of(self), &IntPoly::primitive_of(other));
        Ok(g.to_uni().monic())
    }

    /// Yun's squarefree decomposition: entry `k` is the monic product of the
    /// distinct irreducible factors of multiplicity exactly `k + 1`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<UniPoly>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative(1);
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact(&a0)?;
        let mut c = df.div_exact(&a0)?;
        let mut d = &c - &b.derivative(1);
        while b.degree() > Some(0) {
            let a = b.gcd(&d)?;
            b = b.div_exact(&a)?;
            c = d.div_exact(&a)?;
            d = &c - &b.derivative(1);
            out.push(a);
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        Ok(out)
    }

    /// Monic `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative(1))?;
        Ok(self.div_exact(&g)?.monic())
    }

    /// Monic product of the squarefree factors of odd multiplicity.
    pub fn squarefree_odd_part(&self) -> Result<UniPoly> {
        let parts = self.squarefree_decomposition()?;
        Ok(parts
            .iter()
            .step_by(2)
            .fold(UniPoly::one(), |acc, p| &acc * p))
    }

    /// `x^darga * p(1/x)`.
    pub fn reverse(&self, darga: usize) -> Result<UniPoly> {
        let deg = self.degree().unwrap_or(0);
        if darga < deg {
            return Err(Error::DargaTooSmall { darga, degree: deg });
        }
        let v = (0..=darga).map(|k| self.coeff(darga - k)).collect();
        Ok(Self::from_coeffs(v))
    }

    pub fn render(&self, var: &str, order: TermOrder) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), vec![(var, k)]));
        match order {
            TermOrder::Ascending => join_terms(terms),
            TermOrder::Descending => join_terms(terms.rev()),
        }
    }

    fn add_impl(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
        let mut v = long.coeffs.clone();
        for (x, y) in v.iter_mut().zip(&short.coeffs) {
            *x += y;
        }
        Self::from_coeffs(v)
    }

    fn sub_impl(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let v = (0..n)
            .map(|k| match (a.coeffs.get(k), b.coeffs.get(k)) {
                (Some(x), Some(y)) => x - y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) => -y,
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(v)
    }

    fn mul_impl(a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        Self::from_coeffs(v)
    }
}

forward_binop!(UniPoly, Add, add, UniPoly::add_impl);
forward_binop!(UniPoly, Sub, sub, UniPoly::sub_impl);
forward_binop!(UniPoly, Mul, mul, UniPoly::mul_impl);

impl std::ops::Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", TermOrder::Ascending))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

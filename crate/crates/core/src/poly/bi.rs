use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::forward_binop;
use super::render::{join_terms, Term};
use super::UniPoly;
use crate::exactnum::{int, Rational};

/// Polynomial in `x` with coefficients in `Q[t]`, lowest `x`-power first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<UniPoly>", into = "Vec<UniPoly>")]
pub struct BiPoly {
    xcoeffs: Vec<UniPoly>,
}

impl From<Vec<UniPoly>> for BiPoly {
    fn from(v: Vec<UniPoly>) -> Self {
        BiPoly::from_xcoeffs(v)
    }
}

impl From<BiPoly> for Vec<UniPoly> {
    fn from(p: BiPoly) -> Self {
        p.xcoeffs
    }
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { xcoeffs: Vec::new() }
    }

    pub fn from_xcoeffs(mut xcoeffs: Vec<UniPoly>) -> Self {
        while xcoeffs.last().is_some_and(UniPoly::is_zero) {
            xcoeffs.pop();
        }
        BiPoly { xcoeffs }
    }

    /// Sum of `c * x^i * t^j` over `(i, j, c)`.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let mut acc = BiPoly::zero();
        for &(i, j, c) in terms {
            let mut v = vec![UniPoly::zero(); i + 1];
            v[i] = UniPoly::monomial(int(c), j);
            acc = acc + BiPoly::from_xcoeffs(v);
        }
        acc
    }

    /// A polynomial in `x` with `t`-free coefficients.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_xcoeffs(p.coeffs().iter().cloned().map(UniPoly::constant).collect())
    }

    /// A polynomial in `t` alone (x-degree 0).
    pub fn from_t_poly(p: &UniPoly) -> Self {
        Self::from_xcoeffs(vec![p.clone()])
    }

    pub fn xcoeffs(&self) -> &[UniPoly] {
        &self.xcoeffs
    }

    /// Coefficient of `x^k` as a polynomial in `t`.
    pub fn x_coeff(&self, k: usize) -> UniPoly {
        self.xcoeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.xcoeffs.is_empty()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.xcoeffs.len().checked_sub(1)
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.xcoeffs.iter().filter_map(UniPoly::degree).max()
    }

    pub fn leading_x_coeff(&self) -> Option<&UniPoly> {
        self.xcoeffs.last()
    }

    /// `order`-fold derivative in `x`.
    pub fn derivative_x(&self, order: usize) -> Self {
        if order >= self.xcoeffs.len() {
            return Self::zero();
        }
        let v = (order..self.xcoeffs.len())
            .map(|k| {
                let falling: i64 = ((k - order + 1)..=k).map(|j| j as i64).product();
                self.xcoeffs[k].scale(&int(falling))
            })
            .collect();
        Self::from_xcoeffs(v)
    }

    /// Substitutes `x = v`, leaving a polynomial in `t`.
    pub fn eval_x(&self, v: &Rational) -> UniPoly {
        self.xcoeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| acc.scale(v) + c)
    }

    /// Substitutes `t = v`, leaving a polynomial in `x`.
    pub fn eval_t(&self, v: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.xcoeffs.iter().map(|c| c.eval(v)).collect())
    }

    /// Multiplies every coefficient by a polynomial in `t`.
    pub fn scale_t(&self, c: &UniPoly) -> Self {
        Self::from_xcoeffs(self.xcoeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_x(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![UniPoly::zero(); k];
        v.extend(self.xcoeffs.iter().cloned());
        BiPoly { xcoeffs: v }
    }

    /// `x^darga * p(1/x; t)`; `None` when `darga` is below the x-degree.
    pub fn reverse_x(&self, darga: usize) -> Option<Self> {
        if darga < self.x_degree().unwrap_or(0) {
            return None;
        }
        Some(Self::from_xcoeffs(
            (0..=darga).map(|k| self.x_coeff(darga - k)).collect(),
        ))
    }

    fn add_impl(a: &BiPoly, b: &BiPoly) -> BiPoly {
        let n = a.xcoeffs.len().max(b.xcoeffs.len());
        Self::from_xcoeffs((0..n).map(|k| a.x_coeff(k) + b.x_coeff(k)).collect())
    }

    fn sub_impl(a: &BiPoly, b: &BiPoly) -> BiPoly {
        let n = a.xcoeffs.len().max(b.xcoeffs.len());
        Self::from_xcoeffs((0..n).map(|k| a.x_coeff(k) - b.x_coeff(k)).collect())
    }

    fn mul_impl(a: &BiPoly, b: &BiPoly) -> BiPoly {
        if a.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let mut v = vec![UniPoly::zero(); a.xcoeffs.len() + b.xcoeffs.len() - 1];
        for (i, x) in a.xcoeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.xcoeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + x * y;
            }
        }
        Self::from_xcoeffs(v)
    }
}

forward_binop!(BiPoly, Add, add, BiPoly::add_impl);
forward_binop!(BiPoly, Sub, sub, BiPoly::sub_impl);
forward_binop!(BiPoly, Mul, mul, BiPoly::mul_impl);

impl fmt::Display for BiPoly {
    /// `x` ascending; within one power of `x`, `t` descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<Term<'_>> = Vec::new();
        for (i, c) in self.xcoeffs.iter().enumerate() {
            for (j, a) in c.coeffs().iter().enumerate().rev() {
                if !a.is_zero() {
                    terms.push((a.clone(), vec![("t", j), ("x", i)]));
                }
            }
        }
        f.write_str(&join_terms(terms))
    }
}

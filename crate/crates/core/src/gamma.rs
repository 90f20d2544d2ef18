//! Expansion of palindromic polynomials in the basis `x^i (1+x)^(m-2i)`.
//!
//! For `h_n` the coefficients satisfy
//! `gamma_{n,i} = gamma_{n-1,i} + t gamma_{n-2,i-1}` with
//! `gamma_{2,.} = gamma_{3,.} = [0, t]`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::gpoly::h_recur;
use crate::poly::{BiPoly, UniPoly};

/// `gammas[i]` is the coefficient (a polynomial in `t`) of `x^i (1+x)^(darga-2i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "Vec<UniPoly>")]
pub struct GammaVector {
    darga: usize,
    gammas: Vec<UniPoly>,
}

impl From<GammaVector> for Vec<UniPoly> {
    fn from(g: GammaVector) -> Self {
        g.gammas
    }
}

impl GammaVector {
    pub fn darga(&self) -> usize {
        self.darga
    }

    pub fn gammas(&self) -> &[UniPoly] {
        &self.gammas
    }

    pub fn at(&self, t: &Rational) -> Vec<Rational> {
        self.gammas.iter().map(|g| g.eval(t)).collect()
    }

    /// `sum_i gamma_i x^i (1+x)^(darga-2i)`.
    pub fn reconstruct(&self) -> BiPoly {
        self.gammas
            .iter()
            .enumerate()
            .fold(BiPoly::zero(), |acc, (i, g)| acc + basis(self.darga, i).scale_t(g))
    }
}

fn basis(darga: usize, i: usize) -> BiPoly {
    let one_plus_x = UniPoly::from_ints(&[1, 1]);
    BiPoly::from_x_poly(&one_plus_x.pow((darga - 2 * i) as u32).shift(i))
}

pub fn is_palindromic(f: &BiPoly, darga: usize) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match f.reverse_x(darga) {
        Some(r) => Ok(&r == f),
        None => Err(Error::DargaTooSmall {
            darga,
            degree: f.x_degree().unwrap_or(0),
        }),
    }
}

pub fn is_palindromic_uni(f: &UniPoly, darga: usize) -> Result<bool> {
    is_palindromic(&BiPoly::from_x_poly(f), darga)
}

/// Lowest-exponent peeling: `gamma_i` is read off as the `x^i` coefficient of
/// the running residual, which is then reduced by `gamma_i x^i (1+x)^(darga-2i)`.
pub fn gamma_expand(f: &BiPoly, darga: usize) -> Result<GammaVector> {
    if !is_palindromic(f, darga)? {
        return Err(Error::NotPalindromic(darga));
    }
    let mut residual = f.clone();
    let mut gammas = Vec::with_capacity(darga / 2 + 1);
    for i in 0..=darga / 2 {
        let g = residual.x_coeff(i);
        residual = residual - basis(darga, i).scale_t(&g);
        gammas.push(g);
    }
    if !residual.is_zero() {
        return Err(Error::Internal(format!("gamma expansion left residual {residual}")));
    }
    Ok(GammaVector { darga, gammas })
}

/// `gamma_{n,.}` from the recurrence alone.
pub fn gamma_recur(n: i64) -> Result<GammaVector> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    // both seeds are [0, t]
    let seed = vec![UniPoly::zero(), UniPoly::x()];
    let t = UniPoly::x();
    let (mut prev, mut cur) = (seed.clone(), seed);
    let get = |v: &[UniPoly], i: usize| v.get(i).cloned().unwrap_or_else(UniPoly::zero);
    let mut m = 3;
    while m < n {
        m += 1;
        let len = m as usize / 2 + 1;
        let next: Vec<UniPoly> = (0..len)
            .map(|i| {
                let shifted = if i == 0 { UniPoly::zero() } else { &get(&prev, i - 1) * &t };
                get(&cur, i) + shifted
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(GammaVector {
        darga: n as usize,
        gammas: cur,
    })
}

/// Every `gamma_{n,i}(t) >= 0`.
pub fn gamma_positive(n: i64, t: &Rational) -> Result<bool> {
    Ok(gamma_recur(n)?.at(t).iter().all(|g| !g.is_negative()))
}

/// `h_n(-1; t)`.
pub fn h_at_minus_one(n: i64) -> Result<UniPoly> {
    Ok(h_recur(n)?.eval_x(&int(-1)))
}

/// `0` for odd `n`, `(-1)^(n/2) gamma_{n,n/2}` for even `n`.
pub fn h_at_minus_one_predicted(g: &GammaVector) -> UniPoly {
    let m = g.darga;
    if m % 2 == 1 {
        return UniPoly::zero();
    }
    let top = g.gammas.get(m / 2).cloned().unwrap_or_else(UniPoly::zero);
    if (m / 2) % 2 == 1 {
        -top
    } else {
        top
    }
}

/// `gamma_{n,i}(1) == C(n-i-1, i-1)` for every `i`, with `C(., -1) = 0`.
pub fn binomial_specialization_holds(g: &GammaVector) -> bool {
    let n = g.darga as i64;
    g.at(&int(1)).iter().enumerate().all(|(i, v)| {
        let i = i as i64;
        let want = crate::exactnum::binomial(n - i - 1, i - 1).unwrap_or_else(|_| Zero::zero());
        *v == Rational::from_integer(want)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use crate::gpoly::h_closed;

    fn tp(v: &[i64]) -> UniPoly {
        UniPoly::from_ints(v)
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&h_closed(4).unwrap(), 4).unwrap());
        assert!(!is_palindromic_uni(&tp(&[1, 2]), 1).unwrap());
        assert!(is_palindromic_uni(&UniPoly::x(), 2).unwrap());
        assert!(is_palindromic_uni(&tp(&[0, 1, 1]), 3).unwrap());
        assert!(matches!(
            is_palindromic_uni(&tp(&[1, 2, 1]), 1),
            Err(Error::DargaTooSmall { darga: 1, degree: 2 })
        ));
        assert!(is_palindromic_uni(&UniPoly::zero(), 2).is_err());
    }

    #[test]
    fn expansion_examples() {
        let g4 = gamma_expand(&h_closed(4).unwrap(), 4).unwrap();
        assert_eq!(g4.gammas(), &[tp(&[]), tp(&[0, 1]), tp(&[0, 0, 1])]);
        let g2 = gamma_expand(&h_closed(2).unwrap(), 2).unwrap();
        assert_eq!(g2.gammas(), &[tp(&[]), tp(&[0, 1])]);
        let cube = BiPoly::from_x_poly(&tp(&[1, 3, 3, 1]));
        assert_eq!(gamma_expand(&cube, 3).unwrap().gammas(), &[tp(&[1]), tp(&[])]);
        assert!(matches!(
            gamma_expand(&BiPoly::from_x_poly(&tp(&[1, 2])), 1),
            Err(Error::NotPalindromic(1))
        ));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(gamma_recur(4).unwrap().gammas(), &[tp(&[]), tp(&[0, 1]), tp(&[0, 0, 1])]);
        assert_eq!(gamma_recur(5).unwrap().gammas(), &[tp(&[]), tp(&[0, 1]), tp(&[0, 0, 2])]);
        assert_eq!(gamma_recur(3).unwrap().gammas(), &[tp(&[]), tp(&[0, 1])]);
        assert_eq!(gamma_recur(2).unwrap().darga(), 2);
        assert!(gamma_recur(1).is_err());
    }

    #[test]
    fn recurrence_matches_expansion() {
        for n in 2..=24 {
            let h = h_closed(n).unwrap();
            let e = gamma_expand(&h, n as usize).unwrap();
            assert_eq!(gamma_recur(n).unwrap(), e, "n={n}");
            assert_eq!(e.reconstruct(), h);
            assert!(binomial_specialization_holds(&e));
        }
    }

    #[test]
    fn positivity_examples() {
        assert!(gamma_positive(10, &rational(1, 3).unwrap()).unwrap());
        assert_eq!(gamma_recur(6).unwrap().at(&int(1)), vec![int(0), int(1), int(3), int(1)]);
        assert!(gamma_positive(6, &int(1)).unwrap());
        assert!(!gamma_positive(4, &int(-1)).unwrap());
    }

    #[test]
    fn minus_one_parity() {
        assert_eq!(h_at_minus_one(3).unwrap(), UniPoly::zero());
        assert_eq!(h_at_minus_one(4).unwrap(), tp(&[0, 0, 1]));
        assert_eq!(h_at_minus_one(2).unwrap(), tp(&[0, -1]));
        for n in 2..=20 {
            let g = gamma_recur(n).unwrap();
            assert_eq!(h_at_minus_one(n).unwrap(), h_at_minus_one_predicted(&g));
        }
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&gamma_recur(4).unwrap()).unwrap();
        assert_eq!(s, r#"[[],["0","1"],["0","0","1"]]"#);
    }
}

//! Inequalities on finite sequences: the operator
//! `L(a)_k = a_k^2 - a_{k-1} a_{k+1}` (zero padding at both ends), k-fold
//! log-concavity, and the higher-order Turán inequality.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::gpoly::h_specialized;
use crate::poly::UniPoly;

/// A finite rational sequence; entries outside the stored range read as 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RSeq {
    #[serde(with = "rational_strings")]
    values: Vec<Rational>,
}

mod rational_strings {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactnum::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl From<Vec<Rational>> for RSeq {
    fn from(values: Vec<Rational>) -> Self {
        RSeq { values }
    }
}

impl RSeq {
    pub fn from_ints(v: &[i64]) -> Self {
        v.iter().map(|&c| int(c)).collect::<Vec<_>>().into()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn at(&self, k: isize) -> Rational {
        if k < 0 {
            return Rational::zero();
        }
        self.values.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }
}

pub fn l_operator(s: &RSeq) -> RSeq {
    (0..s.len() as isize)
        .map(|k| s.at(k) * s.at(k) - s.at(k - 1) * s.at(k + 1))
        .collect::<Vec<_>>()
        .into()
}

/// First place where an iterate of the operator goes negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LcFailure {
    pub depth: usize,
    pub index: usize,
}

/// Checks `L^j(s) >= 0` entrywise for `1 <= j <= k`.
///
/// Sequences of length at most 2 are accepted as vacuously log-concave.
pub fn is_k_log_concave(s: &RSeq, k: usize) -> Result<std::result::Result<(), LcFailure>> {
    if k < 1 {
        return Err(Error::Domain("log-concavity depth must be >= 1".into()));
    }
    if s.len() <= 2 {
        return Ok(Ok(()));
    }
    let mut cur = s.clone();
    for depth in 1..=k {
        cur = l_operator(&cur);
        if let Some(index) = cur.values.iter().position(|v| v.is_negative()) {
            return Ok(Err(LcFailure { depth, index }));
        }
    }
    Ok(Ok(()))
}

/// `4 (a_n^2 - a_{n-1} a_{n+1})(a_{n+1}^2 - a_n a_{n+2}) - (a_n a_{n+1} - a_{n-1} a_{n+2})^2`
/// for the window starting at `n - 1`.
pub fn turan_window(s: &RSeq, n: usize) -> Rational {
    let a = |k: usize| &s.values[k];
    let (p, c, q, r) = (a(n - 1), a(n), a(n + 1), a(n + 2));
    let left = (c * c - p * q) * (q * q - c * r) * int(4);
    let mixed = c * q - p * r;
    left - &mixed * &mixed
}

/// Checks every full 4-window; on failure returns the offending center `n`.
pub fn higher_turan(s: &RSeq) -> Result<std::result::Result<(), usize>> {
    if s.len() < 4 {
        return Err(Error::Domain(format!(
            "higher-order Turán needs at least 4 terms, got {}",
            s.len()
        )));
    }
    for n in 1..=s.len() - 3 {
        if turan_window(s, n).is_negative() {
            return Ok(Err(n));
        }
    }
    Ok(Ok(()))
}

/// `[g_{n,1}(t), ..., g_{n,n-1}(t)]`.
pub fn g_sequence(n: i64, t: &Rational) -> Result<RSeq> {
    let h = h_specialized(n, t)?;
    Ok((1..n as usize).map(|d| h.coeff(d)).collect::<Vec<_>>().into())
}

/// Polynomial whose coefficients are `L` applied to those of `f`.
pub fn l_transform_poly(f: &UniPoly) -> UniPoly {
    let s: RSeq = f.coeffs().to_vec().into();
    UniPoly::from_coeffs(l_operator(&s).values)
}

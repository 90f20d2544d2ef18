//! g-polynomials of uniform matroids and their generating polynomials.
//!
//! `g_{n,d}(t) = sum_i C(n-i-1, d-i) C(n-d-1, i-1) t^i` and
//! `h_n(x; t) = sum_{d=1}^{n-1} g_{n,d}(t) x^d`. The three-term recurrence
//! `h_{n+2} = (1+x) h_{n+1} + t x h_n` and the two differential recurrences
//! in `x` are checked here as exact bivariate identities, one `n` at a time.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{binom_u, BigInt, Rational};
use crate::poly::{BiPoly, UniPoly};
use crate::report::{Entry, VerificationReport};

/// Uniform matroid `U(n, d)`: `n >= 2`, `1 <= d <= n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GIndex {
    n: i64,
    d: i64,
}

impl GIndex {
    pub fn new(n: i64, d: i64) -> Result<Self> {
        if n < 2 || d < 1 || d > n - 1 {
            return Err(Error::InvalidIndex { n, d });
        }
        Ok(GIndex { n, d })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The dual index `(n, n - d)`.
    pub fn dual(&self) -> Self {
        GIndex { n: self.n, d: self.n - self.d }
    }
}

fn require_n(n: i64, min: i64) -> Result<()> {
    if n < min {
        return Err(Error::NTooSmall { n, min });
    }
    Ok(())
}

/// Coefficient of `t^i` in `g_{n,d}`.
pub fn s_coeff(idx: GIndex, i: i64) -> Result<BigInt> {
    if i < 1 {
        return Err(Error::Domain(format!("coefficient index must be >= 1, got {i}")));
    }
    let (n, d) = (idx.n, idx.d);
    if i > d.min(n - d) {
        return Ok(BigInt::zero());
    }
    Ok(binom_u(n - i - 1, d - i) * binom_u(n - d - 1, i - 1))
}

pub fn g_poly(idx: GIndex) -> UniPoly {
    let top = idx.d.min(idx.n - idx.d) as usize;
    let mut v = vec![Rational::zero(); top + 1];
    for (i, slot) in v.iter_mut().enumerate().skip(1) {
        *slot = Rational::from_integer(s_coeff(idx, i as i64).expect("i >= 1"));
    }
    UniPoly::from_coeffs(v)
}

/// `h_n` summed directly from the closed form of each `g_{n,d}`.
pub fn h_closed(n: i64) -> Result<BiPoly> {
    require_n(n, 2)?;
    let mut v = vec![UniPoly::zero()];
    for d in 1..n {
        v.push(g_poly(GIndex { n, d }));
    }
    Ok(BiPoly::from_xcoeffs(v))
}

fn seed(n: i64) -> BiPoly {
    match n {
        2 => BiPoly::from_terms(&[(1, 1, 1)]),
        3 => BiPoly::from_terms(&[(1, 1, 1), (2, 1, 1)]),
        _ => unreachable!("seeds are n = 2, 3"),
    }
}

/// `(1 + x) * later + t x * earlier`.
fn step(earlier: &BiPoly, later: &BiPoly) -> BiPoly {
    let t = UniPoly::x();
    later + &later.shift_x(1) + &earlier.shift_x(1).scale_t(&t)
}

/// Iterator over `h_2, h_3, h_4, ...` keeping only the last two terms.
#[derive(Clone, Debug)]
pub struct HSequence {
    next_n: i64,
    window: (BiPoly, BiPoly),
}

impl Default for HSequence {
    fn default() -> Self {
        HSequence {
            next_n: 2,
            window: (seed(2), seed(3)),
        }
    }
}

impl Iterator for HSequence {
    /// `(n, h_n)`.
    type Item = (i64, BiPoly);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.next_n;
        self.next_n += 1;
        let out = self.window.0.clone();
        let next = step(&self.window.0, &self.window.1);
        let later = std::mem::replace(&mut self.window.1, next);
        self.window.0 = later;
        Some((n, out))
    }
}

/// `h_n` generated from the seeds by the three-term recurrence.
pub fn h_recur(n: i64) -> Result<BiPoly> {
    require_n(n, 2)?;
    Ok(HSequence::default().nth((n - 2) as usize).unwrap().1)
}

/// Full table `[h_2, ..., h_{n_max}]`.
pub fn h_table(n_max: i64) -> Result<Vec<BiPoly>> {
    require_n(n_max, 2)?;
    Ok(HSequence::default()
        .take((n_max - 1) as usize)
        .map(|(_, h)| h)
        .collect())
}

/// `h_n(x; t0)` as a polynomial in `x`, by the recurrence at the pinned `t0`.
pub fn h_specialized(n: i64, t: &Rational) -> Result<UniPoly> {
    require_n(n, 2)?;
    let (mut a, mut b) = (seed(2).eval_t(t), seed(3).eval_t(t));
    for _ in 2..n {
        let c = &b + &b.shift(1) + a.shift(1).scale(t);
        a = std::mem::replace(&mut b, c);
    }
    Ok(a)
}

/// Coefficients of the two differential recurrences at a concrete `n`:
/// `A h_{n+1} = B h_n + C h_n'` and `Atilde h_{n+1} = Btilde h_n + C^2 h_n''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub a: BiPoly,
    pub b: BiPoly,
    pub c: BiPoly,
    pub a_tilde: BiPoly,
    pub b_tilde: BiPoly,
}

pub fn recurrence_coeffs(n: i64) -> Result<RecurrenceCoeffs> {
    require_n(n, 2)?;
    let scale = |k: i64, p: BiPoly| p.scale_t(&UniPoly::from_ints(&[k]));
    // Terms are (x-power, t-power, coefficient).
    let a = scale(n - 1, BiPoly::from_terms(&[(1, 0, 1), (0, 0, -1)]));
    let b = scale(-n, BiPoly::from_terms(&[(1, 1, 2), (1, 0, 1), (0, 0, 1)]));
    let c = BiPoly::from_terms(&[(3, 0, 1), (2, 1, 4), (2, 0, 2), (1, 0, 1)]);
    let a_tilde = scale(
        n - 1,
        BiPoly::from_terms(&[
            (3, 0, n - 2),
            (2, 1, 4 * n - 2),
            (2, 0, n + 2),
            (1, 1, -(4 * n - 6)),
            (1, 0, -(n - 4)),
            (0, 0, -n),
        ]),
    );
    let b_tilde = scale(
        -n,
        BiPoly::from_terms(&[
            (3, 1, n - 5),
            (3, 0, -2),
            (2, 2, 4 * n - 8),
            (2, 1, 2 * n - 6),
            (2, 0, n - 5),
            (1, 1, 5 * n - 9),
            (1, 0, 2 * n - 4),
            (0, 0, n - 1),
        ]),
    );
    Ok(RecurrenceCoeffs { a, b, c, a_tilde, b_tilde })
}

/// The three identities, in the order they are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    ThreeTerm,
    FirstOrder,
    SecondOrder,
}

impl Identity {
    pub const ALL: [Identity; 3] = [Identity::ThreeTerm, Identity::FirstOrder, Identity::SecondOrder];

    pub fn claim(self) -> &'static str {
        match self {
            Identity::ThreeTerm => "three-term",
            Identity::FirstOrder => "first-order",
            Identity::SecondOrder => "second-order",
        }
    }
}

/// Residual of one identity; the identity holds iff the result is zero.
/// `hs` must be `(h_n, h_{n+1}, h_{n+2})`.
pub fn identity_residual(n: i64, which: Identity, hs: (&BiPoly, &BiPoly, &BiPoly)) -> Result<BiPoly> {
    let (h0, h1, h2) = hs;
    Ok(match which {
        Identity::ThreeTerm => h2 - &step(h0, h1),
        Identity::FirstOrder => {
            let rc = recurrence_coeffs(n)?;
            &rc.a * h1 - &rc.b * h0 - &rc.c * &h0.derivative_x(1)
        }
        Identity::SecondOrder => {
            let rc = recurrence_coeffs(n)?;
            let c2 = &rc.c * &rc.c;
            &rc.a_tilde * h1 - &rc.b_tilde * h0 - &c2 * &h0.derivative_x(2)
        }
    })
}

/// Checks all three identities at one `n`, building `h` from the closed form.
pub fn check_recurrences_at(n: i64) -> Result<[bool; 3]> {
    let hs = (h_closed(n)?, h_closed(n + 1)?, h_closed(n + 2)?);
    let mut out = [false; 3];
    for (slot, which) in out.iter_mut().zip(Identity::ALL) {
        *slot = identity_residual(n, which, (&hs.0, &hs.1, &hs.2))?.is_zero();
    }
    Ok(out)
}

pub fn recurrence_entries(n: i64, passes: [bool; 3]) -> Vec<Entry> {
    Identity::ALL
        .iter()
        .zip(passes)
        .map(|(w, p)| Entry::new("recurrences", w.claim()).param("n", n).pass(p))
        .collect()
}

/// Every identity for `2 <= n <= n_max`, ascending in `n`.
pub fn verify_recurrences(n_max: i64) -> Result<VerificationReport> {
    require_n(n_max, 2)?;
    let mut report = VerificationReport::default();
    for n in 2..=n_max {
        report.extend(recurrence_entries(n, check_recurrences_at(n)?));
    }
    Ok(report)
}

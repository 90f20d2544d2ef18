//! Laguerre forms `f'^2 - f f''` and
//! `L_r(f) = 1/2 sum_{k=0}^{2r} (-1)^(r+k) C(2r, k) f^(k) f^(2r-k)`.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, Rational};
use crate::gpoly::h_specialized;
use crate::poly::UniPoly;
use crate::realroots::{gap_points, nonneg_on_reals};
use crate::report::{Entry, VerificationReport};

pub fn laguerre_form(f: &UniPoly) -> UniPoly {
    let d1 = f.derivative(1);
    &d1 * &d1 - f * &f.derivative(2)
}

pub fn generalized_laguerre_form(f: &UniPoly, r: usize) -> Result<UniPoly> {
    if r < 1 {
        return Err(Error::Domain("Laguerre order r must be >= 1".into()));
    }
    let derivs: Vec<UniPoly> = (0..=2 * r).map(|k| f.derivative(k)).collect();
    let mut acc = UniPoly::zero();
    for k in 0..=2 * r {
        let c = Rational::from_integer(binomial(2 * r as i64, k as i64)?);
        let c = if (r + k) % 2 == 1 { -c } else { c };
        acc = acc + (&derivs[k] * &derivs[2 * r - k]).scale(&c);
    }
    Ok(acc.scale(&Rational::new(1.into(), 2.into())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaguerreReport {
    pub target: String,
    pub r: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_string")]
    pub witness: Option<Rational>,
}

fn opt_string<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// A point where `form < 0`, if any. The form has constant sign on each gap
/// between its real roots, so one sample per gap suffices.
pub fn negative_point(form: &UniPoly) -> Option<Rational> {
    if nonneg_on_reals(form) {
        return None;
    }
    let pts = gap_points(form).expect("form is nonzero here");
    pts.into_iter().find(|p| form.eval(p).is_negative())
}

fn check(target: String, form: &UniPoly, r: usize) -> LaguerreReport {
    let witness = negative_point(form);
    LaguerreReport {
        target,
        r,
        holds: witness.is_none(),
        witness,
    }
}

pub fn laguerre_holds(f: &UniPoly) -> LaguerreReport {
    check(f.to_string(), &laguerre_form(f), 1)
}

pub fn generalized_laguerre_holds(f: &UniPoly, r: usize) -> Result<LaguerreReport> {
    Ok(check(f.to_string(), &generalized_laguerre_form(f, r)?, r))
}

/// One experimental entry: `L_r(h_n(x; t)) >= 0` on the real line.
pub fn conjecture_entry(n: i64, r: usize, t: &Rational) -> Result<Entry> {
    let f = h_specialized(n, t)?;
    let rep = generalized_laguerre_holds(&f, r)?;
    Ok(Entry::new("conjecture", "generalized-laguerre")
        .param("n", n)
        .param("r", r)
        .param("t", t)
        .pass(rep.holds)
        .experimental()
        .witness(rep.witness.map(|w| w.to_string())))
}

/// Every `2 <= n <= n_max`, `1 <= r <= r_max`, `t` in the grid, ordered by
/// `n`, then `t`, then `r`. Entries are findings, not requirements.
pub fn conjecture_sweep(n_max: i64, r_max: usize, t_grid: &[Rational]) -> Result<VerificationReport> {
    if n_max < 2 {
        return Err(Error::NTooSmall { n: n_max, min: 2 });
    }
    if r_max < 1 {
        return Err(Error::Domain("r_max must be >= 1".into()));
    }
    let config = serde_json::json!({
        "n_max": n_max,
        "r_max": r_max,
        "t": t_grid.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    });
    let mut report = VerificationReport::new(config);
    for n in 2..=n_max {
        for t in t_grid {
            for r in 1..=r_max {
                report.push(conjecture_entry(n, r, t)?);
            }
        }
    }
    Ok(report)
}

/// CSV lines `n,r,t,holds` for the experimental entries of a report.
pub fn sweep_csv(report: &VerificationReport) -> String {
    let mut out = String::from("n,r,t,holds\n");
    for e in report.entries.iter().filter(|e| e.claim == "generalized-laguerre") {
        let p = |k: &str| e.params.get(k).map(String::as_str).unwrap_or("");
        out.push_str(&format!("{},{},{},{}\n", p("n"), p("r"), p("t"), e.pass));
    }
    out
}

//! Moments of the coefficient distribution `p(n, d) = g_{n,d}(t) / f_n(1)`,
//! where `f_n(x) = h_n(x; t)`, plus Kolmogorov-type distances to the normal law.
//!
//! Mean, variance and ratio are exact; only the distances use `f64`.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::gpoly::h_specialized;
use crate::poly::UniPoly;

fn guard(n: i64, t: &Rational) -> Result<()> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    if *t <= Rational::zero() {
        return Err(Error::Domain("t must be positive".into()));
    }
    Ok(())
}

fn f_poly(n: i64, t: &Rational) -> Result<UniPoly> {
    guard(n, t)?;
    h_specialized(n, t)
}

/// `(f(1), f'(1), f''(1))`.
fn derivs_at_one(f: &UniPoly) -> Result<(Rational, Rational, Rational)> {
    let one = int(1);
    let f1 = f.eval(&one);
    if f1.is_zero() {
        return Err(Error::Domain("f(1) = 0".into()));
    }
    Ok((f1, f.derivative(1).eval(&one), f.derivative(2).eval(&one)))
}

/// `f'(1) / f(1)`.
pub fn mean(n: i64, t: &Rational) -> Result<Rational> {
    let (f0, f1, _) = derivs_at_one(&f_poly(n, t)?)?;
    Ok(f1 / f0)
}

/// `f''(1) / f(1) + mu - mu^2`.
pub fn variance(n: i64, t: &Rational) -> Result<Rational> {
    let (f0, f1, f2) = derivs_at_one(&f_poly(n, t)?)?;
    let mu = &f1 / &f0;
    Ok(f2 / f0 + &mu - &mu * &mu)
}

/// `(n-1)/(4(t+1)) * ratio(n, t) - n/(4(t+1))`.
pub fn variance_closed(n: i64, t: &Rational) -> Result<Rational> {
    let r = ratio(n, t)?;
    let denom = (t + int(1)) * int(4);
    Ok((int(n - 1) * r - int(n)) / denom)
}

/// `f_{n+1}(1) / f_n(1)`.
pub fn ratio(n: i64, t: &Rational) -> Result<Rational> {
    let a = f_poly(n, t)?.eval(&int(1));
    let b = f_poly(n + 1, t)?.eval(&int(1));
    Ok(b / a)
}

/// `[f_2(1), ..., f_{n_max}(1)]` from `f_{n+2}(1) = 2 f_{n+1}(1) + t f_n(1)`.
pub fn totals(n_max: i64, t: &Rational) -> Result<Vec<Rational>> {
    guard(n_max, t)?;
    let mut v = vec![t.clone(), t * int(2)];
    while v.len() < (n_max - 1) as usize {
        let k = v.len();
        v.push(&v[k - 1] * int(2) + t * &v[k - 2]);
    }
    v.truncate((n_max - 1) as usize);
    Ok(v)
}

/// Standard normal distribution function, via `libm::erfc` (relative error
/// well below `1e-15`).
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Exact point masses `p(n, d)` for `d = 1..n-1` with mean and standard deviation.
struct Distribution {
    masses: Vec<Rational>,
    mu: f64,
    sigma: f64,
}

fn distribution(n: i64, t: &Rational) -> Result<Distribution> {
    let f = f_poly(n, t)?;
    let (f0, f1, f2) = derivs_at_one(&f)?;
    let mu = &f1 / &f0;
    let var = f2 / &f0 + &mu - &mu * &mu;
    if var <= Rational::zero() {
        return Err(Error::Domain(format!("variance is zero at n = {n}")));
    }
    let masses = (1..n as usize).map(|d| f.coeff(d) / &f0).collect();
    Ok(Distribution {
        masses,
        mu: to_f64(&mu),
        sigma: to_f64(&var).sqrt(),
    })
}

pub fn to_f64(v: &Rational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// `sup_x |P(D <= mu + x sigma) - Phi(x)|`, taken over both sides of every jump.
pub fn clt_distance(n: i64, t: &Rational) -> Result<f64> {
    let dist = distribution(n, t)?;
    let mut below = Rational::zero();
    let mut sup = 0.0f64;
    for (k, p) in dist.masses.iter().enumerate() {
        let x = ((k + 1) as f64 - dist.mu) / dist.sigma;
        let phi = normal_cdf(x);
        let above = &below + p;
        sup = sup.max((to_f64(&below) - phi).abs()).max((to_f64(&above) - phi).abs());
        below = above;
    }
    Ok(sup)
}

/// `sup |sigma p(n, floor(mu + x sigma)) - phi(x)|` over `x = i/100`, `|i| <= 600`.
pub fn llt_distance(n: i64, t: &Rational) -> Result<f64> {
    let dist = distribution(n, t)?;
    let masses: Vec<f64> = dist.masses.iter().map(to_f64).collect();
    let mut sup = 0.0f64;
    for i in -600i32..=600 {
        let x = f64::from(i) / 100.0;
        let k = (dist.mu + x * dist.sigma).floor();
        let p = if k >= 1.0 && (k as usize) <= masses.len() {
            masses[k as usize - 1]
        } else {
            0.0
        };
        sup = sup.max((dist.sigma * p - normal_pdf(x)).abs());
    }
    Ok(sup)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalityStats {
    pub n: i64,
    #[serde(serialize_with = "as_string")]
    pub t: Rational,
    #[serde(serialize_with = "as_string")]
    pub mean: Rational,
    #[serde(serialize_with = "as_string")]
    pub variance: Rational,
    #[serde(serialize_with = "as_string")]
    pub ratio: Rational,
    pub clt_dist: f64,
    pub llt_dist: f64,
}

fn as_string<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl NormalityStats {
    /// Needs `n >= 3` so that the variance is positive.
    pub fn compute(n: i64, t: &Rational) -> Result<Self> {
        Ok(NormalityStats {
            n,
            t: t.clone(),
            mean: mean(n, t)?,
            variance: variance(n, t)?,
            ratio: ratio(n, t)?,
            clt_dist: clt_distance(n, t)?,
            llt_dist: llt_distance(n, t)?,
        })
    }

    pub const CSV_HEADER: &'static str = "n,t,mean,variance,ratio,clt_dist,llt_dist";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.12e},{:.12e}",
            self.n, self.t, self.mean, self.variance, self.ratio, self.clt_dist, self.llt_dist
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use crate::gpoly::h_closed;

    fn grid() -> Vec<Rational> {
        vec![rational(1, 2).unwrap(), int(1), int(2), rational(7, 3).unwrap()]
    }

    #[test]
    fn mean_examples() {
        assert_eq!(mean(6, &int(1)).unwrap(), int(3));
        assert_eq!(mean(3, &int(1)).unwrap(), rational(3, 2).unwrap());
        assert_eq!(mean(2, &int(5)).unwrap(), int(1));
        assert!(mean(4, &int(0)).is_err());
        assert!(mean(1, &int(1)).is_err());
    }

    #[test]
    fn variance_examples() {
        assert_eq!(variance(3, &int(1)).unwrap(), rational(1, 4).unwrap());
        assert_eq!(variance(2, &rational(3, 7).unwrap()).unwrap(), int(0));
        assert_eq!(variance(4, &int(1)).unwrap(), rational(2, 5).unwrap());
        assert_eq!(variance_closed(3, &int(1)).unwrap(), rational(1, 4).unwrap());
        assert_eq!(variance_closed(2, &int(1)).unwrap(), int(0));
    }

    #[test]
    fn variance_direct_from_closed_form_coefficients() {
        // second moment straight from the g-coefficients
        for t in grid() {
            for n in 3..=12 {
                let h = h_closed(n).unwrap().eval_t(&t);
                let (mut s0, mut s1, mut s2) = (Rational::zero(), Rational::zero(), Rational::zero());
                for (d, c) in h.coeffs().iter().enumerate() {
                    let d = int(d as i64);
                    s0 += c;
                    s1 += c * &d;
                    s2 += c * &d * &d;
                }
                let mu = &s1 / &s0;
                assert_eq!(mean(n, &t).unwrap(), mu);
                assert_eq!(variance(n, &t).unwrap(), s2 / &s0 - &mu * &mu);
            }
        }
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio(2, &int(1)).unwrap(), int(2));
        assert_eq!(ratio(3, &int(1)).unwrap(), rational(5, 2).unwrap());
        let r = to_f64(&ratio(200, &int(1)).unwrap());
        assert!((r - (1.0 + 2f64.sqrt())).abs() < 1e-10);
        let tot = totals(6, &int(1)).unwrap();
        assert_eq!(tot, vec![int(1), int(2), int(5), int(12), int(29)]);
    }

    #[test]
    fn ratio_fixed_point_drift() {
        for t in grid() {
            for n in 2..30 {
                let next = ratio(n + 1, &t).unwrap();
                assert_eq!(next, int(2) + &t / ratio(n, &t).unwrap());
            }
        }
    }

    #[test]
    fn cdf_against_quadrature() {
        // composite Simpson on [0, |x|] with Phi(0) = 1/2
        let simpson = |x: f64| {
            let m = 2000;
            let h = x / m as f64;
            let mut acc = normal_pdf(0.0) + normal_pdf(x);
            for j in 1..m {
                let w = if j % 2 == 1 { 4.0 } else { 2.0 };
                acc += w * normal_pdf(j as f64 * h);
            }
            0.5 + acc * h / 3.0
        };
        for i in -40..=40 {
            let x = i as f64 / 8.0;
            assert!((normal_cdf(x) - simpson(x)).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn distances() {
        let t = int(1);
        let (c50, c100, c200) = (
            clt_distance(50, &t).unwrap(),
            clt_distance(100, &t).unwrap(),
            clt_distance(200, &t).unwrap(),
        );
        assert!((0.0..=1.0).contains(&c50));
        assert!(c50 < 0.1);
        assert!(c200 < c100 && c100 < c50);
        let (l50, l200) = (llt_distance(50, &t).unwrap(), llt_distance(200, &t).unwrap());
        assert!(l50 >= 0.0 && l200 < l50);
        assert!(clt_distance(2, &t).is_err());
        assert!(llt_distance(2, &t).is_err());
    }

    #[test]
    fn variance_asymptotics() {
        let v = to_f64(&variance(200, &int(1)).unwrap());
        let scaled = v * 4.0 * 2f64.sqrt() / 200.0;
        assert!((scaled - 1.0).abs() < 0.02, "{scaled}");
    }

    #[test]
    fn csv_and_json() {
        let s = NormalityStats::compute(3, &int(1)).unwrap();
        assert!(s.csv_row().starts_with("3,1,3/2,1/4,5/2,"));
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j["variance"], "1/4");
        assert_eq!(j["n"], 3);
    }
}

//! Acceptance criteria, one line each. Runs as a plain binary so that the
//! lines are printed on success too; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use speyer_core::exactnum::{binomial, int, rational};
use speyer_core::gamma::{gamma_expand, gamma_recur, h_at_minus_one, h_at_minus_one_predicted};
use speyer_core::gpoly::{check_recurrences_at, g_poly, h_closed, h_recur, h_specialized, GIndex};
use speyer_core::laguerre::{conjecture_sweep, laguerre_holds};
use speyer_core::realroots::{interlaces, is_real_rooted};
use speyer_core::seqineq::{g_sequence, higher_turan, is_k_log_concave};
use speyer_core::stats::{clt_distance, llt_distance, mean, ratio, to_f64, variance, variance_closed};
use speyer_core::Rational;

// Pinned tolerances and budgets.
const RATIO_LIMIT_TOL: f64 = 1e-10;
const VARIANCE_SCALE_TOL: f64 = 0.02;
/// Ceilings frozen from the pilot run at t = 1 (measured 6.81e-2, 3.37e-2, 3.99e-2).
const CLT_50_CEILING: f64 = 0.1;
const CLT_200_CEILING: f64 = 0.035;
const LLT_200_CEILING: f64 = 0.045;
const LC_DEPTH: usize = 5;

fn t_grid() -> Vec<Rational> {
    vec![rational(1, 2).unwrap(), int(1), int(2), rational(7, 3).unwrap()]
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// First `(n, t)` where `ok` fails, if any.
fn first_failure(ns: impl Iterator<Item = i64> + Clone, ok: impl Fn(i64, &Rational) -> bool) -> Option<String> {
    for t in t_grid() {
        for n in ns.clone() {
            if !ok(n, &t) {
                return Some(format!("fails at n={n} t={t}"));
            }
        }
    }
    None
}

fn from_failure(f: Option<String>, ok: &str) -> Outcome {
    match f {
        Some(msg) => check(false, msg),
        None => check(true, ok),
    }
}

fn c01() -> Outcome {
    from_failure(
        (2..=60).find(|&n| h_closed(n).unwrap() != h_recur(n).unwrap()).map(|n| format!("differs at n={n}")),
        "exact for 2 <= n <= 60",
    )
}

fn c02() -> Outcome {
    from_failure(
        (2..=40)
            .find(|&n| {
                let [_, first, second] = check_recurrences_at(n).unwrap();
                !(first && second)
            })
            .map(|n| format!("identity fails at n={n}")),
        "first- and second-order identities exact for 2 <= n <= 40",
    )
}

fn c03() -> Outcome {
    from_failure(
        first_failure(2..=30, |n, t| is_real_rooted(&h_specialized(n, t).unwrap()).unwrap()),
        "real-rooted for n <= 30 on the t grid",
    )
}

fn c04() -> Outcome {
    from_failure(
        first_failure(2..=25, |n, t| {
            interlaces(&h_specialized(n, t).unwrap(), &h_specialized(n + 1, t).unwrap(), false).unwrap()
        }),
        "h_n interlaces h_{n+1} for n <= 25 on the t grid",
    )
}

fn c05() -> Outcome {
    from_failure(
        first_failure(4..=30, |n, t| is_k_log_concave(&g_sequence(n, t).unwrap(), LC_DEPTH).unwrap().is_ok()),
        "5-log-concave for 4 <= n <= 30 on the t grid",
    )
}

fn c06() -> Outcome {
    from_failure(
        first_failure(5..=30, |n, t| higher_turan(&g_sequence(n, t).unwrap()).unwrap().is_ok()),
        "higher-order Turan for 5 <= n <= 30 on the t grid",
    )
}

fn c07() -> Outcome {
    let one = int(1);
    let lc = (4..=30).find(|&n| is_k_log_concave(&g_sequence(n, &one).unwrap(), LC_DEPTH).unwrap().is_err());
    let tu = (5..=30).find(|&n| higher_turan(&g_sequence(n, &one).unwrap()).unwrap().is_err());
    match (lc, tu) {
        (None, None) => check(true, "t = 1: 5-log-concave and higher-order Turan for n <= 30"),
        _ => check(false, format!("log-concavity fails at {lc:?}, Turan fails at {tu:?}")),
    }
}

fn c08() -> Outcome {
    for n in 2..=30 {
        let h = h_closed(n).unwrap();
        let e = gamma_expand(&h, n as usize).unwrap();
        let g = gamma_recur(n).unwrap();
        if g != e || e.reconstruct() != h {
            return check(false, format!("recurrence and expansion differ at n={n}"));
        }
        for (i, v) in g.at(&int(1)).iter().enumerate() {
            let i = i as i64;
            let want = if i == 0 { int(0) } else { Rational::from_integer(binomial(n - i - 1, i - 1).unwrap()) };
            if *v != want {
                return check(false, format!("gamma_{{{n},{i}}}(1) = {v}, want {want}"));
            }
        }
        for t in t_grid() {
            if g.at(&t).iter().any(|v| *v < int(0)) {
                return check(false, format!("negative gamma at n={n} t={t}"));
            }
        }
        if h_at_minus_one(n).unwrap() != h_at_minus_one_predicted(&g) {
            return check(false, format!("parity law fails at n={n}"));
        }
    }
    check(true, "expansion = recurrence, binomial values, positivity and parity for n <= 30")
}

fn c09() -> Outcome {
    if let Some(msg) = first_failure(2..=40, |n, t| {
        mean(n, t).unwrap() == rational(n, 2).unwrap() && variance(n, t).unwrap() == variance_closed(n, t).unwrap()
    }) {
        return check(false, msg);
    }
    let r = to_f64(&ratio(200, &int(1)).unwrap());
    let r_err = (r - (1.0 + 2f64.sqrt())).abs();
    let scaled = to_f64(&variance(200, &int(1)).unwrap()) * 4.0 * 2f64.sqrt() / 200.0;
    check(
        r_err < RATIO_LIMIT_TOL && (scaled - 1.0).abs() < VARIANCE_SCALE_TOL,
        format!("mean and variance exact for n <= 40; |ratio - (1+sqrt 2)| = {r_err:.1e}; 4 sigma^2 sqrt2 / n = {scaled:.5}"),
    )
}

fn c10() -> Outcome {
    let one = int(1);
    let clt: Vec<f64> = [50, 100, 200].iter().map(|&n| clt_distance(n, &one).unwrap()).collect();
    let llt: Vec<f64> = [50, 100, 200].iter().map(|&n| llt_distance(n, &one).unwrap()).collect();
    let dec = |v: &[f64]| v[0] > v[1] && v[1] > v[2];
    let pass = dec(&clt)
        && dec(&llt)
        && clt[2] < clt[0] / 2.0
        && clt[0] < CLT_50_CEILING
        && clt[2] < CLT_200_CEILING
        && llt[2] < LLT_200_CEILING;
    check(
        pass,
        format!(
            "clt {:.4e} > {:.4e} > {:.4e} (ratio {:.4}); llt {:.4e} > {:.4e} > {:.4e}",
            clt[0],
            clt[1],
            clt[2],
            clt[2] / clt[0],
            llt[0],
            llt[1],
            llt[2]
        ),
    )
}

fn c11() -> Outcome {
    if let Some(msg) = first_failure(2..=20, |n, t| laguerre_holds(&h_specialized(n, t).unwrap()).holds) {
        return check(false, msg);
    }
    for n in 2..=20 {
        for d in 1..n {
            if !laguerre_holds(&g_poly(GIndex::new(n, d).unwrap())).holds {
                return check(false, format!("g_{{{n},{d}}} fails"));
            }
        }
    }
    let sweep = conjecture_sweep(15, 3, &t_grid()).unwrap();
    let s = &sweep.summary;
    let complete = s.experimental == 14 * 4 * 3 && s.total == s.experimental && !sweep.to_json().is_empty();
    check(
        complete,
        format!(
            "classical inequality holds for n <= 20; generalized sweep recorded {} of {} holding (not gating)",
            s.experimental_holding, s.experimental
        ),
    )
}

fn c12() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, jobs: &str| -> Vec<u8> {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_speyer"))
            .args(["verify", "--n-max", "16", "--format", "json", "--jobs", jobs, "--out"])
            .arg(&path)
            .status()
            .unwrap();
        assert!(status.success(), "verify exited with {status}");
        std::fs::read(path).unwrap()
    };
    let a = run("a.json", "4");
    let b = run("b.json", "4");
    let c = run("c.json", "1");
    check(
        a == b && b == c,
        format!("{} bytes; jobs=4 twice and jobs=1 identical: {}", a.len(), a == b && b == c),
    )
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("closed form = recurrence", c01, Some(Duration::from_secs(30))),
        ("differential recurrences", c02, Some(Duration::from_secs(60))),
        ("real-rootedness", c03, Some(Duration::from_secs(300))),
        ("interlacing", c04, Some(Duration::from_secs(600))),
        ("5-log-concavity", c05, None),
        ("higher-order Turan", c06, None),
        ("t = 1 specialization", c07, None),
        ("gamma suite", c08, None),
        ("stats identities", c09, Some(Duration::from_secs(120))),
        ("normality trend", c10, None),
        ("Laguerre", c11, None),
        ("determinism", c12, None),
    ];
    let mut failed = 0;
    for (k, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = f();
        let elapsed = start.elapsed();
        if let Some(b) = budget {
            if elapsed > *b {
                out.pass = false;
                out.detail.push_str(&format!(" [over budget {b:?}]"));
            }
        }
        failed += usize::from(!out.pass);
        println!(
            "{} criterion {:>2} {:<26} {:>8.2}s  {}",
            if out.pass { "PASS" } else { "FAIL" },
            k + 1,
            name,
            elapsed.as_secs_f64(),
            out.detail
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

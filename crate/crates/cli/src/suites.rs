//! Verification suites. Work is split into cells `(suite, n, t)` that run in
//! parallel; results are collected in cell order, so the report does not
//! depend on scheduling.

use std::time::Instant;

use rayon::prelude::*;
use speyer_core::exactnum::int;
use speyer_core::gamma::{binomial_specialization_holds, gamma_expand, gamma_positive, gamma_recur, h_at_minus_one, h_at_minus_one_predicted};
use speyer_core::gpoly::{check_recurrences_at, g_poly, h_closed, h_recur, h_specialized, recurrence_entries, GIndex};
use speyer_core::laguerre::{conjecture_entry, laguerre_holds};
use speyer_core::realroots::{interlaces, is_real_rooted};
use speyer_core::seqineq::{g_sequence, higher_turan, is_k_log_concave};
use speyer_core::stats::{clt_distance, llt_distance, mean, ratio, to_f64, variance, variance_closed};
use speyer_core::{Entry, Rational, Result, VerificationReport};

use crate::config::{RunConfig, Suite};

/// `|ratio(n, t) - (1 + sqrt(t + 1))|` must be below this at `ASYMPTOTIC_N`.
pub const RATIO_LIMIT_TOL: f64 = 1e-10;
/// Relative tolerance for `4 sigma^2 sqrt(t + 1) / n -> 1` at `ASYMPTOTIC_N`.
pub const VARIANCE_SCALE_TOL: f64 = 0.02;
pub const ASYMPTOTIC_N: i64 = 200;
/// Sizes at which the normal-approximation distances are compared.
pub const TREND_NS: [i64; 3] = [50, 100, 200];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    /// t-free checks at one `n`.
    AtN(Suite, i64),
    /// Checks at one `n` and one grid value `t_grid[k]`.
    AtNT(Suite, i64, usize),
    /// Large-`n` stats checks at `t_grid[k]`.
    Asymptotic(usize),
}

fn cells(cfg: &RunConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    let ts = 0..cfg.t_grid.len();
    for &suite in &cfg.suites {
        // smallest n each suite is meaningful for
        let lo = match suite {
            Suite::Logconcavity => 4,
            Suite::Turan => 5,
            _ => 2,
        };
        for n in cfg.n_min.max(lo)..=cfg.n_max {
            if matches!(suite, Suite::Recurrences | Suite::Logconcavity | Suite::Turan | Suite::Gamma | Suite::Laguerre) {
                out.push(Cell::AtN(suite, n));
            }
            if suite != Suite::Recurrences {
                out.extend(ts.clone().map(|k| Cell::AtNT(suite, n, k)));
            }
        }
        if suite == Suite::Stats {
            out.extend(ts.clone().map(Cell::Asymptotic));
        }
    }
    out
}

fn entry(suite: Suite, claim: &str) -> Entry {
    Entry::new(suite.id(), claim)
}

fn at_n(cfg: &RunConfig, suite: Suite, n: i64) -> Result<Vec<Entry>> {
    let one = int(1);
    Ok(match suite {
        Suite::Recurrences => {
            let mut v = vec![entry(suite, "closed-form").param("n", n).pass(h_closed(n)? == h_recur(n)?)];
            v.extend(recurrence_entries(n, check_recurrences_at(n)?));
            v
        }
        Suite::Logconcavity => {
            let r = is_k_log_concave(&g_sequence(n, &one)?, cfg.depth)?;
            vec![entry(suite, "k-log-concave-t1")
                .param("n", n)
                .param("depth", cfg.depth)
                .pass(r.is_ok())
                .witness(r.err().map(|f| format!("depth={},index={}", f.depth, f.index)))]
        }
        Suite::Turan => {
            let r = higher_turan(&g_sequence(n, &one)?)?;
            vec![entry(suite, "higher-turan-t1")
                .param("n", n)
                .pass(r.is_ok())
                .witness(r.err().map(|i| format!("index={i}")))]
        }
        Suite::Gamma => {
            let h = h_closed(n)?;
            let expanded = gamma_expand(&h, n as usize)?;
            let recurred = gamma_recur(n)?;
            vec![
                entry(suite, "gamma-recurrence")
                    .param("n", n)
                    .pass(recurred == expanded && expanded.reconstruct() == h),
                entry(suite, "gamma-binomial")
                    .param("n", n)
                    .pass(binomial_specialization_holds(&recurred)),
                entry(suite, "h-at-minus-one")
                    .param("n", n)
                    .pass(h_at_minus_one(n)? == h_at_minus_one_predicted(&recurred)),
            ]
        }
        Suite::Laguerre => (1..n)
            .map(|d| {
                let g = g_poly(GIndex::new(n, d)?);
                let rep = laguerre_holds(&g);
                Ok(entry(suite, "laguerre-g")
                    .param("n", n)
                    .param("d", d)
                    .pass(rep.holds)
                    .witness(rep.witness.map(|w| w.to_string())))
            })
            .collect::<Result<_>>()?,
        _ => Vec::new(),
    })
}

fn at_nt(cfg: &RunConfig, suite: Suite, n: i64, t: &Rational) -> Result<Vec<Entry>> {
    let e = |claim: &str| entry(suite, claim).param("n", n).param("t", t);
    Ok(match suite {
        Suite::Recurrences => Vec::new(),
        Suite::Realroots => vec![e("real-rooted").pass(is_real_rooted(&h_specialized(n, t)?)?)],
        Suite::Interlacing => {
            let (g, f) = (h_specialized(n, t)?, h_specialized(n + 1, t)?);
            vec![e("interlacing").pass(interlaces(&g, &f, false)?)]
        }
        Suite::Logconcavity => {
            let r = is_k_log_concave(&g_sequence(n, t)?, cfg.depth)?;
            vec![e("k-log-concave")
                .param("depth", cfg.depth)
                .pass(r.is_ok())
                .witness(r.err().map(|f| format!("depth={},index={}", f.depth, f.index)))]
        }
        Suite::Turan => {
            let r = higher_turan(&g_sequence(n, t)?)?;
            vec![e("higher-turan").pass(r.is_ok()).witness(r.err().map(|i| format!("index={i}")))]
        }
        Suite::Gamma => vec![e("gamma-positive").pass(gamma_positive(n, t)?)],
        Suite::Stats => {
            let var = variance(n, t)?;
            let r0 = ratio(n, t)?;
            let mut v = vec![
                e("mean").pass(mean(n, t)? == Rational::new(n.into(), 2.into())),
                e("variance").pass(var == variance_closed(n, t)?),
                e("ratio-recurrence").pass(ratio(n + 1, t)? == int(2) + t / r0),
            ];
            if n >= 3 {
                v.push(e("variance-increasing").pass(variance(n + 1, t)? > var));
            }
            v
        }
        Suite::Laguerre => {
            let rep = laguerre_holds(&h_specialized(n, t)?);
            vec![e("laguerre-h").pass(rep.holds).witness(rep.witness.map(|w| w.to_string()))]
        }
        Suite::Conjecture => (1..=cfg.r_max)
            .map(|r| conjecture_entry(n, r, t))
            .collect::<Result<_>>()?,
    })
}

fn asymptotic(t: &Rational) -> Result<Vec<Entry>> {
    let n = ASYMPTOTIC_N;
    let tf = to_f64(t);
    let e = |claim: &str| entry(Suite::Stats, claim).param("t", t);
    let limit = 1.0 + (tf + 1.0).sqrt();
    let r = to_f64(&ratio(n, t)?);
    let scaled = to_f64(&variance(n, t)?) * 4.0 * (tf + 1.0).sqrt() / n as f64;
    let clt = TREND_NS.map(|m| clt_distance(m, t));
    let llt = TREND_NS.map(|m| llt_distance(m, t));
    let clt: Vec<f64> = clt.into_iter().collect::<Result<_>>()?;
    let llt: Vec<f64> = llt.into_iter().collect::<Result<_>>()?;
    let ns = TREND_NS.map(|m| m.to_string()).join(" ");
    let decreasing = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]);
    let shown = |v: &[f64]| v.iter().map(|x| format!("{x:.6e}")).collect::<Vec<_>>().join(",");
    Ok(vec![
        e("ratio-limit")
            .param("n", n)
            .pass((r - limit).abs() < RATIO_LIMIT_TOL),
        e("variance-asymptotic")
            .param("n", n)
            .pass((scaled - 1.0).abs() < VARIANCE_SCALE_TOL)
            .witness(Some(format!("{scaled:.6}"))),
        e("clt-trend")
            .param("n", &ns)
            .pass(decreasing(&clt) && clt[2] < clt[0] / 2.0)
            .witness(Some(shown(&clt))),
        e("llt-trend")
            .param("n", &ns)
            .pass(decreasing(&llt))
            .witness(Some(shown(&llt))),
    ])
}

fn run_cell(cfg: &RunConfig, cell: Cell) -> Result<Vec<Entry>> {
    let start = Instant::now();
    let mut entries = match cell {
        Cell::AtN(s, n) => at_n(cfg, s, n)?,
        Cell::AtNT(s, n, k) => at_nt(cfg, s, n, &cfg.t_grid[k])?,
        Cell::Asymptotic(k) => asymptotic(&cfg.t_grid[k])?,
    };
    if cfg.timings {
        // wall time of the whole cell, shared by its entries
        let ms = start.elapsed().as_secs_f64() * 1e3;
        for e in &mut entries {
            e.elapsed_ms = Some(ms);
        }
    }
    Ok(entries)
}

/// Runs every selected suite on a pool of `cfg.jobs` threads.
pub fn run(cfg: &RunConfig) -> Result<VerificationReport> {
    let work = cells(cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| speyer_core::Error::Internal(e.to_string()))?;
    let chunks: Vec<Vec<Entry>> = pool.install(|| {
        work.par_iter()
            .map(|&c| run_cell(cfg, c))
            .collect::<Result<_>>()
    })?;
    let mut report = VerificationReport::new(cfg.echo());
    report.extend(chunks.into_iter().flatten());
    Ok(report)
}

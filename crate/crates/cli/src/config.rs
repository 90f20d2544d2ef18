//! Run configuration: defaults, optional JSON file, then command-line flags.

use std::path::PathBuf;

use serde::Deserialize;
use speyer_core::{parse_rational, Rational};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read config {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed config {path}: {source}")]
    Malformed {
        path: PathBuf,
        source: serde_json::Error,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Recurrences,
    Realroots,
    Interlacing,
    Logconcavity,
    Turan,
    Gamma,
    Stats,
    Laguerre,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Recurrences,
        Suite::Realroots,
        Suite::Interlacing,
        Suite::Logconcavity,
        Suite::Turan,
        Suite::Gamma,
        Suite::Stats,
        Suite::Laguerre,
        Suite::Conjecture,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Realroots => "realroots",
            Suite::Interlacing => "interlacing",
            Suite::Logconcavity => "logconcavity",
            Suite::Turan => "turan",
            Suite::Gamma => "gamma",
            Suite::Stats => "stats",
            Suite::Laguerre => "laguerre",
            Suite::Conjecture => "conjecture",
        }
    }

    pub fn parse(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s.trim())
            .ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|x| x.id()).collect();
                ConfigError::Invalid(format!("unknown suite {s:?} (known: {})", known.join(", ")))
            })
    }

    pub fn uses_t(self) -> bool {
        self != Suite::Recurrences
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n_min: i64,
    pub n_max: i64,
    pub t_grid: Vec<Rational>,
    pub depth: usize,
    pub r_max: usize,
    /// Always in [`Suite::ALL`] order, without repeats.
    pub suites: Vec<Suite>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_min: 2,
            n_max: 30,
            t_grid: ["1/2", "1", "2", "7/3"]
                .iter()
                .map(|s| parse_rational(s).expect("default grid parses"))
                .collect(),
            depth: 5,
            r_max: 3,
            suites: Suite::ALL.to_vec(),
            format: Format::Text,
            out: None,
            jobs: 1,
            timings: false,
        }
    }
}

/// Partial settings from a config file or from flags; `None` means unset.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub n: Option<i64>,
    pub n_min: Option<i64>,
    pub n_max: Option<i64>,
    pub t: Option<Vec<String>>,
    pub depth: Option<usize>,
    pub r_max: Option<usize>,
    pub suites: Option<Vec<String>>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub timings: Option<bool>,
}

impl Overrides {
    pub fn from_file(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| ConfigError::Malformed {
            path: path.to_path_buf(),
            source,
        })
    }

    fn apply(&self, cfg: &mut RunConfig) -> Result<(), ConfigError> {
        if let Some(n) = self.n {
            cfg.n_min = n;
            cfg.n_max = n;
        }
        if let Some(v) = self.n_min {
            cfg.n_min = v;
        }
        if let Some(v) = self.n_max {
            cfg.n_max = v;
        }
        if let Some(ts) = &self.t {
            cfg.t_grid = parse_t_grid(ts)?;
        }
        if let Some(v) = self.depth {
            cfg.depth = v;
        }
        if let Some(v) = self.r_max {
            cfg.r_max = v;
        }
        if let Some(ss) = &self.suites {
            cfg.suites = parse_suites(ss)?;
        }
        if let Some(v) = self.format {
            cfg.format = v;
        }
        if let Some(v) = &self.out {
            cfg.out = Some(v.clone());
        }
        if let Some(v) = self.jobs {
            cfg.jobs = v;
        }
        if let Some(v) = self.timings {
            cfg.timings = v;
        }
        Ok(())
    }
}

pub fn parse_t_grid(ts: &[String]) -> Result<Vec<Rational>, ConfigError> {
    let mut out: Vec<Rational> = Vec::new();
    for s in ts.iter().flat_map(|s| s.split(',')) {
        let v = parse_rational(s.trim()).map_err(|e| ConfigError::Invalid(format!("bad t {s:?}: {e}")))?;
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Accepts comma lists; the result is in canonical suite order.
pub fn parse_suites(ss: &[String]) -> Result<Vec<Suite>, ConfigError> {
    let mut out = ss
        .iter()
        .flat_map(|s| s.split(','))
        .filter(|s| !s.trim().is_empty())
        .map(Suite::parse)
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

impl RunConfig {
    /// Defaults, then `file`, then `flags`; the result is validated.
    pub fn resolve(file: Option<&Overrides>, flags: &Overrides) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        if let Some(f) = file {
            f.apply(&mut cfg)?;
        }
        flags.apply(&mut cfg)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: String| Err(ConfigError::Invalid(m));
        if self.n_min < 2 {
            return bad(format!("n_min must be >= 2, got {}", self.n_min));
        }
        if self.n_max < self.n_min {
            return bad(format!("n_max ({}) is below n_min ({})", self.n_max, self.n_min));
        }
        if self.depth < 1 {
            return bad("depth must be >= 1".into());
        }
        if self.r_max < 1 {
            return bad("r_max must be >= 1".into());
        }
        if self.jobs < 1 {
            return bad("jobs must be >= 1".into());
        }
        if self.suites.is_empty() {
            return bad("no suites selected".into());
        }
        if self.suites.iter().any(|s| s.uses_t()) {
            if self.t_grid.is_empty() {
                return bad("t grid is empty".into());
            }
            if let Some(t) = self.t_grid.iter().find(|t| **t <= Rational::from_integer(0.into())) {
                return bad(format!("t must be positive (got {t})"));
            }
        }
        Ok(())
    }

    /// The part of the configuration that determines report contents.
    pub fn echo(&self) -> serde_json::Value {
        serde_json::json!({
            "n_min": self.n_min,
            "n_max": self.n_max,
            "t": self.t_grid.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "depth": self.depth,
            "r_max": self.r_max,
            "suites": self.suites.iter().map(|s| s.id()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn defaults_validate() {
        let cfg = RunConfig::resolve(None, &Overrides::default()).unwrap();
        assert_eq!((cfg.n_min, cfg.n_max, cfg.depth, cfg.r_max), (2, 30, 5, 3));
        assert_eq!(cfg.t_grid.len(), 4);
        assert_eq!(cfg.suites.len(), 9);
    }

    #[test]
    fn flags_win_over_file() {
        let file: Overrides = serde_json::from_str(r#"{"n_max": 12, "depth": 3, "t": ["1/3"]}"#).unwrap();
        let flags = Overrides {
            n_max: Some(9),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(Some(&file), &flags).unwrap();
        assert_eq!(cfg.n_max, 9);
        assert_eq!(cfg.depth, 3);
        assert_eq!(cfg.t_grid, vec![parse_rational("1/3").unwrap()]);
    }

    #[test]
    fn rejects_bad_values() {
        let msg = |o: Overrides| RunConfig::resolve(None, &o).unwrap_err().to_string();
        let zero_t = Overrides {
            t: Some(strings(&["0/1"])),
            suites: Some(strings(&["turan"])),
            ..Default::default()
        };
        assert!(msg(zero_t).contains("t must be positive"));
        assert!(msg(Overrides { n_min: Some(1), ..Default::default() }).contains("n_min"));
        assert!(msg(Overrides { suites: Some(strings(&["nope"])), ..Default::default() }).contains("unknown suite"));
        // t is irrelevant to the recurrence suite
        let rec = Overrides {
            t: Some(strings(&["-1"])),
            suites: Some(strings(&["recurrences"])),
            ..Default::default()
        };
        assert!(RunConfig::resolve(None, &rec).is_ok());
        assert!(serde_json::from_str::<Overrides>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn suites_are_canonical() {
        let s = parse_suites(&strings(&["stats,gamma", "gamma"])).unwrap();
        assert_eq!(s, vec![Suite::Gamma, Suite::Stats]);
    }
}

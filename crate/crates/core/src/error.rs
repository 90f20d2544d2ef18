use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
    #[error("binomial({n}, {k}) is undefined for negative n")]
    NegativeBinomial { n: i64, k: i64 },
    #[error("invalid index (n = {n}, d = {d}): need n >= 2 and 1 <= d <= n-1")]
    InvalidIndex { n: i64, d: i64 },
    #[error("n must be at least {min}, got {n}")]
    NTooSmall { n: i64, min: i64 },
    #[error("{0}")]
    Domain(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("darga {darga} is smaller than the degree {degree}")]
    DargaTooSmall { darga: usize, degree: usize },
    #[error("polynomial is not palindromic of darga {0}")]
    NotPalindromic(usize),
    #[error("degree gap {0} is larger than one")]
    DegreeGap(usize),
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("interval lower bound must be below the upper bound")]
    EmptyInterval,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

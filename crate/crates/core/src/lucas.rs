//! Base-p digit combinatorics: p-adic valuation, Lucas' theorem and the first-carry prediction
//! v((1 + delta)^t - 1) = p^{nu_p(t)}.

use thiserror::Error;

use crate::ffield::mod_inv;
use crate::pseries::{SeriesError, TruncatedSeries, Valuation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LucasError {
    #[error("nu_p(0) is undefined")]
    ZeroArgument,
    #[error("binomial index m = {m} exceeds t = {t}")]
    IndexTooLarge { t: u64, m: u64 },
    #[error("delta must have valuation exactly 1, found {0}")]
    BadDelta(String),
    #[error("precision {have} is below the required {need}")]
    InsufficientPrecision { have: usize, need: usize },
    #[error("valuation is indeterminate at precision {0}")]
    Indeterminate(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// n written in base p, least significant digit first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseP {
    n: u64,
    p: u64,
    digits: Vec<u64>,
}

impl BaseP {
    pub fn new(n: u64, p: u64) -> Self {
        let mut digits = Vec::new();
        let mut k = n;
        while k > 0 {
            digits.push(k % p);
            k /= p;
        }
        BaseP { n, p, digits }
    }

    pub fn value(&self) -> u64 {
        self.n
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn reassemble(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

pub fn nu_p(t: u64, p: u64) -> Result<u32, LucasError> {
    if t == 0 {
        return Err(LucasError::ZeroArgument);
    }
    let mut nu = 0;
    let mut k = t;
    while k % p == 0 {
        k /= p;
        nu += 1;
    }
    Ok(nu)
}

/// binom(a, b) mod p for digits a, b < p.
fn small_binom(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let mut num = 1;
    let mut den = 1;
    for k in 0..b {
        num = num * ((a - k) % p) % p;
        den = den * ((k + 1) % p) % p;
    }
    num * mod_inv(den, p).expect("digits are below p") % p
}

/// binom(t, m) mod p as the product of digitwise binomials.
pub fn lucas_binom(t: u64, m: u64, p: u64) -> Result<u64, LucasError> {
    if m > t {
        return Err(LucasError::IndexTooLarge { t, m });
    }
    let tb = BaseP::new(t, p);
    let mb = BaseP::new(m, p);
    let mut acc = 1;
    for i in 0..tb.digits().len() {
        acc = acc * small_binom(tb.digit(i), mb.digit(i), p) % p;
        if acc == 0 {
            break;
        }
    }
    Ok(acc)
}

/// p^{nu_p(t)} together with its combinatorial witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredictedValuation {
    pub order: u64,
    /// Least m >= 1 with binom(t, m) nonzero mod p.
    pub witness: u64,
}

pub fn predicted_valuation(t: u64, p: u64) -> Result<PredictedValuation, LucasError> {
    let nu = nu_p(t, p)?;
    let order = p.pow(nu);
    let witness = (1..=t)
        .find(|&m| lucas_binom(t, m, p).map(|b| b != 0).unwrap_or(false))
        .expect("binom(t, t) = 1");
    debug_assert_eq!(order, witness);
    Ok(PredictedValuation { order, witness })
}

/// Direct series computation of v((1 + delta)^t - 1).
pub fn kummer_oracle(t: u64, p: u64, delta: &TruncatedSeries) -> Result<usize, LucasError> {
    match delta.valuation() {
        Valuation::Exact(1) => {}
        other => return Err(LucasError::BadDelta(other.to_string())),
    }
    let need = p.pow(nu_p(t, p)?) as usize + 2;
    if delta.precision() < need {
        return Err(LucasError::InsufficientPrecision { have: delta.precision(), need });
    }
    let one = TruncatedSeries::one(delta.field(), delta.precision());
    let diff = one.add(delta).pow(t)?.sub(&one);
    diff.valuation().exact().ok_or(LucasError::Indeterminate(diff.precision()))
}

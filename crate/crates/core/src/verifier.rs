//! Orchestration: runs every check for a grid of (p, i), merges the two routes and serializes
//! the outcome.
//!
//! Mismatches are data. Each one becomes a [`Finding`] in the report instead of aborting the run.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ffield::{construct_field, is_prime, FieldElement};
use crate::legendre::{
    deuring_sign, delta_valuation, legs_multipliers, local_valuation_at, supersingular_oracle,
    supersingular_points, theorem_exponent, LegendreError, LocalValuation, SupersingularPoint,
};
use crate::lucas::{kummer_oracle, nu_p, predicted_valuation};
use crate::pseries::{TruncatedSeries, Valuation};
use crate::qforms::{
    comparison_epsilon, delta_expansion, l2_comparison_series_with, max_hasse_divisibility, ord_q,
    sturm_precision, QFormError,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("{0} is not a prime >= 5")]
    BadPrime(u32),
    #[error("index i must be positive")]
    BadIndex,
    #[error(
        "q-route precision {precision} for p = {p}, i = {i} exceeds the ceiling {ceiling}; \
         use --routes lambda or raise --q-ceiling"
    )]
    QCeiling { p: u32, i: u64, precision: usize, ceiling: usize },
    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Routes {
    Lambda,
    Q,
    Both,
}

impl Routes {
    fn lambda(self) -> bool {
        matches!(self, Routes::Lambda | Routes::Both)
    }

    fn q(self) -> bool {
        matches!(self, Routes::Q | Routes::Both)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub primes: Vec<u32>,
    pub indices: Vec<u64>,
    pub routes: Routes,
    /// lambda-route precision is p^nu + margin unless overridden.
    pub precision_margin: usize,
    pub lambda_precision: Option<usize>,
    /// q-route precision is 3t + 2 unless overridden.
    pub q_precision: Option<usize>,
    pub q_ceiling: usize,
    /// Doublings of the lambda-route precision tried on an indeterminate valuation.
    pub max_escalations: u32,
    pub lucas_samples: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(primes: Vec<u32>, indices: Vec<u64>, routes: Routes) -> Self {
        RunConfig {
            primes,
            indices,
            routes,
            precision_margin: 2,
            lambda_precision: None,
            q_precision: None,
            q_ceiling: 2000,
            max_escalations: 3,
            lucas_samples: 16,
            seed: 0x4c32,
        }
    }

    fn q_precision_for(&self, t: u64) -> usize {
        self.q_precision.unwrap_or(3 * t as usize + 2)
    }

    pub fn validate(&self) -> Result<(), VerifierError> {
        for &p in &self.primes {
            if p < 5 || !is_prime(p as u64) {
                return Err(VerifierError::BadPrime(p));
            }
        }
        if self.indices.contains(&0) {
            return Err(VerifierError::BadIndex);
        }
        if self.routes.q() {
            for &p in &self.primes {
                for &i in &self.indices {
                    let t = theorem_exponent(p, i).map_err(|_| VerifierError::BadIndex)?;
                    let precision = self.q_precision_for(t);
                    if precision > self.q_ceiling {
                        return Err(VerifierError::QCeiling { p, i, precision, ceiling: self.q_ceiling });
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    ValuationMismatch,
    IndeterminateValuation,
    PrecisionEscalated,
    Rho0PowTNotOne,
    DeltaValuationNotOne,
    CNotInPrimeField,
    LegsFailure,
    EpsilonSignFlipped,
    QRouteMismatch,
    RouteDisagreement,
    LemmaCheckFailed,
    ComputationError,
}

impl FindingKind {
    /// Informational findings record open questions and do not affect the verdict.
    fn is_failure(self) -> bool {
        !matches!(
            self,
            FindingKind::PrecisionEscalated
                | FindingKind::CNotInPrimeField
                | FindingKind::EpsilonSignFlipped
                | FindingKind::RouteDisagreement
                | FindingKind::IndeterminateValuation
                | FindingKind::ComputationError
        )
    }

    fn is_error(self) -> bool {
        matches!(self, FindingKind::IndeterminateValuation | FindingKind::ComputationError)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub kind: FindingKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda0: Option<Vec<u32>>,
    pub detail: String,
}

impl Finding {
    fn new(kind: FindingKind, lambda0: Option<&FieldElement>, detail: impl Into<String>) -> Self {
        Finding { kind, lambda0: lambda0.map(|l| l.coeffs().to_vec()), detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointReport {
    pub lambda0: Vec<u32>,
    pub modulus: Vec<u32>,
    /// None when indeterminate at the final precision or the lambda route was not run.
    pub valuation: Option<u64>,
    pub precision: Option<usize>,
    pub delta_valuation: Option<u64>,
    pub c: Option<Vec<u32>>,
    pub c_dual: Option<Vec<u32>>,
    /// Modulus of the field holding c and c_dual.
    pub c_modulus: Vec<u32>,
    #[serde(rename = "c_in_Fp")]
    pub c_in_fp: Option<bool>,
    pub rho0_pow_t_is_one: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QRouteReport {
    pub j_max: Option<u64>,
    /// +1 or -1, the global constant used in V_2(Delta^t) - eps Delta^t.
    pub epsilon: i8,
    pub sturm_precision: usize,
    pub precision: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaChecks {
    /// +1 or -1 relating the Hasse coefficient polynomial to H_p; None if neither.
    pub deuring_sign: Option<i8>,
    pub simple_roots: bool,
    /// None when p is above the exhaustive limit.
    pub supersingular_crosscheck: Option<bool>,
    pub legs_pass: bool,
    pub delta_valuation_one: bool,
    pub lucas_kummer_samples: usize,
    pub lucas_kummer_pass: bool,
}

impl LemmaChecks {
    fn pass(&self) -> bool {
        self.deuring_sign.is_some()
            && self.simple_roots
            && self.supersingular_crosscheck != Some(false)
            && self.legs_pass
            && self.delta_valuation_one
            && self.lucas_kummer_pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub p: u32,
    pub i: u64,
    /// i = r p^n with r prime to p.
    pub r: u64,
    pub n: u32,
    pub t: u64,
    pub nu: u32,
    pub predicted_order: u64,
    pub routes: Routes,
    pub points: Vec<PointReport>,
    pub q_route: Option<QRouteReport>,
    pub lemma_checks: LemmaChecks,
    pub c1_pass: bool,
    pub ordq_delta_t: Option<u64>,
    pub verdict: Verdict,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub runs: Vec<RunReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.runs.iter().all(|r| r.verdict == Verdict::Pass)
    }

    /// 0 on pass, 1 on any verification failure, 2 on precision or computation errors only.
    pub fn exit_code(&self) -> i32 {
        if self.runs.iter().any(|r| r.verdict == Verdict::Fail) {
            1
        } else if self.runs.iter().any(|r| r.verdict == Verdict::Error) {
            2
        } else {
            0
        }
    }
}

/// Exhaustive point-count cross-check is run for p up to this bound.
const EXHAUSTIVE_LIMIT: u32 = 31;
const DELTA_PRECISION: usize = 4;

/// Checks that depend on p only.
struct PrimeChecks {
    points: Vec<SupersingularPoint>,
    legs: Vec<Result<crate::legendre::LegsMultipliers, LegendreError>>,
    deltas: Vec<Result<Valuation, LegendreError>>,
    deuring_sign: Option<i8>,
    simple_roots: bool,
    crosscheck: Option<bool>,
    c_modulus: Vec<u32>,
    error: Option<String>,
}

fn exhaustive_crosscheck(p: u32, points: &[SupersingularPoint]) -> Result<bool, LegendreError> {
    let f2 = construct_field(p, 2)?;
    let roots: BTreeSet<FieldElement> = points.iter().map(|pt| pt.lambda0().clone()).collect();
    let mut oracle = BTreeSet::new();
    for lam in FieldElement::all(&f2).filter(|l| !l.is_zero() && !l.is_one()) {
        if supersingular_oracle(&lam)? {
            oracle.insert(lam);
        }
    }
    Ok(roots == oracle)
}

fn prime_checks(p: u32) -> PrimeChecks {
    let c_modulus = construct_field(p, 4).map(|f| f.modulus().to_vec()).unwrap_or_default();
    let deuring = deuring_sign(p).ok().flatten();
    let points = match supersingular_points(p) {
        Ok(points) => points,
        Err(e) => {
            return PrimeChecks {
                points: Vec::new(),
                legs: Vec::new(),
                deltas: Vec::new(),
                deuring_sign: deuring,
                simple_roots: !matches!(e, LegendreError::RepeatedRoot(_)),
                crosscheck: None,
                c_modulus,
                error: Some(e.to_string()),
            }
        }
    };
    let legs = points.par_iter().map(legs_multipliers).collect();
    let deltas = points.par_iter().map(|pt| delta_valuation(pt, DELTA_PRECISION)).collect();
    let crosscheck = (p <= EXHAUSTIVE_LIMIT).then(|| exhaustive_crosscheck(p, &points).unwrap_or(false));
    PrimeChecks { points, legs, deltas, deuring_sign: deuring, simple_roots: true, crosscheck, c_modulus, error: None }
}

/// Random delta = sum c_k s^k with c_1 != 0 over F_p, and t <= 10^4.
fn lucas_kummer_sample(p: u32, samples: usize, rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let f = construct_field(p, 1).map_err(|e| e.to_string())?;
    for _ in 0..samples {
        let t = rng.gen_range(1..=10_000u64);
        let pred = predicted_valuation(t, p as u64).map_err(|e| e.to_string())?;
        let precision = pred.order as usize + 2;
        let mut coeffs = vec![FieldElement::zero(&f); precision];
        coeffs[1] = FieldElement::from_int(&f, rng.gen_range(1..p) as i64);
        for c in coeffs.iter_mut().skip(2) {
            *c = FieldElement::from_int(&f, rng.gen_range(0..p) as i64);
        }
        let delta = TruncatedSeries::new(&f, coeffs);
        let direct = kummer_oracle(t, p as u64, &delta).map_err(|e| e.to_string())?;
        if direct as u64 != pred.order {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Local valuation at one point, doubling the precision while the result is only a lower bound.
fn escalating_valuation(
    point: &SupersingularPoint,
    t: u64,
    start: usize,
    max_escalations: u32,
) -> Result<(LocalValuation, u32), LegendreError> {
    let mut precision = start;
    let mut lv = local_valuation_at(point, t, precision)?;
    let mut steps = 0;
    while lv.valuation.exact().is_none() && steps < max_escalations {
        precision *= 2;
        steps += 1;
        lv = local_valuation_at(point, t, precision)?;
    }
    Ok((lv, steps))
}

fn run_q_route(p: u32, t: u64, m: usize, predicted: u64, findings: &mut Vec<Finding>) -> QRouteReport {
    let sturm = sturm_precision(12 * t as i64);
    let eps = comparison_epsilon(p, t);
    let sign = |e: u32| if e == 1 { 1 } else { -1 };
    let attempt = |e: u32| l2_comparison_series_with(p, t, m, e).and_then(|g| max_hasse_divisibility(&g));
    let report = |j: Result<u64, QFormError>, e: u32| match j {
        Ok(j) => QRouteReport { j_max: Some(j), epsilon: sign(e), sturm_precision: sturm, precision: m, error: None },
        Err(err) => QRouteReport {
            j_max: None,
            epsilon: sign(e),
            sturm_precision: sturm,
            precision: m,
            error: Some(err.to_string()),
        },
    };
    let first = attempt(eps);
    if first.as_ref().ok() == Some(&predicted) {
        return report(first, eps);
    }
    let flipped = p - eps;
    let second = attempt(flipped);
    if second.as_ref().ok() == Some(&predicted) {
        findings.push(Finding::new(
            FindingKind::EpsilonSignFlipped,
            None,
            format!("j_max = {predicted} reached only with epsilon = {}", sign(flipped)),
        ));
        return report(second, flipped);
    }
    match &first {
        Ok(j) => findings.push(Finding::new(
            FindingKind::QRouteMismatch,
            None,
            format!("j_max = {j} with either sign of epsilon, predicted {predicted}"),
        )),
        Err(e) => findings.push(Finding::new(FindingKind::ComputationError, None, format!("q-route: {e}"))),
    }
    report(first, eps)
}

fn run_entry(cfg: &RunConfig, p: u32, i: u64, checks: &PrimeChecks) -> RunReport {
    let t = theorem_exponent(p, i).expect("validated");
    let nu = nu_p(t, p as u64).expect("t >= 1");
    let n = nu_p(i, p as u64).expect("i >= 1");
    let r = i / (p as u64).pow(n);
    let predicted = (p as u64).pow(nu);
    let mut findings = Vec::new();

    if let Some(e) = &checks.error {
        findings.push(Finding::new(FindingKind::LemmaCheckFailed, None, e.clone()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((p as u64) << 32) ^ i);
    let lucas = lucas_kummer_sample(p, cfg.lucas_samples, &mut rng);
    if let Err(e) = &lucas {
        findings.push(Finding::new(FindingKind::ComputationError, None, format!("Lucas sample: {e}")));
    }

    let start = cfg.lambda_precision.unwrap_or(predicted as usize + cfg.precision_margin);
    let locals: Vec<Option<Result<(LocalValuation, u32), LegendreError>>> = checks
        .points
        .par_iter()
        .map(|pt| cfg.routes.lambda().then(|| escalating_valuation(pt, t, start, cfg.max_escalations)))
        .collect();

    let mut legs_pass = checks.error.is_none();
    let mut delta_one = checks.error.is_none();
    let mut points = Vec::with_capacity(checks.points.len());
    for (k, pt) in checks.points.iter().enumerate() {
        let l0 = pt.lambda0();
        let mut row = PointReport {
            lambda0: l0.coeffs().to_vec(),
            modulus: l0.field().modulus().to_vec(),
            valuation: None,
            precision: None,
            delta_valuation: None,
            c: None,
            c_dual: None,
            c_modulus: checks.c_modulus.clone(),
            c_in_fp: None,
            rho0_pow_t_is_one: None,
        };

        match &checks.legs[k] {
            Ok(m) => {
                row.c = Some(m.c.coeffs().to_vec());
                row.c_dual = Some(m.c_dual.coeffs().to_vec());
                row.c_in_fp = Some(m.c_in_prime_field());
                if m.c.is_zero() || !m.product_is_one() {
                    legs_pass = false;
                    findings.push(Finding::new(FindingKind::LegsFailure, Some(l0), format!("c = {}, c_dual = {}", m.c, m.c_dual)));
                }
                if !m.c_in_prime_field() {
                    findings.push(Finding::new(FindingKind::CNotInPrimeField, Some(l0), format!("c = {}", m.c)));
                }
            }
            Err(e) => {
                legs_pass = false;
                findings.push(Finding::new(FindingKind::LegsFailure, Some(l0), e.to_string()));
            }
        }

        match &checks.deltas[k] {
            Ok(v) => {
                row.delta_valuation = v.exact().map(|d| d as u64);
                if *v != Valuation::Exact(1) {
                    delta_one = false;
                    findings.push(Finding::new(FindingKind::DeltaValuationNotOne, Some(l0), format!("v(delta) = {v}")));
                }
            }
            Err(e) => {
                delta_one = false;
                findings.push(Finding::new(FindingKind::ComputationError, Some(l0), e.to_string()));
            }
        }

        match &locals[k] {
            None => {}
            Some(Err(e)) => findings.push(Finding::new(FindingKind::ComputationError, Some(l0), e.to_string())),
            Some(Ok((lv, steps))) => {
                row.precision = Some(lv.precision);
                row.rho0_pow_t_is_one = Some(lv.rho0_pow_t_is_one());
                row.valuation = lv.valuation.exact().map(|v| v as u64);
                if *steps > 0 {
                    findings.push(Finding::new(
                        FindingKind::PrecisionEscalated,
                        Some(l0),
                        format!("precision raised from {start} to {}", lv.precision),
                    ));
                }
                if !lv.rho0_pow_t_is_one() {
                    findings.push(Finding::new(
                        FindingKind::Rho0PowTNotOne,
                        Some(l0),
                        format!("rho(0)^t = {}; valuation taken after normalizing", lv.rho0_pow_t),
                    ));
                }
                match row.valuation {
                    Some(v) if v != predicted => findings.push(Finding::new(
                        FindingKind::ValuationMismatch,
                        Some(l0),
                        format!("v = {v}, predicted {predicted}"),
                    )),
                    Some(_) => {}
                    None => findings.push(Finding::new(
                        FindingKind::IndeterminateValuation,
                        Some(l0),
                        format!("v {} at final precision", lv.valuation),
                    )),
                }
            }
        }
        points.push(row);
    }

    let q_route = cfg.routes.q().then(|| run_q_route(p, t, cfg.q_precision_for(t), predicted, &mut findings));

    if let Some(q) = &q_route {
        let vals: Option<Vec<u64>> = points.iter().map(|pt| pt.valuation).collect();
        if let (Some(j), Some(min)) = (q.j_max, vals.and_then(|v| v.into_iter().min())) {
            if cfg.routes.lambda() && j != min {
                findings.push(Finding::new(
                    FindingKind::RouteDisagreement,
                    None,
                    format!("q-route j_max = {j}, lambda-route minimum = {min}"),
                ));
            }
        }
    }

    let delta_t = delta_expansion(t as usize + 2).reduce(p).map(|d| d.pow(t));
    let ordq = delta_t.as_ref().ok().and_then(|d| ord_q(d).ok()).map(|o| o as u64);
    let c1_pass = ordq == Some(t);
    if !c1_pass {
        findings.push(Finding::new(FindingKind::LemmaCheckFailed, None, format!("ord_q(Delta^t) = {ordq:?}, expected {t}")));
    }

    let lemma_checks = LemmaChecks {
        deuring_sign: checks.deuring_sign,
        simple_roots: checks.simple_roots,
        supersingular_crosscheck: checks.crosscheck,
        legs_pass,
        delta_valuation_one: delta_one,
        lucas_kummer_samples: cfg.lucas_samples,
        lucas_kummer_pass: lucas == Ok(true),
    };
    if checks.deuring_sign.is_none() {
        findings.push(Finding::new(FindingKind::LemmaCheckFailed, None, "Hasse coefficient polynomial differs from H_p"));
    }
    if checks.crosscheck == Some(false) {
        findings.push(Finding::new(FindingKind::LemmaCheckFailed, None, "roots of H_p differ from the point-count set"));
    }
    if lucas == Ok(false) {
        findings.push(Finding::new(FindingKind::LemmaCheckFailed, None, "Lucas prediction differs from the series oracle"));
    }

    let failed = findings.iter().any(|f| f.kind.is_failure()) || !lemma_checks.pass();
    let verdict = if failed {
        Verdict::Fail
    } else if findings.iter().any(|f| f.kind.is_error()) {
        Verdict::Error
    } else {
        Verdict::Pass
    };

    RunReport {
        p,
        i,
        r,
        n,
        t,
        nu,
        predicted_order: predicted,
        routes: cfg.routes,
        points,
        q_route,
        lemma_checks,
        c1_pass,
        ordq_delta_t: ordq,
        verdict,
        findings,
    }
}

/// Runs every configured (p, i) in parallel; the report lists them in configuration order.
pub fn run_verification(cfg: &RunConfig) -> Result<VerificationReport, VerifierError> {
    cfg.validate()?;
    let primes: BTreeSet<u32> = cfg.primes.iter().copied().collect();
    let checks: BTreeMap<u32, PrimeChecks> = primes.into_par_iter().map(|p| (p, prime_checks(p))).collect();
    let pairs: Vec<(u32, u64)> = cfg.primes.iter().flat_map(|&p| cfg.indices.iter().map(move |&i| (p, i))).collect();
    let runs = pairs.par_iter().map(|&(p, i)| run_entry(cfg, p, i, &checks[&p])).collect();
    Ok(VerificationReport { schema_version: SCHEMA_VERSION, runs })
}

fn fmt_opt<T: std::fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn fmt_vec(v: &[u32]) -> String {
    format!("[{}]", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

fn fmt_flag(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn text_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    for run in &report.runs {
        let _ = writeln!(
            out,
            "p = {}, i = {} (r = {}, n = {}), t = {}, nu = {}, predicted order {}",
            run.p, run.i, run.r, run.n, run.t, run.nu, run.predicted_order
        );
        let _ = writeln!(out, "  {:<14} {:>9} {:>9} {:>7} {:>8} {:>9}", "lambda0", "valuation", "precision", "v(delta)", "c in Fp", "rho0^t=1");
        for pt in &run.points {
            let _ = writeln!(
                out,
                "  {:<14} {:>9} {:>9} {:>7} {:>8} {:>9}",
                fmt_vec(&pt.lambda0),
                fmt_opt(&pt.valuation),
                fmt_opt(&pt.precision),
                fmt_opt(&pt.delta_valuation),
                fmt_flag(pt.c_in_fp),
                fmt_flag(pt.rho0_pow_t_is_one)
            );
        }
        if let Some(q) = &run.q_route {
            let _ = writeln!(
                out,
                "  q-route: j_max = {}, epsilon = {:+}, Sturm precision {}",
                fmt_opt(&q.j_max),
                q.epsilon,
                q.sturm_precision
            );
        }
        let _ = writeln!(out, "  C1: {}, ord_q(Delta^t) = {}", if run.c1_pass { "pass" } else { "FAIL" }, fmt_opt(&run.ordq_delta_t));
        for f in &run.findings {
            let at = f.lambda0.as_ref().map(|l| format!(" at {}", fmt_vec(l))).unwrap_or_default();
            let _ = writeln!(out, "  finding {:?}{at}: {}", f.kind, f.detail);
        }
        let _ = writeln!(out, "  verdict: {:?}\n", run.verdict);
    }
    let _ = writeln!(out, "{} run(s), overall {}", report.runs.len(), if report.passed() { "PASS" } else { "FAIL" });
    out
}

pub fn emit_report(report: &VerificationReport, format: Format) -> Result<String, VerifierError> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Text => text_report(report),
    })
}

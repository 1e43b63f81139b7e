//! Legendre curves, the Deuring polynomial, Velu 2-isogenies and the local expansions of the
//! two legs of the level-2 correspondence at supersingular points.
//!
//! Local expansions use s = lambda - lambda_0. Since H_p'(lambda_0) != 0, s and u = H_p(lambda)
//! differ by a unit and define the same valuation.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ffield::{construct_field, poly_roots, Embedding, Field, FieldElement, FieldError, Poly};
use crate::lucas::{nu_p, LucasError};
use crate::pseries::{SeriesError, TruncatedSeries, Valuation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LegendreError {
    #[error("{0} is not a prime >= 5")]
    BadPrime(u32),
    #[error("x = {0} is not the x-coordinate of a 2-torsion point")]
    NotTwoTorsion(String),
    #[error("H_{0} has a repeated root")]
    RepeatedRoot(u32),
    #[error("H_{p} has {found} roots in F_(p^2), expected {expected}")]
    CountMismatch { p: u32, found: usize, expected: usize },
    #[error("lambda = {0} is a cusp")]
    Cusp(String),
    #[error("discriminant is not a unit")]
    SingularModel,
    #[error("no dual branch has constant term {0}")]
    BranchMismatch(String),
    #[error("isogeny validation failed: {0}")]
    Validation(String),
    #[error("t = i(p^2 - 1)/12 is not a positive integer for p = {p}, i = {i}")]
    BadIndex { p: u32, i: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Lucas(#[from] LucasError),
}

/// Commutative ring the Weierstrass coefficients live in.
pub trait CoeffRing: Clone + std::fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// The integer n as an element of the ring `self` belongs to.
    fn int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
}

impl CoeffRing for FieldElement {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn int_like(&self, n: i64) -> Self {
        FieldElement::from_int(self.field(), n)
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        !FieldElement::is_zero(self)
    }
}

impl CoeffRing for TruncatedSeries {
    fn add(&self, other: &Self) -> Self {
        TruncatedSeries::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        TruncatedSeries::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TruncatedSeries::mul(self, other)
    }
    fn int_like(&self, n: i64) -> Self {
        TruncatedSeries::constant(&FieldElement::from_int(self.field(), n), self.precision())
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.precision() > 0 && !self.coeff(0).is_zero()
    }
}

impl CoeffRing for Poly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn int_like(&self, n: i64) -> Self {
        Poly::constant(FieldElement::from_int(self.field(), n))
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }
}

/// y^2 = x^3 + a2 x^2 + a4 x + a6.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveModel<R> {
    pub a2: R,
    pub a4: R,
    pub a6: R,
}

impl<R: CoeffRing> CurveModel<R> {
    pub fn new(a2: R, a4: R, a6: R) -> Self {
        CurveModel { a2, a4, a6 }
    }

    /// E_lambda: y^2 = x(x - 1)(x - lambda).
    pub fn legendre(lambda: &R) -> Self {
        let one = lambda.int_like(1);
        CurveModel { a2: one.add(lambda).mul(&lambda.int_like(-1)), a4: lambda.clone(), a6: lambda.int_like(0) }
    }

    pub fn b2(&self) -> R {
        self.a2.mul(&self.a2.int_like(4))
    }

    pub fn b4(&self) -> R {
        self.a4.mul(&self.a4.int_like(2))
    }

    pub fn b6(&self) -> R {
        self.a6.mul(&self.a6.int_like(4))
    }

    pub fn b8(&self) -> R {
        let four = self.a2.int_like(4);
        four.mul(&self.a2).mul(&self.a6).sub(&self.a4.mul(&self.a4))
    }

    /// -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
    pub fn discriminant(&self) -> R {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        let k = |n| self.a2.int_like(n);
        let t1 = b2.mul(&b2).mul(&b8).mul(&k(-1));
        let t2 = b4.mul(&b4).mul(&b4).mul(&k(-8));
        let t3 = b6.mul(&b6).mul(&k(-27));
        let t4 = b2.mul(&b4).mul(&b6).mul(&k(9));
        t1.add(&t2).add(&t3).add(&t4)
    }

    pub fn c4(&self) -> R {
        let b2 = self.b2();
        b2.mul(&b2).sub(&self.b4().mul(&self.a2.int_like(24)))
    }

    /// x^3 + a2 x^2 + a4 x + a6 at x.
    pub fn cubic_at(&self, x: &R) -> R {
        x.add(&self.a2).mul(x).add(&self.a4).mul(x).add(&self.a6)
    }
}

impl CurveModel<FieldElement> {
    pub fn field(&self) -> &Field {
        self.a2.field()
    }

    pub fn j_invariant(&self) -> Result<FieldElement, LegendreError> {
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(LegendreError::SingularModel);
        }
        let c4 = self.c4();
        Ok((&(&c4 * &c4) * &c4).div(&disc)?)
    }

    pub fn contains(&self, x: &FieldElement, y: &FieldElement) -> bool {
        y * y == self.cubic_at(x)
    }
}

/// A Velu-normalized 2-isogeny with kernel (x0, 0).
///
/// x-map: X = x + v/(x - x0); y-map: Y = y (1 - v/(x - x0)^2). The target invariant
/// differential pulls back to the source one.
#[derive(Clone, Debug, PartialEq)]
pub struct IsogenyData<R> {
    pub source: CurveModel<R>,
    pub target: CurveModel<R>,
    pub kernel_x: R,
    /// 3 x0^2 + 2 a2 x0 + a4, the derivative of the cubic at x0.
    pub v: R,
}

pub fn velu_2isogeny<R: CoeffRing>(e: &CurveModel<R>, x0: &R) -> Result<IsogenyData<R>, LegendreError> {
    if !e.cubic_at(x0).is_zero() {
        return Err(LegendreError::NotTwoTorsion(format!("{x0:?}")));
    }
    let k = |n| x0.int_like(n);
    let v = k(3).mul(x0).mul(x0).add(&k(2).mul(&e.a2).mul(x0)).add(&e.a4);
    let w = x0.mul(&v);
    let target = CurveModel {
        a2: e.a2.clone(),
        a4: e.a4.sub(&k(5).mul(&v)),
        a6: e.a6.sub(&k(4).mul(&e.a2).mul(&v)).sub(&k(7).mul(&w)),
    };
    Ok(IsogenyData { source: e.clone(), target, kernel_x: x0.clone(), v })
}

/// x-coordinate of phi(E[2]) on the target, the kernel of the dual.
///
/// For the other two roots e1, e2 of the cubic, (e1 - x0)(e2 - x0) = v, so both map to
/// -a2 - 2 x0.
pub fn dual_kernel<R: CoeffRing>(phi: &IsogenyData<R>) -> R {
    let x0 = &phi.kernel_x;
    x0.int_like(0).sub(&phi.source.a2).sub(&x0.mul(&x0.int_like(2)))
}

impl IsogenyData<FieldElement> {
    /// Numerator and denominator of the x-map as polynomials in x.
    pub fn x_map(&self) -> (Poly, Poly) {
        let f = self.kernel_x.field();
        let d = &Poly::x(f) - &Poly::constant(self.kernel_x.clone());
        let n = &(&Poly::x(f) * &d) + &Poly::constant(self.v.clone());
        (n, d)
    }

    pub fn map_x(&self, x: &FieldElement) -> Result<FieldElement, LegendreError> {
        let d = x - &self.kernel_x;
        Ok(x + &self.v.div(&d)?)
    }

    pub fn map_point(&self, x: &FieldElement, y: &FieldElement) -> Result<(FieldElement, FieldElement), LegendreError> {
        let d = x - &self.kernel_x;
        let d2 = &d * &d;
        let ratio = self.v.div(&d2)?;
        let one = FieldElement::one(x.field());
        Ok((self.map_x(x)?, y * &(&one - &ratio)))
    }
}

/// Composite x-map of the dual after phi, as numerator and denominator.
fn composite_x_map(phi: &IsogenyData<FieldElement>, dual: &IsogenyData<FieldElement>) -> (Poly, Poly) {
    let (n1, d1) = phi.x_map();
    let shifted = &n1 - &(&d1 * &Poly::constant(dual.kernel_x.clone()));
    let num = &(&n1 * &shifted) + &(&(&d1 * &d1) * &Poly::constant(dual.v.clone()));
    (num, &d1 * &shifted)
}

/// x([2]P) = (x^4 - b4 x^2 - 2 b6 x - b8) / (4x^3 + b2 x^2 + 2 b4 x + b6).
pub fn duplication_x_map(e: &CurveModel<FieldElement>) -> (Poly, Poly) {
    let f = e.field();
    let two = FieldElement::from_int(f, 2);
    let num = Poly::new(
        f,
        vec![-&e.b8(), -&(&two * &e.b6()), -&e.b4(), FieldElement::zero(f), FieldElement::one(f)],
    );
    let den = Poly::new(f, vec![e.b6(), &two * &e.b4(), e.b2(), FieldElement::from_int(f, 4)]);
    (num, den)
}

/// Checks that the dual after phi is 4 x([2]P) + r as rational functions; returns r.
pub fn composite_matches_duplication(phi: &IsogenyData<FieldElement>) -> Result<FieldElement, LegendreError> {
    let dual = velu_2isogeny(&phi.target, &dual_kernel(phi))?;
    let (n, d) = composite_x_map(phi, &dual);
    let (nd, dd) = duplication_x_map(&phi.source);
    let four = Poly::constant(FieldElement::from_int(phi.kernel_x.field(), 4));
    let diff = &(&n * &dd) - &(&four * &(&nd * &d));
    let (q, r) = diff.divrem(&(&d * &dd))?;
    if !r.is_zero() || q.degree().unwrap_or(0) > 0 {
        return Err(LegendreError::Validation("composite of the isogeny and its dual is not [2]".into()));
    }
    Ok(q.coeff(0))
}

/// Maps up to `samples` seeded random points of the source and checks them on the target.
pub fn check_point_images(phi: &IsogenyData<FieldElement>, samples: usize, seed: u64) -> Result<usize, LegendreError> {
    let f = phi.kernel_x.field();
    let mut xs: Vec<FieldElement> = FieldElement::all(f).collect();
    xs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut checked = 0;
    for x in xs {
        if checked == samples {
            break;
        }
        let rhs = phi.source.cubic_at(&x);
        if rhs.is_zero() {
            continue;
        }
        let Some(y) = rhs.sqrt() else { continue };
        let (xx, yy) = phi.map_point(&x, &y)?;
        if !phi.target.contains(&xx, &yy) {
            return Err(LegendreError::Validation(format!("image of ({x}, {y}) is off the target")));
        }
        checked += 1;
    }
    Ok(checked)
}

fn check_prime(p: u32) -> Result<(), LegendreError> {
    if p < 5 || !crate::ffield::is_prime(p as u64) {
        return Err(LegendreError::BadPrime(p));
    }
    Ok(())
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// H_p(lambda) = sum_{i <= (p-1)/2} binom((p-1)/2, i)^2 lambda^i over F_p.
pub fn deuring_polynomial(p: u32) -> Result<Poly, LegendreError> {
    check_prime(p)?;
    let f = construct_field(p, 1)?;
    let h = (p as u64 - 1) / 2;
    let coeffs: Vec<FieldElement> = (0..=h)
        .map(|i| {
            let b = binom(h, i) % p as u64;
            FieldElement::from_int(&f, (b * b % p as u64) as i64)
        })
        .collect();
    Ok(Poly::new(&f, coeffs))
}

/// Coefficient of x^{p-1} in (x(x - 1)(x - lambda))^{(p-1)/2}, as a polynomial in lambda.
pub fn hasse_coefficient_polynomial(p: u32) -> Result<Poly, LegendreError> {
    check_prime(p)?;
    let f = construct_field(p, 1)?;
    let lam = Poly::x(&f);
    let one = Poly::constant(FieldElement::one(&f));
    let zero = Poly::zero(&f);
    // x(x - 1)(x - lambda) = x^3 - (1 + lambda) x^2 + lambda x, indexed by powers of x
    let cubic = [zero.clone(), lam.clone(), -&(&one + &lam), one.clone()];
    let mut acc = vec![one];
    for _ in 0..(p - 1) / 2 {
        let mut next = vec![zero.clone(); acc.len() + 3];
        for (i, a) in acc.iter().enumerate() {
            for (j, c) in cubic.iter().enumerate() {
                next[i + j] = &next[i + j] + &(a * c);
            }
        }
        acc = next;
    }
    Ok(acc.swap_remove(p as usize - 1))
}

/// +1 if the Hasse coefficient polynomial equals H_p, -1 if it equals -H_p.
pub fn deuring_sign(p: u32) -> Result<Option<i8>, LegendreError> {
    let h = deuring_polynomial(p)?;
    let a = hasse_coefficient_polynomial(p)?;
    Ok(if a == h {
        Some(1)
    } else if a == -&h {
        Some(-1)
    } else {
        None
    })
}

/// A simple root lambda_0 of H_p, stored in F_(p^2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupersingularPoint {
    p: u32,
    lambda0: FieldElement,
}

impl SupersingularPoint {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn lambda0(&self) -> &FieldElement {
        &self.lambda0
    }

    pub fn frobenius(&self) -> Self {
        SupersingularPoint { p: self.p, lambda0: crate::ffield::frobenius(&self.lambda0) }
    }
}

/// All roots of H_p in F_(p^2), in element order.
pub fn supersingular_points(p: u32) -> Result<Vec<SupersingularPoint>, LegendreError> {
    let h = deuring_polynomial(p)?;
    if h.gcd(&h.derivative()).degree() != Some(0) {
        return Err(LegendreError::RepeatedRoot(p));
    }
    let f2 = construct_field(p, 2)?;
    let roots = poly_roots(&h, &f2)?;
    let expected = (p as usize - 1) / 2;
    if roots.len() != expected {
        return Err(LegendreError::CountMismatch { p, found: roots.len(), expected });
    }
    if let Some(c) = roots.iter().find(|r| r.is_zero() || r.is_one()) {
        return Err(LegendreError::Cusp(c.to_string()));
    }
    Ok(roots.into_iter().map(|lambda0| SupersingularPoint { p, lambda0 }).collect())
}

/// The least point of each Frobenius orbit.
pub fn orbit_representatives(points: &[SupersingularPoint]) -> Vec<SupersingularPoint> {
    let mut reps: Vec<SupersingularPoint> = points.iter().map(|pt| pt.clone().min(pt.frobenius())).collect();
    reps.sort();
    reps.dedup();
    reps
}

/// #E(F_q) = 1 + q + sum_x chi(f(x)) over the field of definition of `e`.
pub fn count_points(e: &CurveModel<FieldElement>) -> u64 {
    let f = e.field();
    let q = f.order();
    let half = (q - 1) / 2;
    let mut total = 1 + q as i64;
    for x in FieldElement::all(f) {
        let rhs = e.cubic_at(&x);
        if !rhs.is_zero() {
            total += if rhs.pow(half).is_one() { 1 } else { -1 };
        }
    }
    total as u64
}

/// Supersingularity by point count: the trace of Frobenius vanishes mod p.
pub fn is_supersingular(e: &CurveModel<FieldElement>) -> bool {
    count_points(e) % e.field().characteristic() as u64 == 1
}

/// Point-count test of E_lambda0 over F_(p^2); independent of H_p.
pub fn supersingular_oracle(lambda0: &FieldElement) -> Result<bool, LegendreError> {
    if lambda0.is_zero() || lambda0.is_one() {
        return Err(LegendreError::Cusp(lambda0.to_string()));
    }
    let f2 = construct_field(lambda0.field().characteristic(), 2)?;
    let lam = Embedding::canonical(lambda0.field(), &f2)?.apply(lambda0)?;
    Ok(is_supersingular(&CurveModel::legendre(&lam)))
}

/// t = i (p^2 - 1) / 12.
pub fn theorem_exponent(p: u32, i: u64) -> Result<u64, LegendreError> {
    let n = i * (p as u64 * p as u64 - 1);
    if i == 0 || n % 12 != 0 {
        return Err(LegendreError::BadIndex { p, i });
    }
    Ok(n / 12)
}

/// rho(s) = Delta(E') / Delta(E) for E = E_{lambda_0 + s} and E' its Velu quotient by (0, 0).
pub fn leg_ratio_series(point: &SupersingularPoint, precision: usize) -> Result<TruncatedSeries, LegendreError> {
    let f = point.lambda0.field();
    let lam = TruncatedSeries::constant(&point.lambda0, precision).add(&TruncatedSeries::variable(f, precision));
    let e = CurveModel::legendre(&lam);
    let phi = velu_2isogeny(&e, &lam.int_like(0))?;
    let disc = e.discriminant();
    if !disc.is_unit() {
        return Err(LegendreError::SingularModel);
    }
    Ok(phi.target.discriminant().div(&disc)?)
}

/// v(delta) for rho(s) = rho(0)(1 + delta).
pub fn delta_valuation(point: &SupersingularPoint, precision: usize) -> Result<Valuation, LegendreError> {
    let rho = leg_ratio_series(point, precision)?;
    let normalized = rho.scale(&rho.coeff(0).inverse()?);
    Ok(normalized.sub(&TruncatedSeries::one(rho.field(), precision)).valuation())
}

/// Local valuation of L_2(Delta^t) at one supersingular point.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalValuation {
    pub point: SupersingularPoint,
    pub precision: usize,
    /// v(rho^t / rho(0)^t - 1).
    pub valuation: Valuation,
    /// rho(0)^t; the raw series rho^t - 1 has valuation 0 unless this is 1.
    pub rho0_pow_t: FieldElement,
}

impl LocalValuation {
    pub fn rho0_pow_t_is_one(&self) -> bool {
        self.rho0_pow_t.is_one()
    }
}

pub fn local_valuation_at(point: &SupersingularPoint, t: u64, precision: usize) -> Result<LocalValuation, LegendreError> {
    let rho = leg_ratio_series(point, precision)?;
    let rho0 = rho.coeff(0).clone();
    let normalized = rho.scale(&rho0.inverse()?);
    let diff = normalized.pow(t)?.sub(&TruncatedSeries::one(rho.field(), precision));
    Ok(LocalValuation { point: point.clone(), precision, valuation: diff.valuation(), rho0_pow_t: rho0.pow(t) })
}

/// v(L_2(Delta^t)) at every supersingular point for t = i(p^2 - 1)/12, at precision p^nu + margin.
pub fn l2_local_valuation(p: u32, i: u64, margin: usize) -> Result<Vec<LocalValuation>, LegendreError> {
    let t = theorem_exponent(p, i)?;
    let precision = (p as usize).pow(nu_p(t, p as u64)?) + margin;
    supersingular_points(p)?.iter().map(|pt| local_valuation_at(pt, t, precision)).collect()
}

/// First-order multipliers of the two legs at a supersingular point.
#[derive(Clone, Debug, PartialEq)]
pub struct LegsMultipliers {
    /// lambda'(0), the target's level-2 parameter, in F_(p^4).
    pub lambda_target: FieldElement,
    pub c: FieldElement,
    pub c_dual: FieldElement,
}

impl LegsMultipliers {
    pub fn c_in_prime_field(&self) -> bool {
        self.c.pow(self.c.field().characteristic() as u64) == self.c
    }

    pub fn product_is_one(&self) -> bool {
        (&self.c * &self.c_dual).is_one()
    }
}

const LEGS_PRECISION: usize = 3;

/// The six level-2 parameters (e_c - e_a)/(e_b - e_a) of a curve with 2-torsion roots `kernel`
/// and the roots of the cofactor quadratic, sorted lexicographically.
fn lambda_branches(e: &CurveModel<TruncatedSeries>, kernel: &TruncatedSeries) -> Result<Vec<TruncatedSeries>, LegendreError> {
    let b = e.a2.add(kernel);
    let c = e.a4.add(&kernel.mul(&b));
    if !e.a6.add(&kernel.mul(&c)).is_zero() {
        return Err(LegendreError::NotTwoTorsion(format!("{kernel:?}")));
    }
    let disc = b.mul(&b).sub(&c.int_like(4).mul(&c));
    let root = disc.sqrt()?;
    let half = FieldElement::from_int(b.field(), 2).inverse()?;
    let minus_b = b.neg();
    let roots = [kernel.clone(), minus_b.add(&root).scale(&half), minus_b.sub(&root).scale(&half)];
    let mut out = Vec::with_capacity(6);
    for (a, bb, cc) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        let num = roots[cc].sub(&roots[a]);
        let den = roots[bb].sub(&roots[a]);
        out.push(num.div(&den)?);
    }
    out.sort_by(|x, y| x.lex_cmp(y));
    out.dedup_by(|x, y| x.lex_cmp(y) == Ordering::Equal);
    Ok(out)
}

/// c with u o phi = c u + O(u^2), and c_dual along the dual leg, computed over F_(p^4).
///
/// The target branch lambda' is the lexicographically least of the six level-2 parameters of
/// E'. The dual branch is the one whose constant term is lambda_0, preferring lambda_0 + s
/// itself when several qualify.
pub fn legs_multipliers(point: &SupersingularPoint) -> Result<LegsMultipliers, LegendreError> {
    let p = point.p;
    let n = LEGS_PRECISION;
    let f2 = point.lambda0.field().clone();
    let f4 = construct_field(p, 4)?;
    let emb = Embedding::canonical(&f2, &f4)?;
    let lambda0 = emb.apply(&point.lambda0)?;
    let h = deuring_polynomial(p)?.embed(&Embedding::canonical(&construct_field(p, 1)?, &f4)?)?;

    let lam = TruncatedSeries::constant(&lambda0, n).add(&TruncatedSeries::variable(&f4, n));
    let e = CurveModel::legendre(&lam);
    let phi = velu_2isogeny(&e, &lam.int_like(0))?;
    let dual_x = dual_kernel(&phi);
    let target_branch = lambda_branches(&phi.target, &dual_x)?.swap_remove(0);
    let u_target = target_branch.eval_poly(&h);
    if !u_target.coeff(0).is_zero() {
        return Err(LegendreError::Validation("target of the isogeny is not supersingular".into()));
    }
    let h_prime = h.derivative().eval(&lambda0);
    let c = u_target.coeff(1).div(&h_prime)?;

    let dual = velu_2isogeny(&phi.target, &dual_x)?;
    let back_kernel = dual_kernel(&dual);
    let candidates: Vec<TruncatedSeries> = lambda_branches(&dual.target, &back_kernel)?
        .into_iter()
        .filter(|b| *b.coeff(0) == lambda0)
        .collect();
    let back = candidates
        .iter()
        .find(|b| b.lex_cmp(&lam) == Ordering::Equal)
        .or(candidates.first())
        .ok_or_else(|| LegendreError::BranchMismatch(point.lambda0.to_string()))?;
    let c_dual = back.eval_poly(&h).coeff(1).div(u_target.coeff(1))?;
    Ok(LegsMultipliers { lambda_target: target_branch.coeff(0).clone(), c, c_dual })
}

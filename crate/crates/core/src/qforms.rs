//! q-expansions of Delta, the Eisenstein series and the level-2 generators, and the mod-p
//! filtration solver that decides divisibility by powers of the Hasse invariant.
//!
//! Exact expansions are kept over Q (big rationals) and reduced modulo p only at the end.
//! The mod-p side works on raw residues in `[0, p)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::ffield::{is_prime, mod_inv, mod_pow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QFormError {
    #[error("weight {0} is not a nonnegative even integer")]
    BadWeight(i64),
    #[error("E_2 is quasi-modular and only enters through 2E_2(2tau) - E_2(tau)")]
    QuasiModular,
    #[error("coefficient {index} has a denominator divisible by {p}")]
    DenominatorDivisibleByP { index: usize, p: u32 },
    #[error("{0} is not a prime >= 5")]
    BadPrime(u32),
    #[error("(p - 1) = {} does not divide 12t = {}", .p - 1, 12 * .t)]
    IncompatibleWeight { p: u32, t: u64 },
    #[error("expansion vanishes to its full precision {0}; its order is indeterminate")]
    Indeterminate(usize),
    #[error("precision {have} is below the required {need}")]
    InsufficientPrecision { have: usize, need: usize },
    #[error("weight {weight}: monomials have rank {rank}, expected {expected}; raise the precision")]
    Dependent { weight: i64, rank: usize, expected: usize },
    #[error("expansions are not compatible: {0}")]
    Mismatch(String),
    #[error("weight {0} form is not in its own weight space; the series is not modular")]
    NotModular(i64),
}

fn check_prime(p: u32) -> Result<(), QFormError> {
    if p < 5 || !is_prime(p as u64) {
        return Err(QFormError::BadPrime(p));
    }
    Ok(())
}

/// q-expansion with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactQExpansion {
    coeffs: Vec<BigRational>,
    weight: i64,
    level: u8,
}

impl ExactQExpansion {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn reduce(&self, p: u32) -> Result<QExpansion, QFormError> {
        check_prime(p)?;
        let pb = BigInt::from(p);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                let den = c.denom().mod_floor(&pb).to_u64().unwrap();
                let inv = mod_inv(den, p as u64).ok_or(QFormError::DenominatorDivisibleByP { index, p })?;
                let num = c.numer().mod_floor(&pb).to_u64().unwrap();
                Ok((num * inv % p as u64) as u32)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QExpansion { p, coeffs, weight: self.weight, level: self.level })
    }
}

/// q-expansion of a mod-p modular form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    p: u32,
    coeffs: Vec<u32>,
    weight: i64,
    level: u8,
}

fn mul_mod(a: &[u32], b: &[u32], n: usize, p: u32) -> Vec<u32> {
    let mut acc = vec![0u64; n];
    for (i, &ai) in a.iter().enumerate().take(n) {
        if ai == 0 {
            continue;
        }
        let ai = ai as u64;
        for (slot, &bj) in acc[i..].iter_mut().zip(b) {
            *slot += ai * bj as u64;
        }
        // residues are < 2^6 for the primes in play; reduce well before overflow
        if i % 1024 == 1023 {
            acc.iter_mut().for_each(|x| *x %= p as u64);
        }
    }
    acc.into_iter().map(|x| (x % p as u64) as u32).collect()
}

impl QExpansion {
    pub fn new(p: u32, coeffs: Vec<u32>, weight: i64, level: u8) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        QExpansion { p, coeffs, weight, level }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(precision);
        out
    }

    /// Product: weights add, level is the larger of the two.
    pub fn mul(&self, other: &Self) -> Result<Self, QFormError> {
        if self.p != other.p {
            return Err(QFormError::Mismatch(format!("primes {} and {}", self.p, other.p)));
        }
        let n = self.precision().min(other.precision());
        Ok(QExpansion {
            p: self.p,
            coeffs: mul_mod(&self.coeffs, &other.coeffs, n, self.p),
            weight: self.weight + other.weight,
            level: self.level.max(other.level),
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let n = self.precision();
        let mut one = vec![0; n];
        if n > 0 {
            one[0] = 1;
        }
        let mut acc = QExpansion { p: self.p, coeffs: one, weight: 0, level: 1 };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        acc
    }

    /// Difference of two forms of equal weight; level is the larger of the two.
    pub fn sub_scaled(&self, other: &Self, scale: u32) -> Result<Self, QFormError> {
        if self.p != other.p || self.weight != other.weight {
            return Err(QFormError::Mismatch(format!(
                "weights {} and {} over F_{} and F_{}",
                self.weight, other.weight, self.p, other.p
            )));
        }
        let p = self.p as u64;
        let n = self.precision().min(other.precision());
        let coeffs = (0..n)
            .map(|i| ((self.coeffs[i] as u64 + p * p - other.coeffs[i] as u64 * scale as u64) % p) as u32)
            .collect();
        Ok(QExpansion { p: self.p, coeffs, weight: self.weight, level: self.level.max(other.level) })
    }

    /// V_2: q -> q^2. Weight is preserved, level becomes 2.
    pub fn v2(&self) -> Self {
        let n = self.precision();
        let mut coeffs = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if 2 * i < n {
                coeffs[2 * i] = c;
            }
        }
        QExpansion { p: self.p, coeffs, weight: self.weight, level: 2 }
    }

    fn inverse_unit(&self) -> Vec<u32> {
        let p = self.p as u64;
        let n = self.precision();
        let inv0 = mod_inv(self.coeffs[0] as u64, p).expect("unit constant term");
        let mut out = vec![0u64; n];
        out[0] = inv0;
        for k in 1..n {
            let mut acc = 0u64;
            for i in 1..=k {
                acc += self.coeffs[i] as u64 * out[k - i];
            }
            out[k] = (p - acc % p) % p * inv0 % p;
        }
        out.into_iter().map(|x| x as u32).collect()
    }
}

/// Index of the first nonzero coefficient.
pub fn ord_q(f: &QExpansion) -> Result<usize, QFormError> {
    f.coeffs.iter().position(|&c| c != 0).ok_or(QFormError::Indeterminate(f.precision()))
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli number B_n (B_1 = -1/2) from sum_{j<=m} binom(m+1, j) B_j = 0.
pub fn bernoulli(n: usize) -> BigRational {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b.swap_remove(n)
}

fn divisor_sum(n: u64, power: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(power);
            if d * d != n {
                acc += BigInt::from(n / d).pow(power);
            }
        }
        d += 1;
    }
    acc
}

fn mul_exact(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn integral(coeffs: Vec<BigInt>, weight: i64, level: u8) -> ExactQExpansion {
    ExactQExpansion { coeffs: coeffs.into_iter().map(BigRational::from_integer).collect(), weight, level }
}

/// Delta = q prod (1 - q^n)^24 to precision `m`, exactly over Z.
///
/// Uses Jacobi's identity prod (1 - q^n)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2} and three squarings.
pub fn delta_expansion(m: usize) -> ExactQExpansion {
    let n = m.saturating_sub(1);
    let mut eta3 = vec![BigInt::zero(); n];
    let mut k = 0usize;
    while k * (k + 1) / 2 < n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        eta3[k * (k + 1) / 2] = BigInt::from(sign * (2 * k as i64 + 1));
        k += 1;
    }
    let mut prod = eta3;
    for _ in 0..3 {
        prod = mul_exact(&prod, &prod, n);
    }
    let mut coeffs = vec![BigInt::zero(); m];
    for (i, c) in prod.into_iter().enumerate() {
        coeffs[i + 1] = c;
    }
    integral(coeffs, 12, 1)
}

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 4.
pub fn eisenstein_expansion(k: i64, m: usize) -> Result<ExactQExpansion, QFormError> {
    if k < 2 || k % 2 != 0 {
        return Err(QFormError::BadWeight(k));
    }
    if k == 2 {
        return Err(QFormError::QuasiModular);
    }
    let factor = -BigRational::from_integer(BigInt::from(2 * k)) / bernoulli(k as usize);
    let mut coeffs = Vec::with_capacity(m);
    for n in 0..m {
        coeffs.push(if n == 0 {
            BigRational::one()
        } else {
            &factor * BigRational::from_integer(divisor_sum(n as u64, k as u32 - 1))
        });
    }
    Ok(ExactQExpansion { coeffs, weight: k, level: 1 })
}

/// The quasi-modular E_2 = 1 - 24 sum sigma_1(n) q^n. Private on purpose.
fn quasi_modular_e2(m: usize) -> Vec<BigInt> {
    (0..m)
        .map(|n| if n == 0 { BigInt::one() } else { BigInt::from(-24) * divisor_sum(n as u64, 1) })
        .collect()
}

/// M_2 = 2 E_2(2 tau) - E_2(tau), the holomorphic weight-2 Eisenstein series on Gamma_0(2).
pub fn m2_expansion(m: usize) -> ExactQExpansion {
    let e2 = quasi_modular_e2(m);
    let coeffs = (0..m)
        .map(|n| {
            let doubled = if n % 2 == 0 { BigInt::from(2) * &e2[n / 2] } else { BigInt::zero() };
            doubled - &e2[n]
        })
        .collect();
    integral(coeffs, 2, 2)
}

/// 2^{-6t} mod p.
pub fn comparison_epsilon(p: u32, t: u64) -> u32 {
    let two_inv = mod_inv(2, p as u64).unwrap();
    mod_pow(two_inv, 6 * t, p as u64) as u32
}

/// g = Delta(q^2)^t - eps Delta(q)^t mod p with eps = 2^{-6t}, weight 12t, level 2.
pub fn l2_comparison_series(p: u32, t: u64, m: usize) -> Result<QExpansion, QFormError> {
    l2_comparison_series_with(p, t, m, comparison_epsilon(p, t))
}

/// As [`l2_comparison_series`] with an explicit global constant eps.
pub fn l2_comparison_series_with(p: u32, t: u64, m: usize, epsilon: u32) -> Result<QExpansion, QFormError> {
    check_prime(p)?;
    if t == 0 || (12 * t) % (p as u64 - 1) != 0 {
        return Err(QFormError::IncompatibleWeight { p, t });
    }
    let delta_t = delta_expansion(m).reduce(p)?.pow(t);
    delta_t.v2().sub_scaled(&delta_t, epsilon)
}

/// Row-echelon basis of M_k(Gamma_0(2); F_p) to precision M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpaceBasis {
    weight: i64,
    p: u32,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl FormSpaceBasis {
    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn precision(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Whether `coeffs` (truncated to the basis precision) lies in the span.
    pub fn contains(&self, coeffs: &[u32]) -> bool {
        let p = self.p as u64;
        let n = self.precision().min(coeffs.len());
        let mut r: Vec<u64> = coeffs[..n].iter().map(|&c| c as u64).collect();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if piv >= n {
                break;
            }
            let c = r[piv];
            if c == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(row).skip(piv) {
                *x = (*x + p * p - c * y as u64) % p;
            }
        }
        r.iter().all(|&x| x == 0)
    }
}

/// Reduced row echelon form over F_p; returns the nonzero rows and their pivot columns.
pub fn echelonize(mut rows: Vec<Vec<u32>>, p: u32) -> (Vec<Vec<u32>>, Vec<usize>) {
    let p64 = p as u64;
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = mod_inv(rows[rank][col] as u64, p64).unwrap();
        for x in rows[rank].iter_mut() {
            *x = (*x as u64 * inv % p64) as u32;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let c = row[col] as u64;
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = ((*x as u64 + p64 * p64 - c * y as u64) % p64) as u32;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

fn check_weight(k: i64) -> Result<(), QFormError> {
    if k < 0 || k % 2 != 0 {
        return Err(QFormError::BadWeight(k));
    }
    Ok(())
}

/// The mod-p generators M_2 and M_4 = E_4 to precision `m`.
fn generators(p: u32, m: usize) -> Result<(QExpansion, QExpansion), QFormError> {
    Ok((m2_expansion(m).reduce(p)?, eisenstein_expansion(4, m)?.reduce(p)?))
}

/// Echelonized span of the monomials M_2^a M_4^b with 2a + 4b = k.
pub fn level2_basis(k: i64, p: u32, m: usize) -> Result<FormSpaceBasis, QFormError> {
    check_weight(k)?;
    check_prime(p)?;
    let expected = (k / 4) as usize + 1;
    if m < expected + 1 {
        return Err(QFormError::InsufficientPrecision { have: m, need: expected + 1 });
    }
    let (m2, m4) = generators(p, m)?;
    let mut m2_pows = vec![m2.pow(0)];
    for _ in 0..k / 2 {
        m2_pows.push(m2_pows.last().unwrap().mul(&m2)?);
    }
    let mut rows = Vec::with_capacity(expected);
    let mut m4_pow = m4.pow(0);
    for b in 0..=k / 4 {
        let a = ((k - 4 * b) / 2) as usize;
        rows.push(m2_pows[a].mul(&m4_pow)?.coeffs);
        m4_pow = m4_pow.mul(&m4)?;
    }
    let (rows, pivots) = echelonize(rows, p);
    if rows.len() != expected {
        return Err(QFormError::Dependent { weight: k, rank: rows.len(), expected });
    }
    Ok(FormSpaceBasis { weight: k, p, rows, pivots })
}

/// Memoized [`level2_basis`]: concurrent readers, one writer per insert.
#[derive(Default)]
pub struct BasisCache {
    inner: RwLock<HashMap<(i64, u32, usize), Arc<FormSpaceBasis>>>,
}

impl BasisCache {
    pub fn get(&self, k: i64, p: u32, m: usize) -> Result<Arc<FormSpaceBasis>, QFormError> {
        if let Some(b) = self.inner.read().unwrap().get(&(k, p, m)) {
            return Ok(b.clone());
        }
        let built = Arc::new(level2_basis(k, p, m)?);
        let mut w = self.inner.write().unwrap();
        Ok(w.entry((k, p, m)).or_insert(built).clone())
    }

    pub fn len(&self) -> usize {
        self.inner.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn global_basis_cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(BasisCache::default)
}

/// Sturm precision k/4 + 2 for weight-k comparisons on Gamma_0(2).
pub fn sturm_precision(k: i64) -> usize {
    (k / 4) as usize + 2
}

fn check_divisibility_input(g: &QExpansion) -> Result<(), QFormError> {
    check_weight(g.weight)?;
    let need = sturm_precision(g.weight);
    if g.precision() < need {
        return Err(QFormError::InsufficientPrecision { have: g.precision(), need });
    }
    if g.is_zero() {
        return Err(QFormError::Indeterminate(g.precision()));
    }
    Ok(())
}

/// Largest j such that g agrees to its precision with some h in M_{k - j(p-1)}(Gamma_0(2); F_p),
/// by descending linear solves against [`level2_basis`].
pub fn max_hasse_divisibility_by_basis(g: &QExpansion) -> Result<u64, QFormError> {
    check_divisibility_input(g)?;
    let p = g.p;
    let k = g.weight;
    let m = g.precision();
    let step = (p - 1) as i64;
    for j in (0..=k / step).rev() {
        let basis = global_basis_cache().get(k - j * step, p, m)?;
        if basis.contains(&g.coeffs) {
            return Ok(j as u64);
        }
    }
    Err(QFormError::NotModular(k))
}

/// Precomputed data for the normalized-frame solver at a fixed (p, M).
///
/// Every row M_2^{(k-4b)/2} F^b of the weight-k basis, with F = (E_4 - M_2^2)/192 = q + O(q^2),
/// equals M_2^{k/2} x^b for x = F / M_2^2. Membership of g in M_k is therefore membership of
/// g M_2^{-k/2} in span{x^b : b <= k/4}, a unitriangular solve.
struct Frame {
    m2_inv: QExpansion,
    x_powers: Vec<Vec<u32>>,
}

impl Frame {
    fn build(p: u32, m: usize) -> Result<Self, QFormError> {
        let (m2, e4) = generators(p, m)?;
        let m2_inv = QExpansion::new(p, m2.inverse_unit(), -2, 2);
        let inv192 = mod_inv(192, p as u64).unwrap() as u32;
        let m2_sq = m2.mul(&m2)?;
        let f = QExpansion { weight: 4, ..e4.sub_scaled(&m2_sq, 1)? };
        let f = QExpansion::new(p, f.coeffs.iter().map(|&c| (c as u64 * inv192 as u64 % p as u64) as u32).collect(), 4, 2);
        let x = f.mul(&m2_inv.mul(&m2_inv)?)?;
        debug_assert_eq!(x.coeffs.get(1).copied(), Some(1 % p));
        let mut x_powers = Vec::with_capacity(m);
        let mut cur = x.pow(0);
        for _ in 0..m {
            x_powers.push(cur.coeffs.clone());
            cur = cur.mul(&x)?;
        }
        Ok(Frame { m2_inv, x_powers })
    }

    /// True when the x-adic digits of `s` vanish beyond index `max_degree`.
    fn is_low_degree(&self, s: &[u32], max_degree: usize, p: u32) -> bool {
        let p = p as u64;
        let mut r: Vec<u64> = s.iter().map(|&c| c as u64).collect();
        for (b, row) in self.x_powers.iter().enumerate().take(r.len()) {
            let c = r[b];
            if c == 0 {
                continue;
            }
            if b > max_degree {
                return false;
            }
            for (x, &y) in r.iter_mut().zip(row).skip(b) {
                *x = (*x + p * p - c * y as u64) % p;
            }
        }
        true
    }
}

fn global_frames() -> &'static RwLock<HashMap<(u32, usize), Arc<Frame>>> {
    static FRAMES: OnceLock<RwLock<HashMap<(u32, usize), Arc<Frame>>>> = OnceLock::new();
    FRAMES.get_or_init(Default::default)
}

fn frame(p: u32, m: usize) -> Result<Arc<Frame>, QFormError> {
    if let Some(f) = global_frames().read().unwrap().get(&(p, m)) {
        return Ok(f.clone());
    }
    let built = Arc::new(Frame::build(p, m)?);
    Ok(global_frames().write().unwrap().entry((p, m)).or_insert(built).clone())
}

/// Largest j such that g agrees to its precision with some h in M_{k - j(p-1)}(Gamma_0(2); F_p).
///
/// Since A_p has q-expansion 1, this is the largest j with A_p^j | g. Searches j downward from
/// k/(p-1) and returns the first solvable j, working in the normalized frame described on
/// `Frame` (the same spaces as [`level2_basis`], O(M^2) per weight).
pub fn max_hasse_divisibility(g: &QExpansion) -> Result<u64, QFormError> {
    check_divisibility_input(g)?;
    let p = g.p;
    let k = g.weight;
    let m = g.precision();
    let frame = frame(p, m)?;
    let step = (p - 1) as i64;
    let j_top = k / step;
    let step_factor = frame.m2_inv.pow(step as u64 / 2);
    let mut normalizer = frame.m2_inv.pow(((k - j_top * step) / 2) as u64);
    for j in (0..=j_top).rev() {
        let weight = k - j * step;
        let s = mul_mod(&g.coeffs, &normalizer.coeffs, m, p);
        if frame.is_low_degree(&s, (weight / 4) as usize, p) {
            return Ok(j as u64);
        }
        normalizer = normalizer.mul(&step_factor)?;
    }
    Err(QFormError::NotModular(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(e: &ExactQExpansion) -> Vec<i64> {
        e.coeffs().iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
    }

    fn product_oracle(m: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); m];
        if m > 1 {
            c[1] = BigInt::one();
        }
        for n in 1..m {
            for _ in 0..24 {
                for k in (n..m).rev() {
                    let prev = c[k - n].clone();
                    c[k] -= prev;
                }
            }
        }
        c
    }

    #[test]
    fn delta_matches_product() {
        let d = delta_expansion(40);
        let oracle = product_oracle(40);
        for (a, b) in d.coeffs().iter().zip(&oracle) {
            assert_eq!(a.to_integer(), *b);
        }
        assert_eq!(&ints(&delta_expansion(3)), &[0, 1, -24]);
        assert_eq!(delta_expansion(3).reduce(5).unwrap().coeffs(), &[0, 1, 1]);
        assert_eq!(ord_q(&delta_expansion(10).reduce(7).unwrap()).unwrap(), 1);
        // tau(3), tau(4), tau(5)
        assert_eq!(&ints(&delta_expansion(6))[3..], &[252, -1472, 4830]);
    }

    #[test]
    fn bernoulli_values() {
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(bernoulli(1), r(-1, 2));
        assert_eq!(bernoulli(4), r(-1, 30));
        assert_eq!(bernoulli(12), r(-691, 2730));
        assert!(bernoulli(7).is_zero());
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(ints(&eisenstein_expansion(4, 2).unwrap()), vec![1, 240]);
        let e12 = eisenstein_expansion(12, 2).unwrap();
        assert_eq!(e12.coeff(1), &BigRational::new(BigInt::from(65520), BigInt::from(691)));
        let a5 = eisenstein_expansion(4, 20).unwrap().reduce(5).unwrap();
        assert_eq!(a5.coeffs()[0], 1);
        assert!(a5.coeffs()[1..].iter().all(|&c| c == 0));
        assert_eq!(eisenstein_expansion(2, 5), Err(QFormError::QuasiModular));
        assert_eq!(eisenstein_expansion(5, 5), Err(QFormError::BadWeight(5)));
    }

    #[test]
    fn reduction_rejects_p_in_denominator() {
        let e12 = eisenstein_expansion(12, 3).unwrap();
        assert_eq!(e12.reduce(691), Err(QFormError::DenominatorDivisibleByP { index: 1, p: 691 }));
    }

    #[test]
    fn delta_from_eisenstein() {
        // 1728 Delta = E_4^3 - E_6^2
        let m = 12;
        let e4 = eisenstein_expansion(4, m).unwrap().reduce(13).unwrap();
        let e6 = eisenstein_expansion(6, m).unwrap().reduce(13).unwrap();
        let lhs = e4.pow(3).sub_scaled(&e6.pow(2), 1).unwrap();
        let d = delta_expansion(m).reduce(13).unwrap();
        let scaled: Vec<u32> = d.coeffs().iter().map(|&c| (c as u64 * 1728 % 13) as u32).collect();
        assert_eq!(lhs.coeffs(), scaled.as_slice());
    }

    #[test]
    fn m2_is_weight_two_level_two() {
        let m2 = m2_expansion(6);
        assert_eq!((m2.weight(), m2.level()), (2, 2));
        // 1 + 24q + 24q^2 + 96q^3 + 24q^4 + 144q^5
        assert_eq!(ints(&m2), vec![1, 24, 24, 96, 24, 144]);
    }

    #[test]
    fn comparison_series_p5_t2() {
        let g = l2_comparison_series(5, 2, 8).unwrap();
        assert_eq!(comparison_epsilon(5, 2), 1);
        assert_eq!((g.weight(), g.level()), (24, 2));
        assert_eq!(ord_q(&g).unwrap(), 2);
        assert!(matches!(l2_comparison_series(11, 1, 8), Err(QFormError::IncompatibleWeight { .. })));
    }

    #[test]
    fn epsilon_squares_to_one() {
        for p in [5u32, 7, 11, 13, 17, 19] {
            for i in 1..6u64 {
                let t = i * (p as u64 * p as u64 - 1) / 12;
                let e = comparison_epsilon(p, t) as u64;
                assert_eq!(e * e % p as u64, 1);
            }
        }
    }

    #[test]
    fn weight_tags_propagate() {
        let d = delta_expansion(10).reduce(7).unwrap();
        assert_eq!(d.mul(&d).unwrap().weight(), 24);
        let v = d.v2();
        assert_eq!((v.weight(), v.level()), (12, 2));
        assert_eq!(ord_q(&v).unwrap(), 2);
        assert_eq!(ord_q(&d.pow(5)).unwrap(), 5);
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(level2_basis(0, 7, 4).unwrap().dimension(), 1);
        assert_eq!(level2_basis(4, 7, 6).unwrap().dimension(), 2);
        assert_eq!(level2_basis(8, 7, 6).unwrap().dimension(), 3);
        for k in (0..=40).step_by(2) {
            let b = level2_basis(k, 11, sturm_precision(k)).unwrap();
            assert_eq!(b.dimension(), (k / 4) as usize + 1, "k = {k}");
            assert!(b.pivots().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn basis_rejects_low_precision() {
        assert!(matches!(level2_basis(40, 7, 5), Err(QFormError::InsufficientPrecision { .. })));
        assert_eq!(level2_basis(3, 7, 5), Err(QFormError::BadWeight(3)));
    }

    #[test]
    fn hasse_power_is_divisible() {
        // E_4 = A_5 mod 5, so E_4^3 is A_5^3 times the constant 1
        let m = 12;
        let e4 = eisenstein_expansion(4, m).unwrap().reduce(5).unwrap();
        let g = e4.pow(3);
        assert_eq!(max_hasse_divisibility(&g).unwrap(), 3);
        assert_eq!(max_hasse_divisibility_by_basis(&g).unwrap(), 3);
    }

    #[test]
    fn solvers_agree_on_small_cases() {
        for (p, i) in [(5u32, 1u64), (5, 2), (7, 1), (11, 1), (13, 1), (5, 5)] {
            let t = i * (p as u64 * p as u64 - 1) / 12;
            let g = l2_comparison_series(p, t, 3 * t as usize + 2).unwrap();
            assert_eq!(
                max_hasse_divisibility(&g).unwrap(),
                max_hasse_divisibility_by_basis(&g).unwrap(),
                "p = {p}, i = {i}"
            );
        }
    }

    #[test]
    fn divisibility_rejects_zero_and_short_input() {
        let z = QExpansion::new(7, vec![0; 10], 24, 2);
        assert_eq!(max_hasse_divisibility(&z), Err(QFormError::Indeterminate(10)));
        let short = QExpansion::new(7, vec![1; 3], 24, 2);
        assert!(matches!(max_hasse_divisibility(&short), Err(QFormError::InsufficientPrecision { .. })));
    }

    #[test]
    fn ord_q_examples() {
        let e4 = eisenstein_expansion(4, 5).unwrap().reduce(7).unwrap();
        assert_eq!(ord_q(&e4).unwrap(), 0);
        assert_eq!(ord_q(&QExpansion::new(7, vec![0; 4], 0, 1)), Err(QFormError::Indeterminate(4)));
    }
}

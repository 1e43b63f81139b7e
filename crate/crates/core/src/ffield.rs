//! Exact arithmetic in F_p, F_{p^2} and F_{p^4} for small primes p >= 5.
//!
//! Extensions are built as F_p[x]/(f) where f is the first monic irreducible
//! polynomial of the requested degree in lexicographic order on its
//! coefficient vector (a_0, ..., a_{m-1}). Every element carries its field
//! descriptor; arithmetic between elements of different fields panics, and
//! the only sanctioned way across fields is an explicit [`Embedding`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

/// Largest field an exhaustive scan is allowed to walk.
pub const SCAN_LIMIT: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime >= 5")]
    BadPrime(u64),
    #[error("unsupported extension degree {0} (expected 1, 2 or 4)")]
    BadDegree(usize),
    #[error("operands live in different fields: {0} vs {1}")]
    Mismatch(String, String),
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("no canonical embedding of {0} into {1}")]
    NoEmbedding(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field of order {0} is too large for an exhaustive scan")]
    TooLarge(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `None` for zero.
pub fn mod_inv(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(mod_pow(a, p - 2, p))
    }
}

/// Reduce a signed integer into [0, p).
pub fn mod_reduce(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// A finite field F_{p^m} presented as F_p[x]/(modulus).
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    p: u32,
    m: usize,
    /// Monic modulus, low degree first; `[0, 1]` (the polynomial x) for the prime field.
    modulus: Vec<u32>,
}

pub type Field = Arc<FieldDescriptor>;

/// Build the field of order p^m with its deterministic modulus.
pub fn construct_field(p: u32, m: usize) -> Result<Field, FieldError> {
    if p < 5 || !is_prime(p as u64) {
        return Err(FieldError::BadPrime(p as u64));
    }
    let modulus = match m {
        1 => vec![0, 1],
        2 | 4 => first_irreducible(p, m),
        _ => return Err(FieldError::BadDegree(m)),
    };
    Ok(Arc::new(FieldDescriptor { p, m, modulus }))
}

fn first_irreducible(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    for n in 0..count {
        // lexicographic on (a_0, ..., a_{m-1}): a_0 is the most significant digit
        let mut low = digits_msb_first(n, p, m);
        low.push(1);
        if is_irreducible_fp(&low, p) {
            return low;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

fn digits_msb_first(mut n: u64, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0u32; m];
    for slot in out.iter_mut().rev() {
        *slot = (n % p as u64) as u32;
        n /= p as u64;
    }
    out
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible_fp(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut g = digits_msb_first(n, p, d);
            g.push(1);
            if fp_poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn fp_poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    // g is monic
    while r.len() > dg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dg;
            for (j, &gj) in g[..dg].iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - lead * gj as u64 % p) % p;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m as u32)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{} mod {:?}", self.p, self.m, self.modulus)
        }
    }
}

fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Element of a [`FieldDescriptor`], stored as a coefficient vector in the power basis.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: [u32; 4],
}

impl FieldElement {
    pub fn zero(field: &Field) -> Self {
        FieldElement { field: field.clone(), coeffs: [0; 4] }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        let mut coeffs = [0; 4];
        coeffs[0] = mod_reduce(n, field.p as u64) as u32;
        FieldElement { field: field.clone(), coeffs }
    }

    /// Build from power-basis coefficients (low degree first); extra entries must be absent.
    pub fn from_coeffs(field: &Field, coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= field.m, "too many coefficients for {field}");
        let mut c = [0; 4];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = mod_reduce(v, field.p as u64) as u32;
        }
        FieldElement { field: field.clone(), coeffs: c }
    }

    /// The generator x of F_p[x]/(modulus). For the prime field this is 0.
    pub fn generator(field: &Field) -> Self {
        if field.m == 1 {
            Self::zero(field)
        } else {
            Self::from_coeffs(field, &[0, 1])
        }
    }

    /// The n-th element in the total order (0 <= n < p^m).
    pub fn from_index(field: &Field, n: u64) -> Self {
        let d = digits_msb_first(n, field.p, field.m);
        let mut coeffs = [0; 4];
        coeffs[..field.m].copy_from_slice(&d);
        FieldElement { field: field.clone(), coeffs }
    }

    /// Every element of the field, in increasing total order.
    pub fn all(field: &Field) -> impl Iterator<Item = FieldElement> + '_ {
        (0..field.order()).map(move |n| Self::from_index(field, n))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs[..self.field.m]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// True when the element lies in the prime subfield.
    pub fn is_in_prime_field(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) {
        if !same_field(&self.field, &other.field) {
            panic!("{}", FieldError::Mismatch(self.field.to_string(), other.field.to_string()));
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * &other.inverse()?)
    }

    pub fn is_square(&self) -> bool {
        self.is_zero() || self.pow((self.field.order() - 1) / 2).is_one()
    }

    /// The square root that comes first in the element order, if any.
    pub fn sqrt(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        Self::all(&self.field).find(|r| &(r * r) == self)
    }

    /// Scalar multiple by an integer.
    pub fn scale(&self, n: i64) -> Self {
        self * &Self::from_int(&self.field, n)
    }
}

/// x -> x^p.
pub fn frobenius(x: &FieldElement) -> FieldElement {
    x.pow(x.field.p as u64)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on (a_0, ..., a_{m-1}) within a field.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        if !same_field(&self.field, &other.field) {
            return (self.field.p, self.field.m, &self.field.modulus)
                .cmp(&(other.field.p, other.field.m, &other.field.modulus));
        }
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.m == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 if c == 1 => "a".to_string(),
                1 => format!("{c}a"),
                _ if c == 1 => format!("a^{i}"),
                _ => format!("{c}a^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        let p = self.field.p;
        let mut coeffs = [0; 4];
        for i in 0..4 {
            let s = self.coeffs[i] + rhs.coeffs[i];
            coeffs[i] = if s >= p { s - p } else { s };
        }
        FieldElement { field: self.field.clone(), coeffs }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        let p = self.field.p;
        let mut coeffs = [0; 4];
        for i in 0..4 {
            coeffs[i] = (self.coeffs[i] + p - rhs.coeffs[i]) % p;
        }
        FieldElement { field: self.field.clone(), coeffs }
    }
}

impl<'a> Neg for &'a FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.p;
        let mut coeffs = [0; 4];
        for i in 0..4 {
            coeffs[i] = (p - self.coeffs[i]) % p;
        }
        FieldElement { field: self.field.clone(), coeffs }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        let field = &self.field;
        let p = field.p as u64;
        let m = field.m;
        let mut t = [0u64; 7];
        for i in 0..m {
            if self.coeffs[i] == 0 {
                continue;
            }
            for j in 0..m {
                t[i + j] = (t[i + j] + self.coeffs[i] as u64 * rhs.coeffs[j] as u64) % p;
            }
        }
        if m > 1 {
            for i in (m..2 * m - 1).rev() {
                let c = t[i];
                if c == 0 {
                    continue;
                }
                t[i] = 0;
                for (j, &mj) in field.modulus[..m].iter().enumerate() {
                    t[i - m + j] = (t[i - m + j] + p - c * mj as u64 % p) % p;
                }
            }
        }
        let mut coeffs = [0; 4];
        for i in 0..m {
            coeffs[i] = t[i] as u32;
        }
        FieldElement { field: field.clone(), coeffs }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Canonical embedding F_{p^m} -> F_{p^n} (m | n).
///
/// For 2 -> 4 the generator is sent to the first root, in element order, of
/// the source modulus inside the target.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    generator_image: FieldElement,
}

impl Embedding {
    pub fn canonical(source: &Field, target: &Field) -> Result<Self, FieldError> {
        let err = || FieldError::NoEmbedding(source.to_string(), target.to_string());
        if source.p != target.p || target.m % source.m != 0 {
            return Err(err());
        }
        let generator_image = if source.m == 1 {
            FieldElement::zero(target)
        } else if source.m == target.m {
            if !same_field(source, target) {
                return Err(err());
            }
            FieldElement::generator(target)
        } else {
            let prime = construct_field(source.p, 1)?;
            let modulus = Poly::from_u32(prime.clone(), &source.modulus);
            let lifted = modulus.embed(&Embedding::canonical(&prime, target)?)?;
            roots_in(&lifted)?.into_iter().next().ok_or_else(err)?
        };
        Ok(Embedding { source: source.clone(), target: target.clone(), generator_image })
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement, FieldError> {
        if !same_field(x.field(), &self.source) {
            return Err(FieldError::Mismatch(x.field.to_string(), self.source.to_string()));
        }
        let mut acc = FieldElement::zero(&self.target);
        let mut power = FieldElement::one(&self.target);
        for &c in x.coeffs() {
            acc = &acc + &power.scale(c as i64);
            power = &power * &self.generator_image;
        }
        Ok(acc)
    }
}

/// Univariate polynomial over a field, normalized to have a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Self {
        for c in &coeffs {
            assert!(same_field(c.field(), field), "coefficient outside {field}");
        }
        let mut p = Poly { field: field.clone(), coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| FieldElement::from_int(field, c)).collect())
    }

    fn from_u32(field: Field, coeffs: &[u32]) -> Self {
        let c = coeffs.iter().map(|&c| FieldElement::from_int(&field, c as i64)).collect();
        Self::new(&field, c)
    }

    pub fn zero(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    /// The monomial x.
    pub fn x(field: &Field) -> Self {
        Self::from_ints(field, &[0, 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(x.field());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale(i as i64)).collect();
        Self::new(&self.field, c)
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inverse().expect("leading coefficient is nonzero")),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(FieldElement::one(&self.field));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), FieldError> {
        let dd = divisor.degree().ok_or(FieldError::DivisionByZero)?;
        let inv = divisor.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let mut quot = vec![FieldElement::zero(&self.field); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dj) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * dj);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(&self.field, quot), Poly::new(&self.field, rem)))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("b is nonzero").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn embed(&self, e: &Embedding) -> Result<Poly, FieldError> {
        let c = self.coeffs.iter().map(|c| e.apply(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(e.target(), c))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(&self.field, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(&self.field, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![FieldElement::zero(&self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(&self.field, out)
    }
}

fn roots_in(f: &Poly) -> Result<Vec<FieldElement>, FieldError> {
    if f.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let order = f.field.order();
    if order > SCAN_LIMIT {
        return Err(FieldError::TooLarge(order));
    }
    Ok(FieldElement::all(&f.field).filter(|x| f.eval(x).is_zero()).collect())
}

/// All roots of `f` lying in `target`, in increasing element order, by exhaustive scan.
///
/// The coefficients of `f` are carried into `target` by the canonical embedding.
pub fn poly_roots(f: &Poly, target: &Field) -> Result<Vec<FieldElement>, FieldError> {
    if f.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let lifted = f.embed(&Embedding::canonical(f.field(), target)?)?;
    roots_in(&lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_first_irreducible_quadratic(p: u32) -> Vec<u32> {
        for a0 in 0..p {
            for a1 in 0..p {
                let has_root = (0..p as u64)
                    .any(|x| (x * x + a1 as u64 * x + a0 as u64) % p as u64 == 0);
                if !has_root {
                    return vec![a0, a1, 1];
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn prime_field_uses_x_convention() {
        let f = construct_field(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 5);
    }

    #[test]
    fn quadratic_modulus_matches_enumeration() {
        for p in [5u32, 7, 11, 13, 17, 19] {
            let f = construct_field(p, 2).unwrap();
            assert_eq!(f.modulus(), brute_first_irreducible_quadratic(p).as_slice(), "p = {p}");
        }
        assert_eq!(construct_field(5, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn construction_is_deterministic() {
        assert_eq!(construct_field(13, 4).unwrap(), construct_field(13, 4).unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(construct_field(9, 1), Err(FieldError::BadPrime(9)));
        assert_eq!(construct_field(3, 1), Err(FieldError::BadPrime(3)));
        assert_eq!(construct_field(7, 3), Err(FieldError::BadDegree(3)));
    }

    #[test]
    fn quartic_frobenius_closes() {
        let f = construct_field(13, 4).unwrap();
        let q = f.order();
        for n in (0..q).step_by(997) {
            let x = FieldElement::from_index(&f, n);
            assert_eq!(x.pow(q), x);
            let mut y = x.clone();
            for _ in 0..4 {
                y = frobenius(&y);
            }
            assert_eq!(y, x);
        }
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f = construct_field(5, 2).unwrap();
        for a in 0..5 {
            let x = FieldElement::from_int(&f, a);
            assert_eq!(frobenius(&x), x);
        }
        assert!(frobenius(&FieldElement::zero(&f)).is_zero());
    }

    #[test]
    fn roots_of_h5() {
        let f5 = construct_field(5, 1).unwrap();
        let f25 = construct_field(5, 2).unwrap();
        let h = Poly::from_ints(&f5, &[1, 4, 1]);
        assert!(poly_roots(&h, &f5).unwrap().is_empty());
        let roots = poly_roots(&h, &f25).unwrap();
        assert_eq!(roots.len(), 2);
        // Frobenius swaps the two conjugate roots
        assert_eq!(frobenius(&roots[0]), roots[1]);
        assert_eq!(frobenius(&roots[1]), roots[0]);
    }

    #[test]
    fn linear_root() {
        let f7 = construct_field(7, 1).unwrap();
        let g = Poly::from_ints(&f7, &[-1, 1]);
        assert_eq!(poly_roots(&g, &f7).unwrap(), vec![FieldElement::one(&f7)]);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let f7 = construct_field(7, 1).unwrap();
        assert_eq!(poly_roots(&Poly::zero(&f7), &f7), Err(FieldError::ZeroPolynomial));
        assert_eq!(Poly::zero(&f7).degree(), None);
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let f2 = construct_field(11, 2).unwrap();
        let f4 = construct_field(11, 4).unwrap();
        let e = Embedding::canonical(&f2, &f4).unwrap();
        for n in (0..f2.order()).step_by(7) {
            let a = FieldElement::from_index(&f2, n);
            let b = FieldElement::from_index(&f2, (n * 31 + 5) % f2.order());
            assert_eq!(e.apply(&(&a * &b)).unwrap(), &e.apply(&a).unwrap() * &e.apply(&b).unwrap());
            assert_eq!(e.apply(&(&a + &b)).unwrap(), &e.apply(&a).unwrap() + &e.apply(&b).unwrap());
        }
    }

    #[test]
    fn roots_persist_under_embedding() {
        let f1 = construct_field(7, 1).unwrap();
        let f2 = construct_field(7, 2).unwrap();
        let f4 = construct_field(7, 4).unwrap();
        let h = Poly::from_ints(&f1, &[1, 9, 9, 1]);
        let e = Embedding::canonical(&f2, &f4).unwrap();
        let r2 = poly_roots(&h, &f2).unwrap();
        let r4 = poly_roots(&h, &f4).unwrap();
        for r in &r2 {
            assert!(r4.contains(&e.apply(r).unwrap()));
        }
        let e1 = Embedding::canonical(&f1, &f2).unwrap();
        for r in poly_roots(&h, &f1).unwrap() {
            assert!(r2.contains(&e1.apply(&r).unwrap()));
        }
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_fields_panic() {
        let a = FieldElement::one(&construct_field(5, 1).unwrap());
        let b = FieldElement::one(&construct_field(5, 2).unwrap());
        let _ = &a + &b;
    }

    #[test]
    fn sqrt_takes_first_root() {
        let f5 = construct_field(5, 1).unwrap();
        let four = FieldElement::from_int(&f5, 4);
        assert_eq!(four.sqrt().unwrap(), FieldElement::from_int(&f5, 2));
        assert!(FieldElement::from_int(&f5, 2).sqrt().is_none());
    }

    #[test]
    fn poly_division_and_gcd() {
        let f = construct_field(11, 1).unwrap();
        let a = Poly::from_ints(&f, &[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&f, &[1, 1]); // x + 1
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, Poly::from_ints(&f, &[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&Poly::from_ints(&f, &[-1, 1])), Poly::from_ints(&f, &[-1, 1]));
    }
}

//! Truncated power series over a finite field with explicit precision.
//!
//! A series stores c_0..c_{N-1} and means "known modulo u^N". Every operation
//! returns the precision its inputs actually support, so a valuation read off
//! the result is either exact or explicitly indeterminate.

use std::fmt;

use thiserror::Error;

use crate::ffield::{Embedding, Field, FieldElement, FieldError, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("constant term must be exactly 1, found {0}")]
    ConstantNotOne(String),
    #[error("inner series of a composition must have zero constant term, found {0}")]
    NonzeroConstant(String),
    #[error("series is not a unit (constant term is zero)")]
    NotAUnit,
    #[error("square root needs a nonzero constant term; factor out even powers of u first")]
    ZeroConstant,
    #[error("constant term {0} is not a square in its field; lift to the quadratic extension")]
    NonSquare(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Least index with a nonzero coefficient, or a lower bound when every stored coefficient vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Exact(usize),
    /// All N known coefficients are zero: the valuation is at least N.
    AtLeast(usize),
}

impl Valuation {
    pub fn exact(self) -> Option<usize> {
        match self {
            Valuation::Exact(v) => Some(v),
            Valuation::AtLeast(_) => None,
        }
    }

    /// The exact value, or the known lower bound.
    pub fn lower_bound(self) -> usize {
        match self {
            Valuation::Exact(v) | Valuation::AtLeast(v) => v,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Exact(v) => write!(f, "{v}"),
            Valuation::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    field: Field,
    coeffs: Vec<FieldElement>,
}

fn mul_trunc(a: &[FieldElement], b: &[FieldElement], n: usize, field: &Field) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::zero(field); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

impl TruncatedSeries {
    /// Precision is `coeffs.len()`.
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Self {
        TruncatedSeries { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field, precision: usize) -> Self {
        Self::new(field, vec![FieldElement::zero(field); precision])
    }

    pub fn constant(c: &FieldElement, precision: usize) -> Self {
        let mut s = Self::zero(c.field(), precision);
        if precision > 0 {
            s.coeffs[0] = c.clone();
        }
        s
    }

    pub fn one(field: &Field, precision: usize) -> Self {
        Self::constant(&FieldElement::one(field), precision)
    }

    /// The uniformizer u itself.
    pub fn variable(field: &Field, precision: usize) -> Self {
        let mut s = Self::zero(field, precision);
        if precision > 1 {
            s.coeffs[1] = FieldElement::one(field);
        }
        s
    }

    pub fn from_ints(field: &Field, coeffs: &[i64], precision: usize) -> Self {
        let mut s = Self::zero(field, precision);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = FieldElement::from_int(field, c);
        }
        s
    }

    pub fn from_poly(f: &Poly, precision: usize) -> Self {
        Self::new(f.field(), (0..precision).map(|i| f.coeff(i)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of u^i; panics when i is at or beyond the precision.
    pub fn coeff(&self, i: usize) -> &FieldElement {
        assert!(i < self.coeffs.len(), "coefficient {i} is beyond precision {}", self.coeffs.len());
        &self.coeffs[i]
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => Valuation::Exact(i),
            None => Valuation::AtLeast(self.coeffs.len()),
        }
    }

    /// All known coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision <= self.precision(), "cannot raise precision by truncation");
        Self::new(&self.field, self.coeffs[..precision].to_vec())
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        Self::new(&self.field, (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        Self::new(&self.field, (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    /// Product known modulo u^min(N_a + v_b, N_b + v_a).
    pub fn mul(&self, other: &Self) -> Self {
        let va = self.valuation().lower_bound();
        let vb = other.valuation().lower_bound();
        let n = (self.precision() + vb).min(other.precision() + va);
        Self::new(&self.field, mul_trunc(&self.coeffs, &other.coeffs, n, &self.field))
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let n = self.precision();
        if n == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0].inverse().map_err(|_| SeriesError::NotAUnit)?;
        let mut out: Vec<FieldElement> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = FieldElement::zero(&self.field);
            for i in 1..=k {
                acc = &acc + &(&self.coeffs[i] * &out[k - i]);
            }
            out.push(-&(&acc * &inv0));
        }
        Ok(Self::new(&self.field, out))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// s^t for s with constant term exactly 1, by binary exponentiation.
    pub fn pow(&self, t: u64) -> Result<Self, SeriesError> {
        if self.precision() > 0 && !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantNotOne(self.coeffs[0].to_string()));
        }
        Ok(self.pow_unchecked(t))
    }

    /// Binary powering with no constraint on the constant term.
    pub fn pow_unchecked(&self, mut t: u64) -> Self {
        let n = self.precision();
        let mut acc = Self::one(&self.field, n);
        let mut base = self.clone();
        while t > 0 {
            if t & 1 == 1 {
                acc = acc.mul(&base);
            }
            t >>= 1;
            if t > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// f(g(u)) for g with zero constant term.
    ///
    /// Precision of the result is min(N_f * v(g), N_g): the unknown tail of f
    /// contributes O(g^{N_f}) = O(u^{N_f v(g)}), and the unknown tail of g
    /// contributes at worst O(u^{N_g}).
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        if g.precision() > 0 && !g.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant(g.coeffs[0].to_string()));
        }
        let vg = g.valuation().lower_bound().max(1);
        let n = (self.precision().saturating_mul(vg)).min(g.precision());
        let mut acc = vec![FieldElement::zero(&self.field); n];
        for c in self.coeffs.iter().rev() {
            acc = mul_trunc(&acc, &g.coeffs, n, &self.field);
            if n > 0 {
                acc[0] = &acc[0] + c;
            }
        }
        Ok(Self::new(&self.field, acc))
    }

    /// Square root by Newton iteration r <- (r + s/r)/2, doubling precision each step.
    ///
    /// The constant term of the result is the first square root of c_0 in element order.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let n = self.precision();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstant);
        }
        let r0 = c0.sqrt().ok_or_else(|| SeriesError::NonSquare(c0.to_string()))?;
        let half = FieldElement::from_int(&self.field, 2).inverse()?;
        let mut r = Self::constant(&r0, 1);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let r_ext = r.extend_zero(prec);
            let quotient = self.truncate(prec).div(&r_ext)?;
            r = r_ext.add(&quotient).scale(&half);
        }
        Ok(r)
    }

    fn extend_zero(&self, precision: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(precision, FieldElement::zero(&self.field));
        Self::new(&self.field, c)
    }

    pub fn embed(&self, e: &Embedding) -> Result<Self, SeriesError> {
        let c = self.coeffs.iter().map(|c| e.apply(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(e.target(), c))
    }

    /// Evaluate a polynomial at this series (Horner).
    pub fn eval_poly(&self, f: &Poly) -> Self {
        let n = self.precision();
        let mut acc = Self::zero(&self.field, n);
        for c in f.coeffs().iter().rev() {
            acc = Self::new(&self.field, mul_trunc(&acc.coeffs, &self.coeffs, n, &self.field));
            if n > 0 {
                acc.coeffs[0] = &acc.coeffs[0] + c;
            }
        }
        acc
    }

    /// Compare coefficient vectors lexicographically, elements in their total order.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})u^{i}"))
            .collect();
        write!(f, "{} + O(u^{})", if terms.is_empty() { "0".into() } else { terms.join(" + ") }, self.precision())
    }
}

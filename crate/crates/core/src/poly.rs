//! Dense univariate polynomials over the rationals, plus the two scalar lemmas
//! behind the codimension-4 construction.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::format_rational;
use crate::scalar::Rational;

/// Coefficients in ascending degree; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c · t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Lowest power of `t` with a nonzero coefficient (`None` for zero).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format_rational(c),
                1 => format!("({})t", format_rational(c)),
                _ => format!("({})t^{k}", format_rational(c)),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `Σ_i b_i^l Π_{j≠i} (b_i − b_j)^{-1}`, which equals 1 for `l = m−1` and 0 below.
pub fn comb_sum(b: &[Rational], l: usize) -> Result<Rational> {
    let m = b.len();
    if m < 2 {
        return Err(Error::BadDimension(format!("need at least two entries, got {m}")));
    }
    if l > m - 1 {
        return Err(Error::IndexOutOfRange { index: l, max: m - 1 });
    }
    let distinct: BTreeSet<&Rational> = b.iter().collect();
    if distinct.len() != m || b.iter().any(Zero::is_zero) {
        return Err(Error::DuplicateEntries);
    }
    let mut total = Rational::zero();
    for (i, bi) in b.iter().enumerate() {
        let mut denom = Rational::one();
        for (j, bj) in b.iter().enumerate() {
            if i != j {
                denom *= bi - bj;
            }
        }
        total += num_traits::pow(bi.clone(), l) / denom;
    }
    Ok(total)
}

/// Exact square root of a positive rational square, if it is one.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if !r.is_positive() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Truncated power-series square root: `P` of degree ≤ `r` with `t^{r+1} | P² − χ`.
///
/// Uses the recursion `c₀ = a`, `2c₀c_j + Σ_{0<i<j} c_i c_{j−i} = b_j`, with `a` the
/// positive square root of `χ(0)`, which must be a rational square.
pub fn poly_sqrt_truncate(chi: &Poly, r: usize) -> Result<Poly> {
    if chi.degree() > r {
        return Err(Error::DegreeTooHigh { degree: chi.degree(), order: r });
    }
    let b0 = chi.coeff(0);
    let c0 = rational_sqrt(&b0).ok_or_else(|| Error::NonSquareConstantTerm(format_rational(&b0)))?;
    let two_c0 = &c0 + &c0;
    let mut c = vec![c0];
    for j in 1..=r {
        let cross: Rational = (1..j).map(|i| &c[i] * &c[j - i]).sum();
        c.push((chi.coeff(j) - cross) / &two_c0);
    }
    Ok(Poly::new(c))
}

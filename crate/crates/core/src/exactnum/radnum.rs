use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{
    big_to_u64, format_rational, gcd_u64, is_positive, parse_rational, smallest_prime_factor, square_free_split,
    DEFAULT_FACTOR_BOUND,
};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// A real number `Σ q_s · √s` over squarefree radicands `s ≥ 1`.
///
/// The term map never stores a zero coefficient and every key is squarefree, so
/// two values are equal exactly when their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadNum {
    terms: BTreeMap<u64, Rational>,
}

impl RadNum {
    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(1, r);
        }
        RadNum { terms }
    }

    /// `coeff · √radicand` for an arbitrary positive radicand (square factors are extracted).
    pub fn term(coeff: Rational, radicand: u64) -> Result<Self> {
        if radicand == 0 {
            return Ok(RadNum::zero());
        }
        let (square, free) = square_free_split(radicand, DEFAULT_FACTOR_BOUND)?;
        let mut out = RadNum::zero();
        out.push(free, coeff * Rational::from_integer(square.into()));
        Ok(out)
    }

    /// `√s` for squarefree `s` (checked in debug builds).
    pub fn sqrt_squarefree(s: u64) -> Self {
        debug_assert_eq!(square_free_split(s, DEFAULT_FACTOR_BOUND).map(|p| p.0).ok(), Some(1));
        let mut out = RadNum::zero();
        out.push(s, Rational::one());
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(s, q)| (*s, q))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `√s` (zero when absent).
    pub fn coeff(&self, s: u64) -> Rational {
        self.terms.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn rational_part(&self) -> Rational {
        self.coeff(1)
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&s| s == 1)
    }

    /// Radicands other than 1, ascending.
    pub fn radicands(&self) -> Vec<u64> {
        self.terms.keys().copied().filter(|&s| s != 1).collect()
    }

    fn push(&mut self, s: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(existing) => {
                *existing += q;
                if existing.is_zero() {
                    self.terms.remove(&s);
                }
            }
            None => {
                self.terms.insert(s, q);
            }
        }
    }

    fn scale(&self, r: &Rational) -> RadNum {
        if r.is_zero() {
            return RadNum::zero();
        }
        RadNum { terms: self.terms.iter().map(|(s, q)| (*s, q * r)).collect() }
    }

    fn primes(&self) -> BTreeSet<u64> {
        let mut primes = BTreeSet::new();
        for &s in self.terms.keys() {
            let mut n = s;
            while n > 1 {
                let p = smallest_prime_factor(n);
                primes.insert(p);
                n /= p;
            }
        }
        primes
    }

    /// The field automorphism √p ↦ −√p.
    fn conjugate_at(&self, p: u64) -> RadNum {
        RadNum {
            terms: self.terms.iter().map(|(s, q)| (*s, if s % p == 0 { -q.clone() } else { q.clone() })).collect(),
        }
    }

    /// Writes `self = a + b·√p` where neither `a` nor `b` involves `p`.
    fn split_at(&self, p: u64) -> (RadNum, RadNum) {
        let mut a = RadNum::zero();
        let mut b = RadNum::zero();
        for (s, q) in &self.terms {
            if s % p == 0 {
                b.terms.insert(s / p, q.clone());
            } else {
                a.terms.insert(*s, q.clone());
            }
        }
        (a, b)
    }

    /// Exact sign, decided by peeling off one prime at a time:
    /// for `a + b√p` with `a`, `b` of opposite signs, compare `a²` with `p·b²`.
    pub fn signum(&self) -> Ordering {
        if self.is_rational() {
            return rational_sign(&self.rational_part());
        }
        let largest = *self.terms.keys().next_back().expect("non-rational value has terms");
        let p = smallest_prime_factor(largest);
        let (a, b) = self.split_at(p);
        let sa = a.signum();
        let sb = b.signum();
        match (sa, sb) {
            (_, Ordering::Equal) => sa,
            (Ordering::Equal, _) => sb,
            _ if sa == sb => sa,
            _ => {
                let p_rad = RadNum::from_rational(Rational::from_integer(p.into()));
                let diff = a.clone() * &a - p_rad * &b * &b;
                match diff.signum() {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("√{p} is irrational over the remaining radicands"),
                }
            }
        }
    }

    pub fn abs(&self) -> RadNum {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(s, q)| Scalar::to_f64(q) * (*s as f64).sqrt()).sum()
    }
}

fn rational_sign(r: &Rational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if is_positive(r) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn mul_radicands(a: u64, b: u64) -> (u64, u64) {
    let g = gcd_u64(a, b);
    let free = (a / g).checked_mul(b / g).expect("radicand product overflowed 64 bits");
    (g, free)
}

pub fn rad_add(a: &RadNum, b: &RadNum) -> RadNum {
    a.clone() + b
}

pub fn rad_mul(a: &RadNum, b: &RadNum) -> RadNum {
    a.clone() * b
}

/// Multiplies by the conjugates √p ↦ −√p for every prime `p` present until the
/// denominator is rational.
pub fn rad_inverse(a: &RadNum) -> Result<RadNum> {
    if a.is_zero() {
        return Err(Error::ZeroInverse);
    }
    let mut num = RadNum::one();
    let mut den = a.clone();
    for p in a.primes() {
        let conj = den.conjugate_at(p);
        num = num * &conj;
        den = den * &conj;
    }
    debug_assert!(den.is_rational());
    let r = den.rational_part();
    Ok(num.scale(&r.recip()))
}

pub fn rad_sqrt_rational(r: &Rational) -> Result<RadNum> {
    rad_sqrt_rational_with_bound(r, DEFAULT_FACTOR_BOUND)
}

/// `√(p/q) = (1/q)·√(pq)` with `pq` reduced to square times squarefree.
pub fn rad_sqrt_rational_with_bound(r: &Rational, bound: u64) -> Result<RadNum> {
    if !is_positive(r) {
        return Err(Error::NegativeRadicand(format_rational(r)));
    }
    let p = big_to_u64(r.numer())?;
    let q = big_to_u64(r.denom())?;
    let pq = p.checked_mul(q).ok_or(Error::RadicandOverflow)?;
    let (square, free) = square_free_split(pq, bound)?;
    let coeff = Rational::new(square.into(), q.into());
    let mut out = RadNum::zero();
    out.push(free, coeff);
    Ok(out)
}

impl Zero for RadNum {
    fn zero() -> Self {
        RadNum { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for RadNum {
    fn one() -> Self {
        RadNum::from_rational(Rational::one())
    }
}

impl From<Rational> for RadNum {
    fn from(r: Rational) -> Self {
        RadNum::from_rational(r)
    }
}

impl AddAssign<&RadNum> for RadNum {
    fn add_assign(&mut self, rhs: &RadNum) {
        for (s, q) in &rhs.terms {
            self.push(*s, q.clone());
        }
    }
}

impl Add<&RadNum> for RadNum {
    type Output = RadNum;
    fn add(mut self, rhs: &RadNum) -> RadNum {
        self += rhs;
        self
    }
}

impl Add for RadNum {
    type Output = RadNum;
    fn add(self, rhs: RadNum) -> RadNum {
        self + &rhs
    }
}

impl Neg for RadNum {
    type Output = RadNum;
    fn neg(self) -> RadNum {
        RadNum { terms: self.terms.into_iter().map(|(s, q)| (s, -q)).collect() }
    }
}

impl Sub<&RadNum> for RadNum {
    type Output = RadNum;
    fn sub(mut self, rhs: &RadNum) -> RadNum {
        for (s, q) in &rhs.terms {
            self.push(*s, -q.clone());
        }
        self
    }
}

impl Sub for RadNum {
    type Output = RadNum;
    fn sub(self, rhs: RadNum) -> RadNum {
        self - &rhs
    }
}

impl Mul<&RadNum> for RadNum {
    type Output = RadNum;
    fn mul(self, rhs: &RadNum) -> RadNum {
        let mut out = RadNum::zero();
        for (a, qa) in &self.terms {
            for (b, qb) in &rhs.terms {
                let (g, free) = mul_radicands(*a, *b);
                out.push(free, qa * qb * Rational::from_integer(g.into()));
            }
        }
        out
    }
}

impl Mul for RadNum {
    type Output = RadNum;
    fn mul(self, rhs: RadNum) -> RadNum {
        self * &rhs
    }
}

impl PartialOrd for RadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other).signum()
    }
}

impl fmt::Display for RadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (s, q)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if *s == 1 {
                write!(f, "{}", format_rational(q))?;
            } else {
                write!(f, "({})√{}", format_rational(q), s)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadNum({self})")
    }
}

impl Scalar for RadNum {
    const KIND: &'static str = "radical";

    fn from_rational(r: &Rational) -> Self {
        RadNum::from_rational(r.clone())
    }

    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rational_part())
    }

    fn try_inv(&self) -> Result<Self> {
        rad_inverse(self)
    }

    fn signum_ord(&self) -> Ordering {
        self.signum()
    }

    fn to_f64(&self) -> f64 {
        RadNum::to_f64(self)
    }

    fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(s, q)| json!({ "radicand": s, "coeff": format_rational(q) })).collect())
    }

    fn from_json(value: &Value) -> Result<Self> {
        let items = match value {
            Value::Array(items) => items,
            // a bare rational string is accepted as a radical-free value
            Value::String(_) | Value::Number(_) => return Ok(RadNum::from_rational(Rational::from_json(value)?)),
            other => return Err(Error::Parse(format!("expected radical array, got {other}"))),
        };
        let mut out = RadNum::zero();
        for item in items {
            let s = item
                .get("radicand")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse(format!("missing radicand in {item}")))?;
            let q = match item.get("coeff") {
                Some(Value::String(c)) => parse_rational(c)?,
                _ => return Err(Error::Parse(format!("missing coeff in {item}"))),
            };
            out += &RadNum::term(q, s)?;
        }
        Ok(out)
    }
}

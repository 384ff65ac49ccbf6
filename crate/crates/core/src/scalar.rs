//! The scalar abstraction shared by the linear-algebra and Lie-algebra layers.
//!
//! Two scalar kinds exist: [`Rational`] for every catalog algebra and
//! [`RadNum`](crate::exactnum::RadNum) for the radical-valued construction.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational};

/// Arbitrary-precision exact fraction, always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Exact ordered field-like scalar.
///
/// Every arithmetic operation is exact; there is no tolerance anywhere in the crate.
pub trait Scalar:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + 'static
{
    /// Tag used in the algebra JSON `"scalar"` field.
    const KIND: &'static str;

    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// Returns the value as a rational if it has no irrational part.
    fn as_rational(&self) -> Option<Rational>;

    fn try_inv(&self) -> Result<Self>;

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.try_inv()?)
    }

    /// Exact sign relative to zero.
    fn signum_ord(&self) -> Ordering;

    fn is_positive(&self) -> bool {
        self.signum_ord() == Ordering::Greater
    }

    fn to_f64(&self) -> f64;

    fn to_json(&self) -> Value;

    fn from_json(value: &Value) -> Result<Self>;
}

impl Scalar for Rational {
    const KIND: &'static str = "rational";

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.recip())
        }
    }

    fn signum_ord(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if Signed::is_positive(self) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
            other => Err(Error::Parse(format!("expected rational string, got {other}"))),
        }
    }
}

//! Exact scalars: rational helpers and the real multiquadratic ring [`RadNum`].

mod radnum;

pub use radnum::{rad_add, rad_inverse, rad_mul, rad_sqrt_rational, rad_sqrt_rational_with_bound, RadNum};

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Default trial-division bound for squarefree extraction.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Splits `n = f² · s` with `s` squarefree, by trial division up to `bound`.
pub(crate) fn square_free_split(n: u64, bound: u64) -> Result<(u64, u64)> {
    debug_assert!(n > 0);
    let mut rest = n;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut d = 2u64;
    while d <= bound && d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut mult = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                mult += 1;
            }
            for _ in 0..mult / 2 {
                square *= d;
            }
            if mult % 2 == 1 {
                free *= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        // rest has no prime factor <= min(d-1, bound); it is prime iff it is below d².
        if d.saturating_mul(d) > rest {
            free = free.checked_mul(rest).ok_or(Error::RadicandOverflow)?;
        } else {
            return Err(Error::FactorBoundExceeded { value: n.to_string(), bound });
        }
    }
    Ok((square, free))
}

pub(crate) fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

pub(crate) fn big_to_u64(n: &BigInt) -> Result<u64> {
    n.abs().to_u64().ok_or(Error::RadicandOverflow)
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn is_positive(r: &Rational) -> bool {
    Signed::is_positive(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(parse_rational("10/-4").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational(" 3 ").unwrap(), int(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn squarefree_split() {
        assert_eq!(square_free_split(1, 10).unwrap(), (1, 1));
        assert_eq!(square_free_split(8, 10).unwrap(), (2, 2));
        assert_eq!(square_free_split(60, 10).unwrap(), (2, 15));
        assert_eq!(square_free_split(49 * 13, 100).unwrap(), (7, 13));
        // 1_000_003 is prime; above the bound squared test fails loudly
        assert_eq!(square_free_split(1_000_003, 1_000_000).unwrap(), (1, 1_000_003));
        let p = 1_000_003u64;
        assert!(matches!(square_free_split(p * p, 1000), Err(Error::FactorBoundExceeded { .. })));
    }

    #[test]
    fn smallest_prime() {
        assert_eq!(smallest_prime_factor(15), 3);
        assert_eq!(smallest_prime_factor(13), 13);
        assert_eq!(smallest_prime_factor(22), 2);
    }
}

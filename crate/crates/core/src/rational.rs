//! Arbitrary-precision rational numbers and conversions.
//!
//! `BigRational` already maintains the invariants we need (always reduced,
//! positive denominator), so this module only adds constructors, parsing and
//! the string form used by every serialized report (`p/q`, or `p` when the
//! denominator is one).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in rational literal: {0}")]
    BadInt(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parse `p`, `p/q` or `-p/q` with optional surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let mut parts = s.splitn(2, '/');
    let num_str = parts.next().unwrap().trim();
    let num: BigInt = num_str
        .parse()
        .map_err(|_| ParseRationalError::BadInt(num_str.to_string()))?;
    match parts.next() {
        None => Ok(Rational::from(num)),
        Some(d) => {
            let d = d.trim();
            let den: BigInt = d
                .parse()
                .map_err(|_| ParseRationalError::BadInt(d.to_string()))?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator);
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical report form: `p` for integers, `p/q` otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Nearest double. Falls back to a sign-correct infinity on overflow.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Sign as -1, 0, 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-5", "3/4", "-7/2", " 12/8 "] {
            let r = parse_rational(s).unwrap();
            let back = parse_rational(&rational_to_string(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(parse_rational("12/8").unwrap(), rat(3, 2));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}

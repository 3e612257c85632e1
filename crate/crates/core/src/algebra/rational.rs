//! Arbitrary-precision rationals.
//!
//! Backed by `num_rational::BigRational`, which already keeps values reduced
//! with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{QError, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"-3"`, `"2/5"` or `"+7/4"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || QError::Parse(format!("not a rational: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(QError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// `r^e` for any integer `e`; `0^e` with `e < 0` is a division by zero.
pub fn pow_i(r: &Rational, e: i64) -> Result<Rational> {
    if e >= 0 {
        Ok(num_traits::pow(r.clone(), e as usize))
    } else if r.is_zero() {
        Err(QError::DivisionByZero)
    } else {
        Ok(num_traits::pow(r.recip(), (-e) as usize))
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer()).ok()
}

pub fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

pub mod serde_rational {
    //! Serializes a rational as its canonical `"p/q"` string.
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

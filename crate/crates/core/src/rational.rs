//! Exact rational scalars and their "p/q" text form.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar field used throughout the algebraic core.
pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"`. A zero denominator is an error.
pub fn parse(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {text:?}")))?;
    let denom: BigInt = denom
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {text:?}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Parses a comma-separated list of rationals, e.g. `"1/2,0,-3"`.
pub fn parse_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse).collect()
}

/// Canonical text form: integers print bare, everything else as `p/q` in lowest terms.
pub fn format(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn format_list(values: &[Rational]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", format(v));
    }
    out
}

pub fn is_integral(values: &[Rational]) -> bool {
    values.iter().all(|v| v.is_integer())
}

/// Integer value, if the rational is an integer that fits in `i64`.
pub fn to_i64(value: &Rational) -> Option<i64> {
    if !value.is_integer() {
        return None;
    }
    i64::try_from(value.numer()).ok()
}

/// Standard inner product `(u|v)`.
pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// `(u|r)` for an integer vector `r`.
pub fn dot_int(u: &[Rational], r: &[i64]) -> Rational {
    u.iter()
        .zip(r)
        .filter(|(_, &b)| b != 0)
        .map(|(a, &b)| a * int(b))
        .sum()
}

pub fn abs_max(values: &[Rational]) -> Rational {
    values
        .iter()
        .map(|v| v.abs())
        .fold(zero(), |acc, v| if v > acc { v } else { acc })
}

/// Serde adapter storing a rational as its `p/q` string.
pub mod as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats() {
        assert_eq!(parse("1/2").unwrap(), frac(1, 2));
        assert_eq!(parse(" -3 ").unwrap(), int(-3));
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(format(&frac(-4, 6)), "-2/3");
        assert_eq!(format(&int(5)), "5");
        assert_eq!(format_list(&parse_list("1/3,0,0").unwrap()), "1/3,0,0");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse_list("1/0,0,0").is_err());
    }
}

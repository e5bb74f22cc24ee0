//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`: numerator and denominator are kept
//! coprime with the denominator positive, so canonical form holds by
//! construction. The helpers here cover the constructors the rest of the
//! crate needs, in particular exact parsing of decimal literals such as
//! `29.1` (= 291/10).

use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// n/d as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse a decimal literal exactly: `"29.1"` -> 291/10, `"-0.05"` -> -1/20.
/// Plain integers and `p/q` fractions are accepted as well.
pub fn rat_from_decimal(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::BadDecimal(s.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::BadDecimal(s.to_string()))?;
        if d.is_zero() {
            return Err(Error::BadDecimal(s.to_string()));
        }
        return Ok(Rat::new(n, d));
    }
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::BadDecimal(s.to_string()));
    }
    let mut mantissa = String::with_capacity(int_part.len() + frac_part.len());
    mantissa.push_str(int_part);
    mantissa.push_str(frac_part);
    if mantissa.is_empty() || !mantissa.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::BadDecimal(s.to_string()));
    }
    let n: BigInt = mantissa
        .parse()
        .map_err(|_| Error::BadDecimal(s.to_string()))?;
    let mut den = BigInt::one();
    for _ in 0..frac_part.len() {
        den *= 10;
    }
    Ok(Rat::new(BigInt::from(sign) * n, den))
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

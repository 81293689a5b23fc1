//! Exact rational scalars.
//!
//! Arithmetic is delegated to [`num_rational::BigRational`], which keeps every
//! value reduced with a positive denominator after each operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn from_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// True when the denominator is positive and coprime to the numerator.
pub fn is_canonical(q: &Rational) -> bool {
    let (num, den) = (q.numer(), q.denom());
    if !den.is_positive() {
        return false;
    }
    if num.is_zero() {
        return den.is_one();
    }
    num.abs().gcd(den).is_one()
}

/// Parses `"7"`, `"-3"` or `"p/q"`. Decimal and exponent notation is rejected so
/// that costs stay exact.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!(
            "floating-point value {s:?} rejected; use an integer or p/q"
        )));
    }
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `"p/q"`, or just `"p"` for integers.
pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

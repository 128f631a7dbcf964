//! Exact rational scalars.
//!
//! Everything in the crate is computed over `BigRational`. The textual form
//! is `p` or `p/q` with `q > 1` and `gcd(p, q) = 1`; [`parse_scalar`] rejects
//! anything else so that two equal scalars always print identically.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^e` for a possibly negative exponent.
pub fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn no_leading_zero(s: &str) -> bool {
    s == "0" || !s.starts_with('0')
}

/// True when `s` has the shape of a rational literal, canonical or not.
pub fn looks_like_literal(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    match body.split_once('/') {
        Some((p, q)) => is_digits(p) && is_digits(q),
        None => is_digits(body),
    }
}

/// Parses a scalar in canonical form only.
pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let bad = || Error::NonCanonicalScalar(s.to_string());
    if !looks_like_literal(s) {
        return Err(bad());
    }
    let negative = s.starts_with('-');
    let body = s.strip_prefix('-').unwrap_or(s);
    let (p, q) = match body.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (body, None),
    };
    if !no_leading_zero(p) {
        return Err(bad());
    }
    let num: BigInt = p.parse().map_err(|_| bad())?;
    let value = match q {
        None => BigRational::from_integer(num),
        Some(q) => {
            if !no_leading_zero(q) {
                return Err(bad());
            }
            let den: BigInt = q.parse().map_err(|_| bad())?;
            if den.is_zero() || den.is_one() {
                return Err(bad());
            }
            let r = BigRational::new(num.clone(), den.clone());
            if r.numer() != &num || r.denom() != &den {
                return Err(bad());
            }
            r
        }
    };
    if negative && value.is_zero() {
        return Err(bad());
    }
    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms_round_trip() {
        for s in ["0", "1", "-1", "2/3", "-7/12", "123456789012345678901234567890"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
    }

    #[test]
    fn non_canonical_rejected() {
        for s in ["2/4", "1/1", "-0", "01", "3/01", "1/0", "+1", "0/5", "1.5", "", "a"] {
            assert!(parse_scalar(s).is_err(), "{s} accepted");
        }
    }

    #[test]
    fn sign_of_negative_exponent() {
        assert_eq!(sign(-1), -one());
        assert_eq!(sign(-2), one());
        assert_eq!(sign(3), -one());
    }
}

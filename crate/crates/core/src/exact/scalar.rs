//! Exact rational scalars.
//!
//! [`Scalar`] is an arbitrary precision rational kept in lowest terms with a
//! positive denominator, so equality of values is equality of representations.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    ratio(1, 2)
}

/// Parses `"p/q"` or an integer literal. Decimal literals are rejected so
/// that every accepted input is exact.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Input("empty rational literal".into()));
    }
    let value: Scalar = t.parse().map_err(|_| Error::Input(format!("not an exact rational literal: {text:?}")))?;
    Ok(value)
}

/// Renders `p/q`, or `p` when the denominator is 1.
pub fn render(s: &Scalar) -> String {
    s.to_string()
}

/// Decimal rendering to 12 significant digits. Approximate; for reports only.
pub fn approx(s: &Scalar) -> String {
    approx_f64(to_f64(s))
}

/// [`approx`] for a value already in floating point.
pub fn approx_f64(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let text = format!("{:.*e}", 11, v);
    // Normalize to plain notation for moderate magnitudes.
    match text.parse::<f64>() {
        Ok(x) if x.abs() >= 1e-6 && x.abs() < 1e12 => {
            let digits = 11 - x.abs().log10().floor() as i32;
            let s = format!("{:.*}", digits.max(0) as usize, x);
            trim_zeros(&s)
        }
        _ => text,
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or(f64::NAN)
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

/// `base^exp` for a non-negative exponent.
pub fn pow(base: &Scalar, exp: u32) -> Scalar {
    num::pow::pow(base.clone(), exp as usize)
}

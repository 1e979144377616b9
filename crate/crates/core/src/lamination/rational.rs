use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Natural log of a positive rational, accurate near 1 and for huge or tiny
/// values. `ln_ratio(1) == 0.0` exactly.
pub fn ln_ratio(r: &BigRational) -> f64 {
    assert!(r.is_positive(), "ln of a nonpositive rational");
    if r.is_one() {
        return 0.0;
    }
    let half = BigRational::new(1.into(), 2.into());
    let two = BigRational::from_integer(2.into());
    if *r >= half && *r <= two {
        let d = (r - BigRational::one()).to_f64().expect("bounded");
        return d.ln_1p();
    }
    let e = r.numer().bits() as i64 - r.denom().bits() as i64;
    let scaled = if e >= 0 {
        r / BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        r * BigRational::from_integer(BigInt::one() << (-e) as usize)
    };
    scaled.to_f64().expect("scaled into (1/2, 2)").ln() + e as f64 * std::f64::consts::LN_2
}

/// The exact value of a finite double.
pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::Parse(format!("{x} is not finite")))
}

/// Parses `"p/q"`, `"p"` or a decimal literal. Returns the value and whether
/// it was given exactly (no decimal point or exponent).
pub fn parse_rational(s: &str) -> Result<(BigRational, bool)> {
    let t = s.trim();
    if let Ok(r) = t.parse::<BigRational>() {
        return Ok((r, true));
    }
    let x: f64 = t
        .parse()
        .map_err(|_| Error::Parse(format!("not a number: {s:?}")))?;
    Ok((rational_from_f64(x)?, false))
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn json_rational(v: &serde_json::Value) -> Result<(BigRational, bool)> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok((BigRational::from_integer(i.into()), true))
            } else if let Some(u) = n.as_u64() {
                Ok((BigRational::from_integer(u.into()), true))
            } else {
                let x = n
                    .as_f64()
                    .ok_or_else(|| Error::Parse(format!("bad number {n}")))?;
                Ok((rational_from_f64(x)?, false))
            }
        }
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected a number, got {other}"))),
    }
}

pub(crate) fn is_nonneg(r: &BigRational) -> bool {
    !r.is_negative()
}

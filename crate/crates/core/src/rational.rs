//! Exact rational scalars.
//!
//! All coefficient arithmetic in the crate is arbitrary-precision; `Rat` is
//! always stored reduced with a positive denominator (guaranteed by the
//! backing implementation).

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};
use std::str::FromStr;

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_from_int(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Parses "p/q" or "p" with optional sign, e.g. "-1/2".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = Int::from_str(num).map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let den = Int::from_str(den).map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Renders "p/q", or just "p" when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// JSON form used across all interfaces: decimal strings under "num"/"den".
pub fn rat_to_json(r: &Rat) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    let get = |k: &str| -> Result<Int> {
        let s = v
            .get(k)
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse(format!("missing {k:?} in rational {v}")))?;
        Int::from_str(s).map_err(|_| Error::Parse(format!("bad {k:?} in rational {v}")))
    };
    let num = get("num")?;
    let den = get("den")?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rat::new(num, den))
}

/// Extracts an integer, erroring when the value is not integral.
pub fn rat_to_int(r: &Rat) -> Result<Int> {
    if r.denom().is_one() {
        Ok(r.numer().clone())
    } else {
        Err(Error::Parse(format!("expected integer, got {}", format_rat(r))))
    }
}

pub fn is_nonnegative(r: &Rat) -> bool {
    !r.is_negative()
}

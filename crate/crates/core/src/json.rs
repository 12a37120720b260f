//! Number plumbing between `serde_json` (built with arbitrary precision) and
//! the big-integer types used throughout the crate.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde_json::{Number, Value};

use crate::exactalg::ExactRational;

pub(crate) fn int_value(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal is valid JSON"))
}

pub(crate) fn uint_value(n: &BigUint) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal is valid JSON"))
}

/// Integral rationals become JSON integers, the rest strings like `"7/3"`.
pub(crate) fn rational_value(q: &ExactRational) -> Value {
    if q.denom().is_one() {
        int_value(q.numer())
    } else {
        Value::String(q.to_string())
    }
}

/// Reads a JSON integer of any size. Floats and non-numbers yield `None`.
pub(crate) fn as_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
        _ => None,
    }
}

/// Accepts a JSON integer or a string `"p/q"` / `"p"`.
pub(crate) fn as_rational(v: &Value) -> Option<ExactRational> {
    match v {
        Value::Number(_) => as_bigint(v).map(ExactRational::from_integer),
        Value::String(s) => parse_rational(s),
        _ => None,
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_positive() || d.is_negative() {
                Some(ExactRational::new(n, d))
            } else {
                None
            }
        }
        None => BigInt::from_str(s).ok().map(ExactRational::from_integer),
    }
}

pub(crate) fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

//! JSON helpers: exact integers and rationals serialize as arbitrary
//! precision JSON integers (never decimals), so identical invocations give
//! byte-identical output.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{Number, Value};

pub fn bigint_json(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn biguint_json(x: &BigUint) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

/// (numerator, denominator) in lowest terms with positive denominator.
pub fn rational_json(x: &BigRational) -> (Value, Value) {
    (bigint_json(x.numer()), bigint_json(x.denom()))
}

//! Text and JSON renderings shared by the subcommands.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::element::Cl2Element;
use crate::matrix::RatMatrix;
use crate::scalar::{fmt_rational, Scalar};

/// `%.12g`-style formatting: 12 significant digits, trailing zeros dropped.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `re`, `re+imi` or `re-imi`.
pub fn fmt_complex((re, im): (f64, f64)) -> String {
    if im == 0.0 {
        return fmt_float(re);
    }
    let sign = if im < 0.0 { '-' } else { '+' };
    let mag = fmt_float(im.abs());
    let mag = if mag == "1" { String::new() } else { mag };
    if re == 0.0 {
        let lead = if im < 0.0 { "-" } else { "" };
        format!("{lead}{mag}i")
    } else {
        format!("{}{sign}{mag}i", fmt_float(re))
    }
}

pub fn float_vector(a: &Cl2Element) -> String {
    let parts: Vec<String> = a.to_f64().iter().map(|&x| fmt_float(x)).collect();
    format!("[{}]", parts.join(", "))
}

pub fn rational_json(x: &BigRational) -> Value {
    Value::String(fmt_rational(x))
}

pub fn scalar_json(s: &Scalar) -> Value {
    json!({
        "p": fmt_rational(s.p()),
        "q": fmt_rational(s.q()),
        "radicand": s.radicand().to_string(),
    })
}

/// Rational elements as four exact strings, irrational ones as four
/// `{p, q, radicand}` objects.
pub fn element_json(a: &Cl2Element) -> Value {
    match a.rational_coeffs() {
        Ok(c) => Value::Array(c.iter().map(rational_json).collect()),
        Err(_) => witness_json(a),
    }
}

pub fn witness_json(a: &Cl2Element) -> Value {
    Value::Array(a.coeffs().iter().map(scalar_json).collect())
}

/// Coefficients as JSON numbers rounded to 12 significant digits.
pub fn float_json(a: &Cl2Element) -> Value {
    let rounded: Vec<f64> = a
        .to_f64()
        .iter()
        .map(|&x| fmt_float(x).parse().unwrap_or(x))
        .collect();
    json!(rounded)
}

/// A `"p/q"` string for rational values, the `{p, q, radicand}` triple otherwise.
pub fn value_json(s: &Scalar) -> Value {
    match s.to_rational() {
        Some(r) => rational_json(r),
        None => scalar_json(s),
    }
}

pub fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational_json).collect()))
            .collect(),
    )
}

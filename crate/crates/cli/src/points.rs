//! Carrier-point parsing for the trace command.
//!
//! A point is a comma-separated list of components, one per carrier
//! dimension. Under the exact backend every component must be rational:
//! an integer (`3`), a fraction (`-7/4`), or a decimal (`0.25`). Angular
//! components (the first component of the cylinder instances, stored as a
//! coefficient of pi) accept the forms `pi`, `-pi`, `pi/4`, `7pi/4`, and
//! `1.5pi`; a plain nonzero number there is rejected rather than silently
//! reinterpreted. Under the approximate backend components are floats and
//! the same pi forms are multiplied out numerically.

use mobi_core::{Error, Result, Value};

/// Split a component into an optional pi-multiplier part. Returns
/// `(coefficient_text, denominator_text)` when the component mentions pi.
fn split_pi(s: &str) -> Option<(&str, &str)> {
    let idx = s.find("pi")?;
    let head = &s[..idx];
    let tail = &s[idx + 2..];
    let den = match tail.strip_prefix('/') {
        Some(d) => d,
        None if tail.is_empty() => "1",
        None => return None,
    };
    Some((head, den))
}

/// Parse a plain rational: integer, `a/b`, or terminating decimal.
fn plain_rational(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::config(format!("'{}' is not a rational component", s));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| bad())?;
        let d: i64 = den.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok((n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.trim_start().starts_with('-');
        let whole: i64 = if int == "-" || int.is_empty() {
            0
        } else {
            int.trim().parse().map_err(|_| bad())?
        };
        let digits: i64 = frac.parse().map_err(|_| bad())?;
        let den = 10_i64.pow(frac.len() as u32);
        let num = whole
            .checked_mul(den)
            .and_then(|w| {
                if negative {
                    w.checked_sub(digits)
                } else {
                    w.checked_add(digits)
                }
            })
            .ok_or_else(bad)?;
        return Ok((num, den));
    }
    let n: i64 = s.parse().map_err(|_| bad())?;
    Ok((n, 1))
}

/// The multiplier in front of a `pi` token: empty means 1, `-` means -1.
fn pi_coefficient(head: &str) -> Result<(i64, i64)> {
    match head.trim() {
        "" | "+" => Ok((1, 1)),
        "-" => Ok((-1, 1)),
        other => plain_rational(other),
    }
}

fn exact_component(s: &str, angular: bool) -> Result<Value> {
    if let Some((head, den)) = split_pi(s) {
        if !angular {
            return Err(Error::config(format!(
                "'{}': pi is only accepted in the angular component of cylinder instances",
                s
            )));
        }
        let (cn, cd) = pi_coefficient(head)?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::config(format!("'{}' has a malformed pi denominator", s)))?;
        if d == 0 {
            return Err(Error::config(format!("'{}' divides by zero", s)));
        }
        return Ok(Value::rat(cn, cd.checked_mul(d).ok_or_else(|| {
            Error::config(format!("'{}' overflows", s))
        })?));
    }
    let (n, d) = plain_rational(s)?;
    if angular && n != 0 {
        return Err(Error::config(format!(
            "'{}': write angular components as multiples of pi (e.g. 7pi/4)",
            s
        )));
    }
    Ok(Value::rat(n, d))
}

pub fn float_component(s: &str) -> Result<f64> {
    let bad = || Error::config(format!("'{}' is not a numeric component", s));
    if let Some((head, den)) = split_pi(s) {
        let coeff = match head.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse::<f64>().map_err(|_| bad())?,
        };
        let d: f64 = den.trim().parse().map_err(|_| bad())?;
        if d == 0.0 {
            return Err(bad());
        }
        return Ok(coeff * std::f64::consts::PI / d);
    }
    s.trim().parse::<f64>().map_err(|_| bad())
}

fn components(s: &str, dim: usize) -> Result<Vec<&str>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != dim {
        return Err(Error::config(format!(
            "point '{}' has {} components; expected {}",
            s,
            parts.len(),
            dim
        )));
    }
    Ok(parts)
}

/// Parse a carrier point. One-dimensional carriers use a bare value rather
/// than a one-element tuple, matching the instance constructors.
pub fn parse_point(s: &str, dim: usize, exact: bool, angular_first: bool) -> Result<Value> {
    let parts = components(s, dim)?;
    let mut values = Vec::with_capacity(dim);
    for (i, part) in parts.iter().enumerate() {
        let value = if exact {
            exact_component(part, angular_first && i == 0)?
        } else {
            Value::float(float_component(part)?)
        };
        values.push(value);
    }
    if dim == 1 {
        Ok(values.pop().expect("one component"))
    } else {
        Ok(Value::tuple(values))
    }
}

/// Parse a point as a float vector, for geodesic fields.
pub fn parse_float_vec(s: &str, dim: usize) -> Result<Vec<f64>> {
    components(s, dim)?.iter().map(|p| float_component(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_forms_parse_exactly() {
        assert_eq!(plain_rational("3").unwrap(), (3, 1));
        assert_eq!(plain_rational("-7/4").unwrap(), (-7, 4));
        assert_eq!(plain_rational("0.25").unwrap(), (25, 100));
        assert_eq!(plain_rational("-1.5").unwrap(), (-15, 10));
        assert!(plain_rational("1/0").is_err());
        assert!(plain_rational("a").is_err());
    }

    #[test]
    fn pi_forms_become_angle_coefficients() {
        assert_eq!(exact_component("7pi/4", true).unwrap(), Value::rat(7, 4));
        assert_eq!(exact_component("pi", true).unwrap(), Value::rat(1, 1));
        assert_eq!(exact_component("-pi/2", true).unwrap(), Value::rat(-1, 2));
        assert_eq!(exact_component("1.5pi", true).unwrap(), Value::rat(3, 2));
        assert_eq!(exact_component("0", true).unwrap(), Value::rat(0, 1));
        assert!(exact_component("pi", false).is_err());
        assert!(exact_component("1", true).is_err());
    }

    #[test]
    fn points_respect_dimension_and_bareness() {
        let p = parse_point("7pi/4, 0", 2, true, true).unwrap();
        assert_eq!(p, Value::tuple(vec![Value::rat(7, 4), Value::rat(0, 1)]));
        assert_eq!(parse_point("1/2", 1, true, false).unwrap(), Value::rat(1, 2));
        assert!(parse_point("1,2,3", 2, true, false).is_err());
    }

    #[test]
    fn float_vectors_multiply_pi_out() {
        let v = parse_float_vec("pi/2, -1.5", 2).unwrap();
        assert!((v[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert_eq!(v[1], -1.5);
    }
}

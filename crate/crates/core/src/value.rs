use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::fmt;

/// A carrier element.
///
/// Instances choose one scalar representation per backend — `Rational` under
/// the exact backend, `Float` under the approximate one, `Int` for finite
/// carriers (rings of integers mod n, endomorphism tables) — and `Tuple`
/// nests freely for product carriers such as points of a plane or the
/// lozenge's coordinate pairs.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rational(BigRational),
    Float(f64),
    Int(i64),
    Tuple(Vec<Value>),
}

impl Value {
    /// Exact rational from a numerator/denominator pair.
    pub fn rat(num: i64, den: i64) -> Value {
        Value::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(i: i64) -> Value {
        Value::Int(i)
    }

    pub fn float(f: f64) -> Value {
        Value::Float(f)
    }

    pub fn pair(a: Value, b: Value) -> Value {
        Value::Tuple(vec![a, b])
    }

    pub fn tuple(items: Vec<Value>) -> Value {
        Value::Tuple(items)
    }

    /// Point with float components, e.g. for fields and geodesic spaces.
    pub fn floats(xs: &[f64]) -> Value {
        Value::Tuple(xs.iter().map(|&x| Value::Float(x)).collect())
    }

    /// Point with rational components given as (num, den) pairs.
    pub fn rats(xs: &[(i64, i64)]) -> Value {
        Value::Tuple(xs.iter().map(|&(n, d)| Value::rat(n, d)).collect())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_float(&self) -> Option<f64> {
        match self {
            Value::Float(f) => Some(*f),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Value]> {
        match self {
            Value::Tuple(t) => Some(t),
            _ => None,
        }
    }

    /// Numeric magnitude of a scalar value, used by the scaled distance.
    /// Tuples have no single magnitude and return `None`.
    pub fn magnitude(&self) -> Option<f64> {
        match self {
            Value::Rational(r) => r.to_f64(),
            Value::Float(f) => Some(*f),
            Value::Int(i) => Some(*i as f64),
            Value::Tuple(_) => None,
        }
    }

    /// Flatten to float components in order (scalars yield one component).
    /// Returns `None` if any leaf is a rational too large for f64 (does not
    /// occur for catalog instances).
    pub fn to_floats(&self) -> Option<Vec<f64>> {
        let mut out = Vec::new();
        fn walk(v: &Value, out: &mut Vec<f64>) -> bool {
            match v {
                Value::Rational(r) => match r.to_f64() {
                    Some(f) => {
                        out.push(f);
                        true
                    }
                    None => false,
                },
                Value::Float(f) => {
                    out.push(*f);
                    true
                }
                Value::Int(i) => {
                    out.push(*i as f64);
                    true
                }
                Value::Tuple(items) => items.iter().all(|it| walk(it, out)),
            }
        }
        if walk(self, &mut out) {
            Some(out)
        } else {
            None
        }
    }

    /// Append this value to a JSON buffer. Rationals become `"p/q"` strings
    /// (`"p"` when the denominator is 1), floats full-precision numbers,
    /// ints plain numbers, tuples arrays.
    pub fn write_json(&self, out: &mut String) {
        match self {
            Value::Rational(r) => {
                out.push('"');
                write_rational(r, out);
                out.push('"');
            }
            Value::Float(f) => write_float(*f, out),
            Value::Int(i) => {
                out.push_str(&i.to_string());
            }
            Value::Tuple(items) => {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    item.write_json(out);
                }
                out.push(']');
            }
        }
    }
}

fn write_rational(r: &BigRational, out: &mut String) {
    if r.denom() == &BigInt::from(1) {
        out.push_str(&r.numer().to_string());
    } else {
        out.push_str(&r.numer().to_string());
        out.push('/');
        out.push_str(&r.denom().to_string());
    }
}

/// Full-precision float formatting: 17 significant digits in scientific
/// notation, which round-trips every f64 and is valid JSON.
pub(crate) fn write_float(f: f64, out: &mut String) {
    if f.is_finite() {
        out.push_str(&format!("{:.16e}", f));
    } else {
        // Reports never contain non-finite values from catalog instances,
        // but keep the emitter total.
        out.push_str("null");
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => {
                if r.denom() == &BigInt::from(1) {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Float(x) => write!(f, "{}", x),
            Value::Int(i) => write!(f, "{}", i),
            Value::Tuple(items) => {
                write!(f, "(")?;
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", item)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Convenience for exact scalars.
pub fn big_rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

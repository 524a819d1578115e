use crate::value::Value;

/// How values are compared.
///
/// `Exact` is structural equality on canonical representations (rationals,
/// integers, tuples thereof). `Approx` compares through a scaled distance:
/// per scalar component `|a - b| / (1 + max(|a|, |b|))`, combined over tuples
/// by taking the maximum; two values are equal iff the distance is at most
/// the tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EqBackend {
    Exact,
    Approx { tolerance: f64 },
}

impl EqBackend {
    pub fn approx(tolerance: f64) -> EqBackend {
        EqBackend::Approx { tolerance }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, EqBackend::Exact)
    }

    pub fn tolerance(&self) -> Option<f64> {
        match self {
            EqBackend::Exact => None,
            EqBackend::Approx { tolerance } => Some(*tolerance),
        }
    }

    /// Scaled distance between two values; infinite when shapes differ.
    /// Meaningful for any backend, but only the approximate backend uses it
    /// for equality decisions (reports attach it to violations).
    pub fn distance(a: &Value, b: &Value) -> f64 {
        match (a, b) {
            (Value::Tuple(xs), Value::Tuple(ys)) => {
                if xs.len() != ys.len() {
                    return f64::INFINITY;
                }
                xs.iter()
                    .zip(ys)
                    .map(|(x, y)| EqBackend::distance(x, y))
                    .fold(0.0, f64::max)
            }
            (Value::Tuple(_), _) | (_, Value::Tuple(_)) => f64::INFINITY,
            _ => match (a.magnitude(), b.magnitude()) {
                (Some(fa), Some(fb)) => {
                    let scale = 1.0 + fa.abs().max(fb.abs());
                    (fa - fb).abs() / scale
                }
                _ => f64::INFINITY,
            },
        }
    }

    pub fn eq(&self, a: &Value, b: &Value) -> bool {
        match self {
            EqBackend::Exact => exact_eq(a, b),
            EqBackend::Approx { tolerance } => EqBackend::distance(a, b) <= *tolerance,
        }
    }
}

fn exact_eq(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Rational(x), Value::Rational(y)) => x == y,
        (Value::Int(x), Value::Int(y)) => x == y,
        (Value::Float(x), Value::Float(y)) => x == y,
        (Value::Tuple(xs), Value::Tuple(ys)) => {
            xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| exact_eq(x, y))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_distinguishes_representations() {
        let eq = EqBackend::Exact;
        assert!(eq.eq(&Value::rat(1, 2), &Value::rat(2, 4)));
        assert!(!eq.eq(&Value::rat(1, 2), &Value::float(0.5)));
        assert!(!eq.eq(&Value::rat(1, 2), &Value::rat(1, 3)));
    }

    #[test]
    fn scaled_distance_is_relative_for_large_values() {
        let d = EqBackend::distance(&Value::float(1000.0), &Value::float(1000.001));
        assert!(d < 1e-5, "distance {} not scaled down", d);
        let d0 = EqBackend::distance(&Value::float(0.0), &Value::float(1e-9));
        // The scaling denominator 1 + 1e-9 shifts the raw gap by ~1e-18.
        assert!((d0 - 1e-9).abs() < 1e-17);
    }

    #[test]
    fn tuple_distance_is_max_over_components() {
        let a = Value::pair(Value::float(0.0), Value::float(1.0));
        let b = Value::pair(Value::float(0.0), Value::float(1.5));
        let d = EqBackend::distance(&a, &b);
        assert!((d - 0.5 / 2.5).abs() < 1e-15);
    }

    #[test]
    fn shape_mismatch_is_infinitely_far() {
        let a = Value::pair(Value::float(0.0), Value::float(1.0));
        assert_eq!(EqBackend::distance(&a, &Value::float(0.0)), f64::INFINITY);
        assert!(!EqBackend::approx(1e-6).eq(&a, &Value::float(0.0)));
    }

    #[test]
    fn approx_respects_tolerance() {
        let eq = EqBackend::approx(1e-6);
        assert!(eq.eq(&Value::float(1.0), &Value::float(1.0 + 1e-8)));
        assert!(!eq.eq(&Value::float(1.0), &Value::float(1.0 + 1e-4)));
    }
}

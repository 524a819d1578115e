//! Scalar abstraction so each instance formula is written once and
//! monomorphised for the exact (`BigRational`) and approximate (`f64`)
//! backends.

use crate::error::{Error, Result};
use crate::value::Value;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait Scalar: Clone + PartialOrd + Sized {
    fn from_value(v: &Value) -> Result<Self>;
    fn into_value(self) -> Value;
    fn from_int(i: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn abs(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for BigRational {
    fn from_value(v: &Value) -> Result<Self> {
        v.as_rational()
            .cloned()
            .ok_or_else(|| Error::domain(format!("expected an exact rational, got {}", v)))
    }

    fn into_value(self) -> Value {
        Value::Rational(self)
    }

    fn from_int(i: i64) -> Self {
        BigRational::from_integer(BigInt::from(i))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn add(&self, o: &Self) -> Self {
        self + o
    }

    fn sub(&self, o: &Self) -> Self {
        self - o
    }

    fn mul(&self, o: &Self) -> Self {
        self * o
    }

    fn div(&self, o: &Self) -> Result<Self> {
        if Scalar::is_zero(o) {
            Err(Error::domain("division by zero"))
        } else {
            Ok(self / o)
        }
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Scalar for f64 {
    fn from_value(v: &Value) -> Result<Self> {
        match v {
            Value::Float(f) => Ok(*f),
            // Constants such as 1/2 arrive as rationals under either backend.
            Value::Rational(r) => r
                .to_f64()
                .ok_or_else(|| Error::domain("rational out of f64 range")),
            Value::Int(i) => Ok(*i as f64),
            Value::Tuple(_) => Err(Error::domain(format!("expected a scalar, got {}", v))),
        }
    }

    fn into_value(self) -> Value {
        Value::Float(self)
    }

    fn from_int(i: i64) -> Self {
        i as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn add(&self, o: &Self) -> Self {
        self + o
    }

    fn sub(&self, o: &Self) -> Self {
        self - o
    }

    fn mul(&self, o: &Self) -> Self {
        self * o
    }

    fn div(&self, o: &Self) -> Result<Self> {
        if *o == 0.0 {
            Err(Error::domain("division by zero"))
        } else {
            Ok(self / o)
        }
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

/// Unpack an n-tuple of scalars.
pub(crate) fn tuple_scalars<S: Scalar>(v: &Value, n: usize) -> Result<Vec<S>> {
    let items = v
        .as_tuple()
        .ok_or_else(|| Error::domain(format!("expected a {}-tuple, got {}", n, v)))?;
    if items.len() != n {
        return Err(Error::domain(format!(
            "expected a {}-tuple, got {}",
            n, v
        )));
    }
    items.iter().map(S::from_value).collect()
}

/// Pack scalars back into a tuple value.
pub(crate) fn scalars_tuple<S: Scalar>(xs: Vec<S>) -> Value {
    Value::Tuple(xs.into_iter().map(S::into_value).collect())
}

/// The interval/line mobility operation `p(a, b, c) = a + b c - b a`,
/// shared by several instances.
pub(crate) fn line_p<S: Scalar>(a: &S, b: &S, c: &S) -> S {
    a.add(&b.mul(c)).sub(&b.mul(a))
}

/// Affine combination `(1 - t) x + t y`.
pub(crate) fn lerp<S: Scalar>(x: &S, t: &S, y: &S) -> S {
    x.add(&t.mul(&y.sub(x)))
}

//! Concrete mobility algebras: the unit interval, the lozenge of pairs,
//! the rational line, modular rings, and two endomorphism constructions.

use crate::algebra::MobiAlgebra;
use crate::eq::EqBackend;
use crate::error::{Error, Result};
use crate::num::{line_p, Scalar};
use crate::sample::small_rational_in;
use crate::value::{big_rat, Value};
use num_rational::BigRational;
use rand::Rng;
use std::sync::Arc;

fn interval_grid(eq: EqBackend) -> Vec<Value> {
    let fractions = [(0, 1), (1, 4), (1, 3), (1, 2), (3, 4), (1, 1)];
    fractions
        .iter()
        .map(|&(n, d)| match eq {
            EqBackend::Exact => Value::rat(n, d),
            EqBackend::Approx { .. } => Value::float(n as f64 / d as f64),
        })
        .collect()
}

/// The closed unit interval with p(a,b,c) = a + b(c - a).
pub fn interval_algebra(eq: EqBackend) -> Result<MobiAlgebra> {
    let slack = eq.tolerance().unwrap_or(0.0);
    let (zero, half, one) = match eq {
        EqBackend::Exact => (Value::rat(0, 1), Value::rat(1, 2), Value::rat(1, 1)),
        EqBackend::Approx { .. } => (Value::float(0.0), Value::float(0.5), Value::float(1.0)),
    };
    let p: crate::algebra::TernaryOp = match eq {
        EqBackend::Exact => Arc::new(|a, b, c| {
            let (a, b, c) = (
                BigRational::from_value(a)?,
                BigRational::from_value(b)?,
                BigRational::from_value(c)?,
            );
            Ok(line_p(&a, &b, &c).into_value())
        }),
        EqBackend::Approx { .. } => Arc::new(|a, b, c| {
            let (a, b, c) = (
                f64::from_value(a)?,
                f64::from_value(b)?,
                f64::from_value(c)?,
            );
            Ok(Value::float(line_p(&a, &b, &c)))
        }),
    };
    let member: crate::runner::MemberFn = match eq {
        EqBackend::Exact => Arc::new(|v| match v.as_rational() {
            Some(r) => !r.lt(&big_rat(0, 1)) && !r.gt(&big_rat(1, 1)),
            None => false,
        }),
        EqBackend::Approx { .. } => Arc::new(move |v| match v.as_float() {
            Some(f) => f.is_finite() && f >= -slack && f <= 1.0 + slack,
            None => false,
        }),
    };
    let sampler: crate::runner::SamplerFn = match eq {
        EqBackend::Exact => Arc::new(|rng| {
            let (n, d) = small_rational_in(rng, 0.0, 1.0);
            Value::rat(n, d)
        }),
        EqBackend::Approx { .. } => Arc::new(|rng| Value::float(rng.gen_range(0.0..=1.0))),
    };
    MobiAlgebra::new(
        "interval",
        eq,
        zero,
        half,
        one,
        p,
        member,
        sampler,
        interval_grid(eq),
    )
}

fn lozenge_p_rational(a: &[BigRational], b: &[BigRational], c: &[BigRational]) -> Value {
    let first = &a[0] - &b[0] * &a[0] - &b[1] * &a[1] + &b[0] * &c[0] + &b[1] * &c[1];
    let second = &a[1] - &b[0] * &a[1] - &b[1] * &a[0] + &b[0] * &c[1] + &b[1] * &c[0];
    Value::tuple(vec![
        Value::Rational(first),
        Value::Rational(second),
    ])
}

fn lozenge_member(v: &Value) -> bool {
    let Some(items) = v.as_tuple() else {
        return false;
    };
    if items.len() != 2 {
        return false;
    }
    let (Some(t1), Some(t2)) = (items[0].as_rational(), items[1].as_rational()) else {
        return false;
    };
    let abs2 = if t2.lt(&big_rat(0, 1)) { -t2 } else { t2.clone() };
    abs2 <= *t1 && *t1 <= big_rat(1, 1) - abs2
}

/// The lozenge |t2| <= t1 <= 1 - |t2| of parameter pairs, with the
/// two-component p that mixes the coordinates.
pub fn lozenge_algebra(eq: EqBackend) -> Result<MobiAlgebra> {
    if !eq.is_exact() {
        return Err(Error::config(
            "lozenge: only the exact backend is supported",
        ));
    }
    let p: crate::algebra::TernaryOp = Arc::new(|a, b, c| {
        let a = crate::num::tuple_scalars::<BigRational>(a, 2)?;
        let b = crate::num::tuple_scalars::<BigRational>(b, 2)?;
        let c = crate::num::tuple_scalars::<BigRational>(c, 2)?;
        Ok(lozenge_p_rational(&a, &b, &c))
    });
    let member: crate::runner::MemberFn = Arc::new(lozenge_member);
    let sampler: crate::runner::SamplerFn = Arc::new(|rng| {
        loop {
            let (n1, d1) = small_rational_in(rng, 0.0, 1.0);
            let (n2, d2) = small_rational_in(rng, -0.5, 0.5);
            let cand = Value::rats(&[(n1, d1), (n2, d2)]);
            if lozenge_member(&cand) {
                return cand;
            }
        }
    });
    let grid = vec![
        Value::rats(&[(0, 1), (0, 1)]),
        Value::rats(&[(1, 2), (0, 1)]),
        Value::rats(&[(1, 1), (0, 1)]),
        Value::rats(&[(1, 2), (1, 4)]),
        Value::rats(&[(1, 2), (-1, 4)]),
        Value::rats(&[(1, 4), (1, 4)]),
        Value::rats(&[(3, 4), (-1, 4)]),
    ];
    MobiAlgebra::new(
        "lozenge",
        eq,
        Value::rats(&[(0, 1), (0, 1)]),
        Value::rats(&[(1, 2), (0, 1)]),
        Value::rats(&[(1, 1), (0, 1)]),
        p,
        member,
        sampler,
        grid,
    )
}

/// The rational line as a ring-derived algebra: p(a,b,c) = a + b(c - a),
/// with the doubling element 2 available.
pub fn rational_algebra() -> Result<MobiAlgebra> {
    let p: crate::algebra::TernaryOp = Arc::new(|a, b, c| {
        let (a, b, c) = (
            BigRational::from_value(a)?,
            BigRational::from_value(b)?,
            BigRational::from_value(c)?,
        );
        Ok(line_p(&a, &b, &c).into_value())
    });
    let member: crate::runner::MemberFn = Arc::new(|v| v.as_rational().is_some());
    let sampler: crate::runner::SamplerFn = Arc::new(|rng| {
        let (n, d) = small_rational_in(rng, -3.0, 3.0);
        Value::rat(n, d)
    });
    let grid = vec![
        Value::rat(0, 1),
        Value::rat(1, 4),
        Value::rat(1, 3),
        Value::rat(1, 2),
        Value::rat(3, 4),
        Value::rat(1, 1),
        Value::rat(2, 1),
        Value::rat(-1, 1),
        Value::rat(-1, 2),
        Value::rat(3, 2),
    ];
    MobiAlgebra::new(
        "rational-line",
        EqBackend::Exact,
        Value::rat(0, 1),
        Value::rat(1, 2),
        Value::rat(1, 1),
        p,
        member,
        sampler,
        grid,
    )?
    .with_two(Value::rat(2, 1))
}

fn check_odd_modulus(name: &str, n: i64, max: i64) -> Result<()> {
    if n < 3 || n > max {
        return Err(Error::domain(format!(
            "{}: modulus {} outside supported range 3..={}",
            name, n, max
        )));
    }
    if n % 2 == 0 {
        return Err(Error::domain(format!(
            "{}: modulus {} is even, so 2 has no inverse",
            name, n
        )));
    }
    Ok(())
}

fn mod_int(v: &Value, n: i64) -> Result<i64> {
    v.as_int()
        .map(|i| i.rem_euclid(n))
        .ok_or_else(|| Error::domain(format!("expected an integer residue, got {}", v)))
}

fn residue_plumbing(
    n: i64,
) -> (
    crate::runner::MemberFn,
    crate::runner::SamplerFn,
    Vec<Value>,
    Vec<Value>,
) {
    let member: crate::runner::MemberFn =
        Arc::new(move |v| matches!(v.as_int(), Some(i) if i >= 0 && i < n));
    let sampler: crate::runner::SamplerFn = Arc::new(move |rng| Value::int(rng.gen_range(0..n)));
    let carrier: Vec<Value> = (0..n).map(Value::int).collect();
    let half = (n + 1) / 2;
    let mut grid = vec![0, 1, half, 2 % n];
    grid.sort_unstable();
    grid.dedup();
    let grid = grid.into_iter().map(Value::int).collect();
    (member, sampler, grid, carrier)
}

/// The ring Z_n (n odd) with p(a,b,c) = a + b(c - a) mod n.
pub fn modular_ring_algebra(n: i64) -> Result<MobiAlgebra> {
    check_odd_modulus("modular ring", n, 9999)?;
    let p: crate::algebra::TernaryOp = Arc::new(move |a, b, c| {
        let (a, b, c) = (mod_int(a, n)?, mod_int(b, n)?, mod_int(c, n)?);
        Ok(Value::int((a + b * (c - a)).rem_euclid(n)))
    });
    let (member, sampler, grid, carrier) = residue_plumbing(n);
    Ok(MobiAlgebra::new(
        format!("ring-z{}", n),
        EqBackend::Exact,
        Value::int(0),
        Value::int((n + 1) / 2),
        Value::int(1),
        p,
        member,
        sampler,
        grid,
    )?
    .with_two(Value::int(2))?
    .with_carrier(carrier))
}

/// The endomorphism algebra of the cyclic group Z_n (n odd). Endomaps of a
/// cyclic group are exactly the multiplication maps x -> m x, stored here by
/// their multiplier; p(f,g,h)(x) = f(x) - g(f(x)) + g(h(x)) becomes
/// multiplier arithmetic f - gf + gh mod n.
pub fn endo_algebra(n: i64) -> Result<MobiAlgebra> {
    check_odd_modulus("endomorphism algebra", n, 255)?;
    let p: crate::algebra::TernaryOp = Arc::new(move |f, g, h| {
        let (f, g, h) = (mod_int(f, n)?, mod_int(g, n)?, mod_int(h, n)?);
        Ok(Value::int((f - g * f + g * h).rem_euclid(n)))
    });
    let (member, sampler, grid, carrier) = residue_plumbing(n);
    Ok(MobiAlgebra::new(
        format!("endo-z{}", n),
        EqBackend::Exact,
        Value::int(0),
        Value::int((n + 1) / 2),
        Value::int(1),
        p,
        member,
        sampler,
        grid,
    )?
    .with_two(Value::int(2))?
    .with_carrier(carrier))
}

/// Midpoint-endomorphism algebra over the midpoint structure
/// x (+) y = (x + y) / 2 on Z_n (n odd), built from the four defining
/// membership conditions rather than ring arithmetic:
///
/// (i)   g(x (+) y) = g(x) (+) g(y);
/// (ii)  g(e) = e, with e = 0;
/// (iii) a complement map ḡ with ḡ(x) (+) g(x) = e (+) x;
/// (iv)  a mixer g̃ with ḡ(x) (+) g(y) = e (+) g̃(x,y).
///
/// Every candidate multiplier is checked against all four conditions over
/// the whole carrier at construction time, and the ternary operation is
/// assembled as p(f,g,h)(x) = g̃(f(x), h(x)).
pub fn midpoint_endo_algebra(n: i64) -> Result<MobiAlgebra> {
    check_odd_modulus("midpoint-endo algebra", n, 15)?;
    let inv2 = (n + 1) / 2;
    let opl = move |x: i64, y: i64| ((x + y) * inv2).rem_euclid(n);
    // ḡ(x) = x - g(x) solves (iii); g̃(x,y) = ḡ(x) + g(y) solves (iv).
    let bar = move |m: i64| (1 - m).rem_euclid(n);
    for m in 0..n {
        let bm = bar(m);
        for x in 0..n {
            if (m * opl(x, 0)).rem_euclid(n) != opl((m * x).rem_euclid(n), 0) {
                return Err(Error::config(format!(
                    "multiplier {} violates midpoint compatibility mod {}",
                    m, n
                )));
            }
            if opl((bm * x).rem_euclid(n), (m * x).rem_euclid(n)) != opl(0, x) {
                return Err(Error::config(format!(
                    "multiplier {} has no complement map mod {}",
                    m, n
                )));
            }
            for y in 0..n {
                if (m * opl(x, y)).rem_euclid(n)
                    != opl((m * x).rem_euclid(n), (m * y).rem_euclid(n))
                {
                    return Err(Error::config(format!(
                        "multiplier {} is not a midpoint homomorphism mod {}",
                        m, n
                    )));
                }
                let mixed = (bm * x + m * y).rem_euclid(n);
                if opl((bm * x).rem_euclid(n), (m * y).rem_euclid(n)) != opl(0, mixed) {
                    return Err(Error::config(format!(
                        "multiplier {} has no mixer map mod {}",
                        m, n
                    )));
                }
            }
        }
    }
    let p: crate::algebra::TernaryOp = Arc::new(move |f, g, h| {
        let (f, g, h) = (mod_int(f, n)?, mod_int(g, n)?, mod_int(h, n)?);
        // g̃(u, v) = ḡ(u) + g(v) applied to u = f(x), v = h(x).
        let mixed = (bar(g) * f + g * h).rem_euclid(n);
        Ok(Value::int(mixed))
    });
    let (member, sampler, grid, carrier) = residue_plumbing(n);
    Ok(MobiAlgebra::new(
        format!("midpoint-endo-z{}", n),
        EqBackend::Exact,
        Value::int(0),
        Value::int(inv2),
        Value::int(1),
        p,
        member,
        sampler,
        grid,
    )?
    .with_two(Value::int(2))?
    .with_carrier(carrier))
}

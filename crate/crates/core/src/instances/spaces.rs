//! Concrete mobility spaces over the unit interval (plus two over the
//! lozenge), including two designed axiom violators used to exercise the
//! reporting machinery.

use crate::eq::EqBackend;
use crate::error::{Error, Result};
use crate::instances::algebras::{interval_algebra, lozenge_algebra};
use crate::num::{lerp, scalars_tuple, tuple_scalars, Scalar};
use crate::runner::{MemberFn, SamplerFn};
use crate::sample::small_rational_in;
use crate::space::{MobiSpace, SpaceOp, TraceMap, TupleFilter};
use crate::value::{big_rat, Value};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use std::f64::consts::PI;
use std::sync::Arc;

/// Read a point as scalars; one-dimensional carriers use bare values.
pub(crate) fn point_scalars<S: Scalar>(v: &Value, dim: usize) -> Result<Vec<S>> {
    if dim == 1 {
        Ok(vec![S::from_value(v)?])
    } else {
        tuple_scalars(v, dim)
    }
}

/// Rebuild a point from scalars; inverse of `point_scalars`.
pub(crate) fn point_value<S: Scalar>(mut xs: Vec<S>, dim: usize) -> Value {
    if dim == 1 {
        xs.pop().expect("one component").into_value()
    } else {
        scalars_tuple(xs)
    }
}

fn rn_member(dim: usize, eq: EqBackend) -> MemberFn {
    let exact = eq.is_exact();
    Arc::new(move |v| {
        let comp_ok = |c: &Value| {
            if exact {
                c.as_rational().is_some()
            } else {
                matches!(c.as_float(), Some(f) if f.is_finite())
            }
        };
        if dim == 1 {
            v.as_tuple().is_none() && comp_ok(v)
        } else {
            v.as_tuple()
                .map_or(false, |t| t.len() == dim && t.iter().all(comp_ok))
        }
    })
}

fn rn_sampler(dim: usize, eq: EqBackend, lo: f64, hi: f64) -> SamplerFn {
    let exact = eq.is_exact();
    Arc::new(move |rng| {
        let comps: Vec<Value> = (0..dim)
            .map(|_| {
                if exact {
                    let (n, d) = small_rational_in(rng, lo, hi);
                    Value::rat(n, d)
                } else {
                    Value::float(rng.gen_range(lo..=hi))
                }
            })
            .collect();
        if dim == 1 {
            comps.into_iter().next().expect("one component")
        } else {
            Value::tuple(comps)
        }
    })
}

fn rn_grid(dim: usize, eq: EqBackend) -> Vec<Value> {
    let mk = |rows: Vec<Vec<(i64, i64)>>| -> Vec<Value> {
        rows.into_iter()
            .map(|row| {
                let comps: Vec<Value> = row
                    .into_iter()
                    .map(|(n, d)| {
                        if eq.is_exact() {
                            Value::rat(n, d)
                        } else {
                            Value::float(n as f64 / d as f64)
                        }
                    })
                    .collect();
                if dim == 1 {
                    comps.into_iter().next().expect("one component")
                } else {
                    Value::tuple(comps)
                }
            })
            .collect()
    };
    let mut rows = vec![vec![(0, 1); dim], vec![(1, 1); dim], vec![(-1, 1); dim]];
    let mut e1 = vec![(0, 1); dim];
    e1[0] = (1, 1);
    rows.push(e1);
    rows.push((0..dim).map(|i| (i as i64 + 1, 2)).collect());
    rows.dedup();
    mk(rows)
}

/// Flat n-space with the straight-line operation q(x,t,y) = (1-t)x + ty.
pub fn euclidean(dim: usize, eq: EqBackend) -> Result<MobiSpace> {
    if dim == 0 {
        return Err(Error::domain(
            "euclidean: dimension must be at least one",
        ));
    }
    let algebra = Arc::new(interval_algebra(eq)?);
    fn q_impl<S: Scalar>(x: &Value, t: &Value, y: &Value, dim: usize) -> Result<Value> {
        let xs = point_scalars::<S>(x, dim)?;
        let ys = point_scalars::<S>(y, dim)?;
        let t = S::from_value(t)?;
        let out = xs
            .iter()
            .zip(&ys)
            .map(|(a, b)| lerp(a, &t, b))
            .collect();
        Ok(point_value::<S>(out, dim))
    }
    let q: SpaceOp = if eq.is_exact() {
        Arc::new(move |x, t, y| q_impl::<BigRational>(x, t, y, dim))
    } else {
        Arc::new(move |x, t, y| q_impl::<f64>(x, t, y, dim))
    };
    MobiSpace::new(
        format!("euclidean-{}", dim),
        algebra,
        dim,
        q,
        rn_member(dim, eq),
        rn_sampler(dim, eq, -3.0, 3.0),
        rn_grid(dim, eq),
    )
}

/// The injective rescalings of the line covered by the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// F(x) = x on all of R: plain linear interpolation.
    Identity,
    /// F(x) = 1/x on x > 0, giving q(x,t,y) = xy / (tx + (1-t)y).
    Reciprocal,
    /// F(x) = log x on x > 0, giving q(x,t,y) = x^(1-t) y^t.
    Log,
}

fn positive_line_member(eq: EqBackend) -> MemberFn {
    let exact = eq.is_exact();
    Arc::new(move |v| {
        if exact {
            matches!(v.as_rational(), Some(r) if r.gt(&big_rat(0, 1)))
        } else {
            matches!(v.as_float(), Some(f) if f.is_finite() && f > 0.0)
        }
    })
}

fn positive_line_sampler(eq: EqBackend) -> SamplerFn {
    let exact = eq.is_exact();
    Arc::new(move |rng| {
        if exact {
            let (n, d) = small_rational_in(rng, 0.25, 4.0);
            Value::rat(n, d)
        } else {
            Value::float(rng.gen_range(0.25..=4.0))
        }
    })
}

fn positive_line_grid(eq: EqBackend) -> Vec<Value> {
    [(1, 1), (1, 2), (2, 1), (3, 1), (1, 4)]
        .iter()
        .map(|&(n, d)| {
            if eq.is_exact() {
                Value::rat(n, d)
            } else {
                Value::float(n as f64 / d as f64)
            }
        })
        .collect()
}

/// One-dimensional spaces produced by transporting the line along an
/// invertible map F: q(x,t,y) = F^{-1}((1-t)F(x) + tF(y)).
pub fn f_transform(transform: Transform, eq: EqBackend) -> Result<MobiSpace> {
    match transform {
        Transform::Identity => {
            let mut sp = euclidean(1, eq)?;
            sp = MobiSpace::new(
                "ftrans-id",
                sp.algebra().clone(),
                1,
                {
                    let inner = sp.clone();
                    Arc::new(move |x, t, y| inner.q_raw(x, t, y))
                },
                rn_member(1, eq),
                rn_sampler(1, eq, -3.0, 3.0),
                rn_grid(1, eq),
            )?;
            Ok(sp)
        }
        Transform::Reciprocal => {
            let algebra = Arc::new(interval_algebra(eq)?);
            fn q_impl<S: Scalar>(x: &Value, t: &Value, y: &Value) -> Result<Value> {
                let x = S::from_value(x)?;
                let y = S::from_value(y)?;
                let t = S::from_value(t)?;
                // xy / (tx + (1-t)y); positive carrier keeps the
                // denominator away from zero.
                let denom = t.mul(&x).add(&S::from_int(1).sub(&t).mul(&y));
                Ok(x.mul(&y).div(&denom)?.into_value())
            }
            let q: SpaceOp = if eq.is_exact() {
                Arc::new(|x, t, y| q_impl::<BigRational>(x, t, y))
            } else {
                Arc::new(|x, t, y| q_impl::<f64>(x, t, y))
            };
            MobiSpace::new(
                "ftrans-inv",
                algebra,
                1,
                q,
                positive_line_member(eq),
                positive_line_sampler(eq),
                positive_line_grid(eq),
            )
        }
        Transform::Log => {
            if eq.is_exact() {
                return Err(Error::config(
                    "ftrans-log: geometric interpolation needs the approximate backend",
                ));
            }
            let algebra = Arc::new(interval_algebra(eq)?);
            let q: SpaceOp = Arc::new(|x, t, y| {
                let x = f64::from_value(x)?;
                let y = f64::from_value(y)?;
                let t = f64::from_value(t)?;
                Ok(Value::float(((1.0 - t) * x.ln() + t * y.ln()).exp()))
            });
            MobiSpace::new(
                "ftrans-log",
                algebra,
                1,
                q,
                positive_line_member(eq),
                positive_line_sampler(eq),
                positive_line_grid(eq),
            )
        }
    }
}

/// Curves y = f(x) used by `graph_space`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphCurve {
    /// f(x) = 1/x on x > 0.
    Reciprocal,
    /// f(x) = x^2 on x > 0.
    Square,
    /// f(x) = x^3 on all of R.
    Cube,
}

fn curve_eval(curve: GraphCurve, x: &BigRational) -> BigRational {
    match curve {
        GraphCurve::Reciprocal => big_rat(1, 1) / x,
        GraphCurve::Square => x * x,
        GraphCurve::Cube => x * x * x,
    }
}

/// Plane spaces that move the first coordinate linearly and drag the second
/// along the graph of an injective curve:
///
///   q((x1,x2), t, (y1,y2)) =
///     (m1, x2 + (y2-x2) * (f(m1) - f(x1)) / (f(y1) - f(x1)))
///
/// with m1 = x1 + (y1-x1)t, falling back to plain interpolation of the
/// second coordinate when x1 = y1.
pub fn graph_space(curve: GraphCurve) -> Result<MobiSpace> {
    let eq = EqBackend::Exact;
    let algebra = Arc::new(interval_algebra(eq)?);
    let q: SpaceOp = Arc::new(move |x, t, y| {
        let xs = tuple_scalars::<BigRational>(x, 2)?;
        let ys = tuple_scalars::<BigRational>(y, 2)?;
        let t = BigRational::from_value(t)?;
        if xs[0] == ys[0] {
            let second = &xs[1] + &t * (&ys[1] - &xs[1]);
            return Ok(Value::tuple(vec![
                Value::Rational(xs[0].clone()),
                Value::Rational(second),
            ]));
        }
        let m1 = &xs[0] + (&ys[0] - &xs[0]) * &t;
        let rise = curve_eval(curve, &m1) - curve_eval(curve, &xs[0]);
        let run = curve_eval(curve, &ys[0]) - curve_eval(curve, &xs[0]);
        let second = &xs[1] + (&ys[1] - &xs[1]) * rise / run;
        Ok(Value::tuple(vec![
            Value::Rational(m1),
            Value::Rational(second),
        ]))
    });
    let positive_first = !matches!(curve, GraphCurve::Cube);
    let member: MemberFn = Arc::new(move |v| {
        let Some(items) = v.as_tuple() else {
            return false;
        };
        if items.len() != 2 {
            return false;
        }
        let (Some(first), Some(_)) = (items[0].as_rational(), items[1].as_rational()) else {
            return false;
        };
        !positive_first || first.gt(&big_rat(0, 1))
    });
    let sampler: SamplerFn = Arc::new(move |rng| {
        let (lo, hi) = if positive_first { (0.25, 4.0) } else { (-3.0, 3.0) };
        let (n1, d1) = small_rational_in(rng, lo, hi);
        let (n2, d2) = small_rational_in(rng, -3.0, 3.0);
        Value::rats(&[(n1, d1), (n2, d2)])
    });
    let grid = if positive_first {
        vec![
            Value::rats(&[(1, 1), (0, 1)]),
            Value::rats(&[(2, 1), (1, 1)]),
            Value::rats(&[(1, 2), (-1, 1)]),
            Value::rats(&[(1, 1), (1, 1)]),
            Value::rats(&[(3, 1), (2, 1)]),
        ]
    } else {
        vec![
            Value::rats(&[(0, 1), (0, 1)]),
            Value::rats(&[(1, 1), (1, 1)]),
            Value::rats(&[(-1, 1), (1, 1)]),
            Value::rats(&[(2, 1), (-1, 1)]),
            Value::rats(&[(1, 2), (3, 1)]),
        ]
    };
    let name = match curve {
        GraphCurve::Reciprocal => "graph-inv",
        GraphCurve::Square => "graph-square",
        GraphCurve::Cube => "graph-cube",
    };
    let space = MobiSpace::new(name, algebra, 2, q, member, sampler, grid)?;
    if matches!(curve, GraphCurve::Cube) {
        // Module extraction around the origin is only coherent away from
        // first coordinates that cancel; require every subset of sampled
        // first coordinates to stay off zero.
        let filter: TupleFilter = Arc::new(|tuple| {
            let firsts: Vec<BigRational> = tuple
                .iter()
                .filter_map(|v| v.as_tuple())
                .filter(|items| items.len() == 2)
                .filter_map(|items| items[0].as_rational().cloned())
                .collect();
            for mask in 1..(1u32 << firsts.len()) {
                let mut acc = BigRational::zero();
                for (i, f) in firsts.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        acc += f;
                    }
                }
                if num_traits::Zero::is_zero(&acc) {
                    return false;
                }
            }
            true
        });
        return Ok(space.with_bridge_filter(filter));
    }
    Ok(space)
}

/// Chart halves of the cylinder. Angles are stored as rational
/// coefficients of pi, so the stored first component c means the angle
/// c*pi; interpolation never re-wraps, which is exactly what makes the two
/// charts differ from the glued construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    /// Angle coefficient in (-1, 1].
    Low,
    /// Angle coefficient in [0, 2).
    High,
}

pub(crate) fn chart_trace_map() -> TraceMap {
    Arc::new(|v| {
        let comps = v.to_floats().unwrap_or_default();
        let mut out = comps;
        if let Some(first) = out.first_mut() {
            *first *= PI;
        }
        out
    })
}

pub fn cylinder_chart(chart: Chart) -> Result<MobiSpace> {
    let eq = EqBackend::Exact;
    let algebra = Arc::new(interval_algebra(eq)?);
    let q: SpaceOp = Arc::new(|x, t, y| {
        let xs = tuple_scalars::<BigRational>(x, 2)?;
        let ys = tuple_scalars::<BigRational>(y, 2)?;
        let t = BigRational::from_value(t)?;
        Ok(Value::tuple(vec![
            Value::Rational(lerp(&xs[0], &t, &ys[0])),
            Value::Rational(lerp(&xs[1], &t, &ys[1])),
        ]))
    });
    let member: MemberFn = Arc::new(move |v| {
        let Some(items) = v.as_tuple() else {
            return false;
        };
        if items.len() != 2 {
            return false;
        }
        let (Some(c), Some(_)) = (items[0].as_rational(), items[1].as_rational()) else {
            return false;
        };
        match chart {
            Chart::Low => c.gt(&big_rat(-1, 1)) && !c.gt(&big_rat(1, 1)),
            Chart::High => !c.lt(&big_rat(0, 1)) && c.lt(&big_rat(2, 1)),
        }
    });
    let member_for_sampler = member.clone();
    let sampler: SamplerFn = Arc::new(move |rng| loop {
        let (lo, hi) = match chart {
            Chart::Low => (-1.0, 1.0),
            Chart::High => (0.0, 2.0),
        };
        let (n1, d1) = small_rational_in(rng, lo, hi);
        let (n2, d2) = small_rational_in(rng, -3.0, 3.0);
        let cand = Value::rats(&[(n1, d1), (n2, d2)]);
        if member_for_sampler(&cand) {
            return cand;
        }
    });
    let grid = match chart {
        Chart::Low => vec![
            Value::rats(&[(0, 1), (0, 1)]),
            Value::rats(&[(1, 1), (0, 1)]),
            Value::rats(&[(-1, 2), (1, 1)]),
            Value::rats(&[(3, 4), (-1, 1)]),
            Value::rats(&[(1, 4), (2, 1)]),
        ],
        Chart::High => vec![
            Value::rats(&[(0, 1), (0, 1)]),
            Value::rats(&[(1, 1), (0, 1)]),
            Value::rats(&[(1, 2), (1, 1)]),
            Value::rats(&[(7, 4), (-1, 1)]),
            Value::rats(&[(3, 2), (2, 1)]),
        ],
    };
    let name = match chart {
        Chart::Low => "cylinder-lo",
        Chart::High => "cylinder-hi",
    };
    Ok(
        MobiSpace::new(name, algebra, 2, q, member, sampler, grid)?
            .with_trace_map(chart_trace_map()),
    )
}

/// Space-time of a particle under constant acceleration -2k: the first
/// coordinate is position, the second is time, and
///
///   q((x1,x2), t, (y1,y2)) =
///     ((1-t)x1 + t y1 + k (y2-x2)^2 (1-t) t, (1-t)x2 + t y2).
pub fn projectile_space(k_num: i64, k_den: i64, eq: EqBackend) -> Result<MobiSpace> {
    if k_den == 0 {
        return Err(Error::domain("projectile: zero denominator in k"));
    }
    let algebra = Arc::new(interval_algebra(eq)?);
    fn q_impl<S: Scalar>(
        x: &Value,
        t: &Value,
        y: &Value,
        k_num: i64,
        k_den: i64,
    ) -> Result<Value> {
        let xs = tuple_scalars::<S>(x, 2)?;
        let ys = tuple_scalars::<S>(y, 2)?;
        let t = S::from_value(t)?;
        let k = S::from_ratio(k_num, k_den);
        let one = S::from_int(1);
        let dt = ys[1].sub(&xs[1]);
        let bump = k.mul(&dt).mul(&dt).mul(&one.sub(&t)).mul(&t);
        let first = lerp(&xs[0], &t, &ys[0]).add(&bump);
        let second = lerp(&xs[1], &t, &ys[1]);
        Ok(scalars_tuple(vec![first, second]))
    }
    let q: SpaceOp = if eq.is_exact() {
        Arc::new(move |x, t, y| q_impl::<BigRational>(x, t, y, k_num, k_den))
    } else {
        Arc::new(move |x, t, y| q_impl::<f64>(x, t, y, k_num, k_den))
    };
    MobiSpace::new(
        format!("projectile-k{}", ratio_label(k_num, k_den)),
        algebra,
        2,
        q,
        rn_member(2, eq),
        rn_sampler(2, eq, -3.0, 3.0),
        rn_grid(2, eq),
    )
}

fn ratio_label(num: i64, den: i64) -> String {
    if den == 1 {
        format!("{}", num)
    } else {
        format!("{}_{}", num, den)
    }
}

/// Space-time of a critically damped oscillator with stiffness k:
///
///   q((x1,x2), t, (y1,y2)) =
///     ((1-t) x1 e^{k t (x2-y2)} + t y1 e^{k (1-t)(y2-x2)}, (1-t)x2 + t y2).
///
/// Transcendental, so only the approximate backend applies.
pub fn oscillator_space(k: f64) -> Result<MobiSpace> {
    if !k.is_finite() {
        return Err(Error::domain("oscillator: k must be finite"));
    }
    let eq = EqBackend::approx(crate::tolerances::LAW_TOLERANCE);
    let algebra = Arc::new(interval_algebra(eq)?);
    let q: SpaceOp = Arc::new(move |x, t, y| {
        let xs = tuple_scalars::<f64>(x, 2)?;
        let ys = tuple_scalars::<f64>(y, 2)?;
        let t = f64::from_value(t)?;
        let first = (1.0 - t) * xs[0] * (k * t * (xs[1] - ys[1])).exp()
            + t * ys[0] * (k * (1.0 - t) * (ys[1] - xs[1])).exp();
        let second = (1.0 - t) * xs[1] + t * ys[1];
        Ok(Value::floats(&[first, second]))
    });
    MobiSpace::new(
        format!("oscillator-k{}", k),
        algebra,
        2,
        q,
        rn_member(2, eq),
        rn_sampler(2, eq, -2.0, 2.0),
        vec![
            Value::floats(&[0.0, 0.0]),
            Value::floats(&[1.0, 0.0]),
            Value::floats(&[0.0, 1.0]),
            Value::floats(&[1.0, 1.0]),
            Value::floats(&[1.5, -0.5]),
        ],
    )
}

/// The unit interval moved by lozenge scalars: q(x,(t,s),y) =
/// (1-t-hs)x + (t+hs)y with h = +1 or -1. Both signs give a mobility
/// space, and both lose parameter injectivity: scalars (t,s) and
/// (t+u, s-hu) act identically.
pub fn lozenge_space(h: i8) -> Result<MobiSpace> {
    if h != 1 && h != -1 {
        return Err(Error::domain("lozenge space: h must be +1 or -1"));
    }
    let algebra = Arc::new(lozenge_algebra(EqBackend::Exact)?);
    let q: SpaceOp = Arc::new(move |x, a, y| {
        let x = BigRational::from_value(x)?;
        let y = BigRational::from_value(y)?;
        let a = tuple_scalars::<BigRational>(a, 2)?;
        let weight = if h == 1 { &a[0] + &a[1] } else { &a[0] - &a[1] };
        Ok(Value::Rational(
            (big_rat(1, 1) - &weight) * x + weight * y,
        ))
    });
    let member: MemberFn = Arc::new(|v| match v.as_rational() {
        Some(r) => !r.lt(&big_rat(0, 1)) && !r.gt(&big_rat(1, 1)),
        None => false,
    });
    let sampler: SamplerFn = Arc::new(|rng| {
        let (n, d) = small_rational_in(rng, 0.0, 1.0);
        Value::rat(n, d)
    });
    let grid = vec![
        Value::rat(0, 1),
        Value::rat(1, 1),
        Value::rat(1, 2),
        Value::rat(1, 4),
        Value::rat(3, 4),
    ];
    MobiSpace::new(
        format!("lozenge-space-h{}", if h == 1 { "+1" } else { "-1" }),
        algebra,
        1,
        q,
        member,
        sampler,
        grid,
    )
}

/// Designed violator: q(x,t,y) = x + t^2 (y-x) on the line. Endpoint,
/// idempotency, and cancellation axioms hold, but the homogeneity axiom
/// X5 fails because t^2 does not compose affinely.
pub fn time_squared_line() -> Result<MobiSpace> {
    let eq = EqBackend::Exact;
    let algebra = Arc::new(interval_algebra(eq)?);
    let q: SpaceOp = Arc::new(|x, t, y| {
        let x = BigRational::from_value(x)?;
        let y = BigRational::from_value(y)?;
        let t = BigRational::from_value(t)?;
        Ok(Value::Rational(&x + &t * &t * (&y - &x)))
    });
    MobiSpace::new(
        "time-squared-line",
        algebra,
        1,
        q,
        rn_member(1, eq),
        rn_sampler(1, eq, -3.0, 3.0),
        rn_grid(1, eq),
    )
}

/// Designed violator: the one-dimensional projectile track
/// q(x,t,y) = (1-t)x + ty + k(1-t)t, which forgets the time coordinate.
/// A moving particle is nowhere idempotent (X3) and X5 fails with it.
pub fn projectile_line(k_num: i64, k_den: i64) -> Result<MobiSpace> {
    if k_den == 0 {
        return Err(Error::domain("projectile line: zero denominator in k"));
    }
    let eq = EqBackend::Exact;
    let algebra = Arc::new(interval_algebra(eq)?);
    let q: SpaceOp = Arc::new(move |x, t, y| {
        let x = BigRational::from_value(x)?;
        let y = BigRational::from_value(y)?;
        let t = BigRational::from_value(t)?;
        let k = big_rat(k_num, k_den);
        let one = big_rat(1, 1);
        Ok(Value::Rational(
            (&one - &t) * &x + &t * &y + k * (&one - &t) * &t,
        ))
    });
    MobiSpace::new(
        format!("projectile-line-k{}", ratio_label(k_num, k_den)),
        algebra,
        1,
        q,
        rn_member(1, eq),
        rn_sampler(1, eq, -3.0, 3.0),
        rn_grid(1, eq),
    )
}

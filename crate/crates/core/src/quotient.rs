//! Quotients of a mobility space by a projection with section.
//!
//! The data is a cover space (X, q), a surjection h onto a set of base
//! representatives, a section s with h(s(u)) = u, and a representative
//! chooser theta(u, v) lifting v into the cover near s(u). Five conditions
//! make q_S(u, a, v) = h(q(s(u), a, theta(u, v))) a mobility space on the
//! base:
//!
//!   section                 h(s(u)) = u
//!   wrap-target             h(theta(u, v)) = v
//!   wrap-diagonal           theta(u, u) = s(u)
//!   midpoint-cancellation   v1 != v2  =>  q_S(u, 1/2, v1) != q_S(u, 1/2, v2)
//!   compatibility           q_S(u, p(a1,a2,a3), v)
//!                             = q_S(q_S(u,a1,v), a2, q_S(u,a3,v))
//!
//! The bundled example is the flat cylinder: angles carried as exact
//! rational coefficients of pi paired with a free height coordinate.

use crate::error::{Error, Result};
use crate::instances::spaces::euclidean;
use crate::report::LawReport;
use crate::runner::{run_law, Expect, MemberFn, SamplerFn, Slot};
use crate::sample::{small_rational_in, SampleStrategy};
use crate::space::{MobiSpace, SpaceOp, TraceMap};
use crate::value::{big_rat, Value};
use num_rational::BigRational;
use std::f64::consts::PI;
use std::sync::Arc;

pub type PointMap = Arc<dyn Fn(&Value) -> Result<Value> + Send + Sync>;
pub type RepMap = Arc<dyn Fn(&Value, &Value) -> Result<Value> + Send + Sync>;

#[derive(Clone)]
pub struct QuotientData {
    name: String,
    cover: Arc<MobiSpace>,
    project: PointMap,
    section: PointMap,
    rep: RepMap,
    member: MemberFn,
    sampler: SamplerFn,
    grid: Vec<Value>,
    trace_map: Option<TraceMap>,
}

impl QuotientData {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        cover: Arc<MobiSpace>,
        project: PointMap,
        section: PointMap,
        rep: RepMap,
        member: MemberFn,
        sampler: SamplerFn,
        grid: Vec<Value>,
    ) -> Result<QuotientData> {
        let name = name.into();
        for g in &grid {
            if !member(g) {
                return Err(Error::config(format!(
                    "{}: grid point {} is not a base point",
                    name, g
                )));
            }
        }
        Ok(QuotientData {
            name,
            cover,
            project,
            section,
            rep,
            member,
            sampler,
            grid,
            trace_map: None,
        })
    }

    pub fn with_trace_map(mut self, map: TraceMap) -> QuotientData {
        self.trace_map = Some(map);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cover(&self) -> &Arc<MobiSpace> {
        &self.cover
    }

    pub fn project(&self, x: &Value) -> Result<Value> {
        (self.project)(x)
    }

    pub fn section(&self, u: &Value) -> Result<Value> {
        (self.section)(u)
    }

    pub fn rep(&self, u: &Value, v: &Value) -> Result<Value> {
        (self.rep)(u, v)
    }

    /// The induced operation before any condition checking.
    pub fn q_base(&self, u: &Value, a: &Value, v: &Value) -> Result<Value> {
        let lifted = self.rep(u, v)?;
        self.project(&self.cover.q(&self.section(u)?, a, &lifted)?)
    }

    fn base_slot(&self) -> Slot {
        Slot {
            kind: 0,
            grid: self.grid.clone(),
            sampler: self.sampler.clone(),
            member: self.member.clone(),
            carrier: None,
        }
    }
}

/// Check the five quotient conditions. All reports passing means the
/// induced base operation is a mobility space.
pub fn check_quotient_conditions(
    data: &QuotientData,
    strategy: &SampleStrategy,
) -> Result<Vec<LawReport>> {
    let eq = data.cover.eq();
    let base = || data.base_slot();
    let scalar = || data.cover.algebra().slot();
    let mut reports = Vec::new();

    reports.push(run_law(
        "section",
        &[base()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| Ok(vec![(data.project(&data.section(&t[0])?)?, t[0].clone())]),
    )?);

    reports.push(run_law(
        "wrap-target",
        &[base(), base()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| Ok(vec![(data.project(&data.rep(&t[0], &t[1])?)?, t[1].clone())]),
    )?);

    reports.push(run_law(
        "wrap-diagonal",
        &[base()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| Ok(vec![(data.rep(&t[0], &t[0])?, data.section(&t[0])?)]),
    )?);

    let half = data.cover.algebra().half().clone();
    reports.push(run_law(
        "midpoint-cancellation",
        &[base(), base(), base()],
        Some((1, 2)),
        Expect::Distinct,
        None,
        eq,
        strategy,
        |t| {
            Ok(vec![(
                data.q_base(&t[0], &half, &t[1])?,
                data.q_base(&t[0], &half, &t[2])?,
            )])
        },
    )?);

    reports.push(run_law(
        "compatibility",
        &[base(), base(), scalar(), scalar(), scalar()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            let (u, v) = (&t[0], &t[1]);
            let mixed = data.cover.algebra().p(&t[2], &t[3], &t[4])?;
            let lhs = data.q_base(u, &mixed, v)?;
            let w1 = data.q_base(u, &t[2], v)?;
            let w3 = data.q_base(u, &t[4], v)?;
            let rhs = data.q_base(&w1, &t[3], &w3)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    Ok(reports)
}

/// Build the base mobility space, refusing when any of the five quotient
/// conditions fails on the gate sample.
pub fn quotient_space(data: &QuotientData, gate: &SampleStrategy) -> Result<MobiSpace> {
    let reports = check_quotient_conditions(data, gate)?;
    for report in reports {
        if !report.passed() {
            return Err(Error::LawFailure {
                instance: data.name.clone(),
                law: report.law.clone(),
                report: Box::new(report),
            });
        }
    }
    let q_data = data.clone();
    let q: SpaceOp = Arc::new(move |u, a, v| q_data.q_base(u, a, v));
    let mut space = MobiSpace::new(
        data.name.clone(),
        data.cover.algebra().clone(),
        data.cover.dim(),
        q,
        data.member.clone(),
        data.sampler.clone(),
        data.grid.clone(),
    )?;
    if let Some(map) = &data.trace_map {
        space = space.with_trace_map(map.clone());
    }
    Ok(space)
}

/// How the cylinder chooses a cover representative for the target angle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WrapStyle {
    /// Wrap into the closed band within half a turn of the source: the
    /// representative of v differing from s(u) by at most pi.
    Geodesic,
    /// Never wrap; always use the canonical representative s(v).
    Canonical,
    /// Wrap at a quarter turn instead of half a turn. Deliberately wrong:
    /// the induced operation fails the compatibility condition.
    Halfcut,
}

fn coeff_height(v: &Value) -> Result<(BigRational, BigRational)> {
    let parts = v
        .as_tuple()
        .ok_or_else(|| Error::domain("cylinder points are (angle, height) pairs"))?;
    if parts.len() != 2 {
        return Err(Error::domain("cylinder points are (angle, height) pairs"));
    }
    let c = parts[0]
        .as_rational()
        .ok_or_else(|| Error::domain("cylinder angle coefficients are exact rationals"))?;
    let z = parts[1]
        .as_rational()
        .ok_or_else(|| Error::domain("cylinder heights are exact rationals"))?;
    Ok((c.clone(), z.clone()))
}

fn pair_value(c: BigRational, z: BigRational) -> Value {
    Value::tuple(vec![Value::Rational(c), Value::Rational(z)])
}

fn mod_two(c: &BigRational) -> BigRational {
    let two = big_rat(2, 1);
    let turns = (c / &two).floor();
    c - turns * two
}

/// A cylinder quotient of the exact plane. Points are (angle, height)
/// with the angle carried as the rational coefficient of pi; base
/// representatives keep the coefficient in [0, 2).
pub fn cylinder_quotient(style: WrapStyle) -> Result<QuotientData> {
    let cover = Arc::new(euclidean(2, crate::eq::EqBackend::Exact)?);
    let name = match style {
        WrapStyle::Geodesic => "cylinder-quotient",
        WrapStyle::Canonical => "cylinder-quotient:nowrap",
        WrapStyle::Halfcut => "cylinder-quotient:halfcut",
    };

    let project: PointMap = Arc::new(|x| {
        let (c, z) = coeff_height(x)?;
        Ok(pair_value(mod_two(&c), z))
    });
    let section: PointMap = Arc::new(|u| Ok(u.clone()));
    let rep: RepMap = Arc::new(move |u, v| {
        let (uc, _) = coeff_height(u)?;
        let (vc, vz) = coeff_height(v)?;
        let lifted = match style {
            WrapStyle::Canonical => vc,
            WrapStyle::Geodesic | WrapStyle::Halfcut => {
                let limit = if style == WrapStyle::Geodesic {
                    big_rat(1, 1)
                } else {
                    big_rat(1, 2)
                };
                let delta = &vc - &uc;
                if delta < -&limit {
                    vc + big_rat(2, 1)
                } else if delta > limit {
                    vc - big_rat(2, 1)
                } else {
                    vc
                }
            }
        };
        Ok(pair_value(lifted, vz))
    });

    let member: MemberFn = Arc::new(|v| match v.as_tuple() {
        Some(parts) if parts.len() == 2 => {
            match (parts[0].as_rational(), parts[1].as_rational()) {
                (Some(c), Some(_)) => *c >= big_rat(0, 1) && *c < big_rat(2, 1),
                _ => false,
            }
        }
        _ => false,
    });
    let sampler: SamplerFn = Arc::new(|rng| {
        let (cn, cd) = small_rational_in(rng, 0.0, 2.0);
        let (zn, zd) = small_rational_in(rng, -3.0, 3.0);
        // The range is inclusive; wrap the seam value back to zero.
        let coeff = mod_two(&big_rat(cn, cd));
        Value::tuple(vec![Value::Rational(coeff), Value::rat(zn, zd)])
    });
    let grid = vec![
        Value::tuple(vec![Value::rat(0, 1), Value::rat(0, 1)]),
        Value::tuple(vec![Value::rat(1, 2), Value::rat(0, 1)]),
        Value::tuple(vec![Value::rat(1, 1), Value::rat(1, 1)]),
        Value::tuple(vec![Value::rat(7, 4), Value::rat(0, 1)]),
        Value::tuple(vec![Value::rat(3, 2), Value::rat(-2, 1)]),
    ];
    let trace: TraceMap = Arc::new(|v| {
        let mut row = v.to_floats().unwrap_or_default();
        if let Some(first) = row.first_mut() {
            *first *= PI;
        }
        row
    });
    Ok(QuotientData::new(name, cover, project, section, rep, member, sampler, grid)?
        .with_trace_map(trace))
}

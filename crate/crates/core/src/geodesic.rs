//! Numeric geodesic machinery: second-order fields x'' = g(x, x'), a
//! fixed-step RK4 integrator, Newton shooting for the connecting velocity,
//! a numeric identity suite for the induced flow, and the construction of a
//! mobility space q(x,t,y) = flow(x, beta(x,y), t) from any such field.

use crate::eq::EqBackend;
use crate::error::{Error, Result};
use crate::instances::algebras::interval_algebra;
use crate::num::Scalar;
use crate::report::LawReport;
use crate::runner::{run_law, Expect, MemberFn, SamplerFn, Slot};
use crate::sample::SampleStrategy;
use crate::space::{MobiSpace, SpaceOp};
use crate::tolerances;
use crate::value::Value;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub type FieldFn = Arc<dyn Fn(&[f64], &[f64]) -> Result<Vec<f64>> + Send + Sync>;
pub type DomainFn = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;
pub type VecSampler = Arc<dyn Fn(&mut ChaCha8Rng) -> Vec<f64> + Send + Sync>;
pub type PairFilter = Arc<dyn Fn(&[f64], &[f64]) -> bool + Send + Sync>;
/// Christoffel symbols at a point: gamma[k][i][j] multiplies v_i v_j in
/// component k of the geodesic equation.
pub type GammaFn = Arc<dyn Fn(&[f64]) -> Vec<Vec<Vec<f64>>> + Send + Sync>;
/// Physical acceleration f(x, xdot, t) for a time-augmented field.
pub type AccelFn = Arc<dyn Fn(&[f64], &[f64], f64) -> Vec<f64> + Send + Sync>;

/// A second-order field together with the sampling data needed to test it.
#[derive(Clone)]
pub struct GeodesicField {
    name: String,
    dim: usize,
    g: FieldFn,
    domain: DomainFn,
    /// In-domain reference points; double as the induced space's grid.
    anchors: Vec<Vec<f64>>,
    grid_velocities: Vec<Vec<f64>>,
    point_sampler: VecSampler,
    velocity_sampler: VecSampler,
    /// Admissibility of a shooting pair (x, y); pairs failing this are
    /// skipped by the identity suite rather than reported.
    pair_filter: Option<PairFilter>,
}

fn all_finite(xs: &[f64]) -> bool {
    xs.iter().all(|x| x.is_finite())
}

fn box_sampler(dim: usize, lo: f64, hi: f64) -> VecSampler {
    Arc::new(move |rng| (0..dim).map(|_| rng.gen_range(lo..=hi)).collect())
}

impl GeodesicField {
    /// A field on R^dim with default samplers: points in [-2,2]^dim,
    /// velocities in [-1.5,1.5]^dim, anchors at the origin and all-ones.
    pub fn new(name: impl Into<String>, dim: usize, g: FieldFn) -> Result<GeodesicField> {
        if dim == 0 {
            return Err(Error::domain("geodesic field: dimension must be at least one"));
        }
        let mut alternating = vec![0.0; dim];
        for (i, slot) in alternating.iter_mut().enumerate() {
            *slot = if i % 2 == 0 { 1.0 } else { -0.5 };
        }
        Ok(GeodesicField {
            name: name.into(),
            dim,
            g,
            domain: Arc::new(all_finite),
            anchors: vec![vec![0.0; dim], vec![1.0; dim]],
            grid_velocities: vec![vec![0.5; dim], alternating],
            point_sampler: box_sampler(dim, -2.0, 2.0),
            velocity_sampler: box_sampler(dim, -1.5, 1.5),
            pair_filter: None,
        })
    }

    pub fn with_domain(mut self, domain: DomainFn) -> GeodesicField {
        self.domain = domain;
        self
    }

    pub fn with_anchors(mut self, anchors: Vec<Vec<f64>>) -> GeodesicField {
        self.anchors = anchors;
        self
    }

    pub fn with_grid_velocities(mut self, vs: Vec<Vec<f64>>) -> GeodesicField {
        self.grid_velocities = vs;
        self
    }

    pub fn with_point_sampler(mut self, s: VecSampler) -> GeodesicField {
        self.point_sampler = s;
        self
    }

    pub fn with_velocity_sampler(mut self, s: VecSampler) -> GeodesicField {
        self.velocity_sampler = s;
        self
    }

    pub fn with_pair_filter(mut self, f: PairFilter) -> GeodesicField {
        self.pair_filter = Some(f);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn in_domain(&self, x: &[f64]) -> bool {
        (self.domain)(x)
    }

    pub fn anchors(&self) -> &[Vec<f64>] {
        &self.anchors
    }

    /// Evaluate the field, checking the base point against the domain.
    pub fn eval(&self, x: &[f64], v: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dim || v.len() != self.dim {
            return Err(Error::domain(format!(
                "{}: expected {} components",
                self.name, self.dim
            )));
        }
        if !self.in_domain(x) {
            return Err(Error::domain(format!(
                "{}: point outside the field domain",
                self.name
            )));
        }
        (self.g)(x, v)
    }

    fn eval_raw(&self, x: &[f64], v: &[f64]) -> Result<Vec<f64>> {
        (self.g)(x, v)
    }
}

/// Quadratic Christoffel field: component k of g is
/// -sum_{i,j} gamma[k][i][j] v_i v_j.
pub fn christoffel_field(
    name: impl Into<String>,
    dim: usize,
    gamma: GammaFn,
) -> Result<GeodesicField> {
    let g: FieldFn = Arc::new(move |x, v| {
        let coeffs = gamma(x);
        if coeffs.len() != v.len() {
            return Err(Error::domain(
                "christoffel coefficients have the wrong dimension",
            ));
        }
        let mut out = vec![0.0; v.len()];
        for (k, slab) in coeffs.iter().enumerate() {
            let mut acc = 0.0;
            for (i, row) in slab.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    acc += c * v[i] * v[j];
                }
            }
            out[k] = -acc;
        }
        Ok(out)
    });
    GeodesicField::new(name, dim, g)
}

/// Lift physical dynamics x'' = f(x, xdot, t) on R^n to a homogeneous
/// field on R^{n+1} whose last coordinate is time:
///
///   g((x, tau), (x', tau')) = (tau'^2 f(x, x'/tau', tau), 0).
///
/// A zero velocity is stationary; a spatial velocity with tau' = 0 has no
/// physical trajectory and reports a singular velocity.
pub fn time_augmented_field(
    name: impl Into<String>,
    n: usize,
    f: AccelFn,
) -> Result<GeodesicField> {
    let g: FieldFn = Arc::new(move |x, v| {
        let (pos, tau) = x.split_at(n);
        let (vel, vtau) = v.split_at(n);
        let vtau = vtau[0];
        if vtau == 0.0 {
            if vel.iter().all(|&c| c == 0.0) {
                return Ok(vec![0.0; n + 1]);
            }
            return Err(Error::SingularVelocity);
        }
        let xdot: Vec<f64> = vel.iter().map(|&c| c / vtau).collect();
        let mut out = f(pos, &xdot, tau[0]);
        for c in out.iter_mut() {
            *c *= vtau * vtau;
        }
        out.push(0.0);
        Ok(out)
    });
    let dim = n + 1;
    let velocity_sampler: VecSampler = Arc::new(move |rng| {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.5..=1.5)).collect();
        let sign = if rng.gen_range(0..2) == 0 { 1.0 } else { -1.0 };
        v.push(sign * rng.gen_range(0.3..=1.2));
        v
    });
    let pair_filter: PairFilter = Arc::new(move |x, y| (y[n] - x[n]).abs() >= 0.1);
    let mut grid_velocities = vec![vec![0.5; dim], vec![0.0; dim]];
    grid_velocities[1][0] = 1.0;
    grid_velocities[1][n] = -0.6;
    Ok(GeodesicField::new(name, dim, g)?
        .with_velocity_sampler(velocity_sampler)
        .with_grid_velocities(grid_velocities)
        .with_pair_filter(pair_filter))
}

/// The flat field g = 0; its geodesic space is the straight-line space.
pub fn free_field(dim: usize) -> Result<GeodesicField> {
    GeodesicField::new(
        format!("free-{}", dim),
        dim,
        Arc::new(|_x, v| Ok(vec![0.0; v.len()])),
    )
}

/// Constant downward acceleration -2k in the first coordinate, with the
/// second coordinate as time: g((x1,x2),(v1,v2)) = (-2k v2^2, 0).
pub fn projectile_field(k: f64) -> Result<GeodesicField> {
    GeodesicField::new(
        format!("projectile-field-k{}", k),
        2,
        Arc::new(move |_x, v| Ok(vec![-2.0 * k * v[1] * v[1], 0.0])),
    )
}

/// One-dimensional field g(x,v) = -v^2; geodesics are x0 + ln(1 + c t)
/// curves, i.e. straight lines after the substitution x -> e^x. In
/// Christoffel form the single symbol is the constant 1.
pub fn log_line_field() -> Result<GeodesicField> {
    Ok(christoffel_field(
        "log-line",
        1,
        Arc::new(|_x| vec![vec![vec![1.0]]]),
    )?
    .with_velocity_sampler(box_sampler(1, -0.4, 1.5))
    .with_grid_velocities(vec![vec![0.5], vec![1.0]]))
}

/// Critically damped oscillator x'' = -k^2 x - 2k x', lifted to
/// space-time.
pub fn oscillator_field(k: f64) -> Result<GeodesicField> {
    time_augmented_field(
        format!("oscillator-field-k{}", k),
        1,
        Arc::new(move |x, xdot, _t| vec![-k * k * x[0] - 2.0 * k * xdot[0]]),
    )
}

#[derive(Clone, Copy, Debug)]
pub struct IntegratorConfig {
    /// Fixed RK4 steps per unit of flow parameter.
    pub steps_per_unit: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            steps_per_unit: 1024,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlowState {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
}

fn axpy(y: &[f64], a: f64, x: &[f64]) -> Vec<f64> {
    y.iter().zip(x).map(|(yi, xi)| yi + a * xi).collect()
}

/// Integrate the flow from (x, v) for parameter t with classical RK4 on
/// the first-order system (x', v') = (v, g(x, v)). Leaving the domain (or
/// producing a non-finite state) reports the parameter value reached.
pub fn integrate(
    field: &GeodesicField,
    x: &[f64],
    v: &[f64],
    t: f64,
    cfg: &IntegratorConfig,
) -> Result<FlowState> {
    if cfg.steps_per_unit == 0 {
        return Err(Error::config("integrator: steps_per_unit must be positive"));
    }
    if x.len() != field.dim() || v.len() != field.dim() {
        return Err(Error::domain(format!(
            "{}: expected {} components",
            field.name(),
            field.dim()
        )));
    }
    if !field.in_domain(x) {
        return Err(Error::FlowEscape { exit: 0.0 });
    }
    let steps = ((t.abs() * cfg.steps_per_unit as f64).ceil() as usize).max(1);
    let h = t / steps as f64;
    let mut pos = x.to_vec();
    let mut vel = v.to_vec();
    for step in 0..steps {
        let k1v = field.eval_raw(&pos, &vel)?;
        let p2 = axpy(&pos, h / 2.0, &vel);
        let v2 = axpy(&vel, h / 2.0, &k1v);
        let k2v = field.eval_raw(&p2, &v2)?;
        let p3 = axpy(&pos, h / 2.0, &v2);
        let v3 = axpy(&vel, h / 2.0, &k2v);
        let k3v = field.eval_raw(&p3, &v3)?;
        let p4 = axpy(&pos, h, &v3);
        let v4 = axpy(&vel, h, &k3v);
        let k4v = field.eval_raw(&p4, &v4)?;
        for i in 0..pos.len() {
            pos[i] += h / 6.0 * (vel[i] + 2.0 * v2[i] + 2.0 * v3[i] + v4[i]);
            vel[i] += h / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
        }
        if !all_finite(&pos) || !all_finite(&vel) || !field.in_domain(&pos) {
            return Err(Error::FlowEscape {
                exit: h * (step + 1) as f64,
            });
        }
    }
    Ok(FlowState {
        position: pos,
        velocity: vel,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct ShootingConfig {
    pub max_iterations: usize,
    /// Max-norm residual at which the solve is accepted.
    pub residual_tolerance: f64,
    /// Forward-difference step for the Jacobian.
    pub jacobian_step: f64,
    /// Newton step halvings allowed before giving up on an iteration.
    pub max_halvings: usize,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        ShootingConfig {
            max_iterations: 50,
            residual_tolerance: tolerances::SHOOTING_RESIDUAL,
            jacobian_step: tolerances::JACOBIAN_STEP,
            max_halvings: 8,
        }
    }
}

fn max_norm(xs: &[f64]) -> f64 {
    xs.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Solve the dense system a * x = b with partial pivoting; `None` when the
/// matrix is numerically singular.
fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].abs() < 1e-14 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Newton shooting for the connecting velocity: find v with
/// flow-position(x, v, 1) = y. The initial guess is the chord y - x.
pub fn shoot_beta(
    field: &GeodesicField,
    x: &[f64],
    y: &[f64],
    icfg: &IntegratorConfig,
    scfg: &ShootingConfig,
) -> Result<Vec<f64>> {
    let residual_of = |v: &[f64]| -> Result<Vec<f64>> {
        let end = integrate(field, x, v, 1.0, icfg)?;
        Ok(end
            .position
            .iter()
            .zip(y)
            .map(|(p, t)| p - t)
            .collect())
    };
    let mut v: Vec<f64> = y.iter().zip(x).map(|(a, b)| a - b).collect();
    let mut residual = residual_of(&v)?;
    let mut best = max_norm(&residual);
    for iteration in 0..scfg.max_iterations {
        if best <= scfg.residual_tolerance {
            // Self-validation: the returned velocity must actually connect
            // the endpoints when re-integrated.
            let check = integrate(field, x, &v, 1.0, icfg)?;
            let err = check
                .position
                .iter()
                .zip(y)
                .map(|(p, t)| (p - t).abs())
                .fold(0.0f64, f64::max);
            if err > scfg.residual_tolerance {
                return Err(Error::ShootingFailure {
                    iterations: iteration,
                    residual: err,
                });
            }
            return Ok(v);
        }
        let n = v.len();
        let mut jacobian = vec![vec![0.0; n]; n];
        for j in 0..n {
            let mut vj = v.clone();
            vj[j] += scfg.jacobian_step;
            let rj = residual_of(&vj)?;
            for i in 0..n {
                jacobian[i][j] = (rj[i] - residual[i]) / scfg.jacobian_step;
            }
        }
        let Some(delta) = solve_linear(jacobian, residual.clone()) else {
            return Err(Error::ShootingFailure {
                iterations: iteration,
                residual: best,
            });
        };
        let mut lambda = 1.0;
        let mut improved = false;
        for _ in 0..=scfg.max_halvings {
            let candidate = axpy(&v, -lambda, &delta);
            match residual_of(&candidate) {
                Ok(r) => {
                    let norm = max_norm(&r);
                    if norm < best {
                        v = candidate;
                        residual = r;
                        best = norm;
                        improved = true;
                        break;
                    }
                }
                Err(_) => {
                    // Candidate flow left the domain; shorten the step.
                }
            }
            lambda /= 2.0;
        }
        if !improved {
            return Err(Error::ShootingFailure {
                iterations: iteration + 1,
                residual: best,
            });
        }
    }
    if best <= scfg.residual_tolerance {
        let check = integrate(field, x, &v, 1.0, icfg)?;
        let err = check
            .position
            .iter()
            .zip(y)
            .map(|(p, t)| (p - t).abs())
            .fold(0.0f64, f64::max);
        if err <= scfg.residual_tolerance {
            return Ok(v);
        }
    }
    Err(Error::ShootingFailure {
        iterations: scfg.max_iterations,
        residual: best,
    })
}

fn encode_point(dim: usize, xs: &[f64]) -> Value {
    if dim == 1 {
        Value::float(xs[0])
    } else {
        Value::floats(xs)
    }
}

fn decode_floats(v: &Value) -> Result<Vec<f64>> {
    v.to_floats()
        .ok_or_else(|| Error::domain(format!("expected a numeric point, got {}", v)))
}

fn float_slot(
    kind: u8,
    grid: Vec<Vec<f64>>,
    sampler: VecSampler,
    dim: usize,
) -> Slot {
    let member: MemberFn = Arc::new(move |v| match v.to_floats() {
        Some(xs) => xs.len() == dim && all_finite(&xs),
        None => false,
    });
    let value_sampler: SamplerFn = Arc::new(move |rng| Value::floats(&sampler(rng)));
    Slot {
        kind,
        grid: grid.iter().map(|v| Value::floats(v)).collect(),
        sampler: value_sampler,
        member,
        carrier: None,
    }
}

fn scalar_slot(grid: &[f64]) -> Slot {
    let member: MemberFn = Arc::new(|v| matches!(v.as_float(), Some(f) if (0.0..=1.0).contains(&f)));
    let sampler: SamplerFn = Arc::new(|rng| Value::float(rng.gen_range(0.0..=1.0)));
    Slot {
        kind: 1,
        grid: grid.iter().map(|&f| Value::float(f)).collect(),
        sampler,
        member,
        carrier: None,
    }
}

/// Homogeneity of the field: g(x, s v) = s^2 g(x, v) over scaling factors
/// {-2, -1, 0, 1/2, 3}.
pub fn check_homogeneity(field: &GeodesicField, strategy: &SampleStrategy) -> Result<LawReport> {
    let point = float_slot(
        0,
        field.anchors.clone(),
        field.point_sampler.clone(),
        field.dim(),
    );
    let vel = float_slot(
        2,
        field.grid_velocities.clone(),
        field.velocity_sampler.clone(),
        field.dim(),
    );
    let scales: Vec<Value> = [-2.0, -1.0, 0.0, 0.5, 3.0]
        .iter()
        .map(|&s| Value::float(s))
        .collect();
    let scale_slot = Slot {
        kind: 1,
        grid: scales,
        sampler: Arc::new(|rng| Value::float(rng.gen_range(-2.0..=3.0))),
        member: Arc::new(|v| matches!(v.as_float(), Some(f) if f.is_finite())),
        carrier: None,
    };
    let eq = EqBackend::approx(tolerances::LAW_TOLERANCE);
    run_law(
        "homogeneity",
        &[point, vel, scale_slot],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            let x = decode_floats(&t[0])?;
            let v = decode_floats(&t[1])?;
            let s = t[2].as_float().expect("scale is a float");
            if !field.in_domain(&x) {
                return Ok(vec![]);
            }
            let scaled: Vec<f64> = v.iter().map(|c| c * s).collect();
            let lhs = match field.eval_raw(&x, &scaled) {
                Ok(g) => g,
                Err(Error::SingularVelocity) => return Ok(vec![]),
                Err(e) => return Err(e),
            };
            let rhs = match field.eval_raw(&x, &v) {
                Ok(g) => g.iter().map(|c| c * s * s).collect::<Vec<f64>>(),
                Err(Error::SingularVelocity) => return Ok(vec![]),
                Err(e) => return Err(e),
            };
            Ok(vec![(Value::floats(&lhs), Value::floats(&rhs))])
        },
    )
}

struct FlowContext<'a> {
    field: &'a GeodesicField,
    icfg: IntegratorConfig,
    scfg: ShootingConfig,
}

impl<'a> FlowContext<'a> {
    fn flow(&self, x: &[f64], v: &[f64], t: f64) -> Result<FlowState> {
        integrate(self.field, x, v, t, &self.icfg)
    }

    fn beta(&self, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
        if let Some(filter) = &self.field.pair_filter {
            let same = x == y;
            if !same && !filter(x, y) {
                return Err(Error::SingularVelocity);
            }
        }
        shoot_beta(self.field, x, y, &self.icfg, &self.scfg)
    }
}

/// Skippable evaluation: soft numeric failures (escape, divergence,
/// singular pairs) drop the tuple instead of failing the law.
fn soft<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::FlowEscape { .. })
        | Err(Error::ShootingFailure { .. })
        | Err(Error::SingularVelocity) => Ok(None),
        Err(e) => Err(e),
    }
}

macro_rules! try_soft {
    ($e:expr) => {
        match soft($e)? {
            Some(v) => v,
            None => return Ok(vec![]),
        }
    };
}

/// Numeric identity suite for the induced flow and its connecting map.
///
/// Flow identities (each compared within the flow tolerance):
///   flow-rest         flow(x, 0, t) = x
///   flow-compose      flow(x, v, s + u t) = flow(flow(x,v,s), u vel(x,v,s), t)
///   flow-rescale      flow(x, v, s t) = flow(x, s v, t)
///   flow-reverse      flow(x, v, 1-t) = flow(end, -end-velocity, t)
///   flow-restart      flow(x, v, t) = flow(flow(x,v,s), (t-s) vel(x,v,s), 1)
///
/// Connecting-map identities (tuples whose shooting diverges are skipped):
///   beta-diagonal     beta(x, x) = 0
///   beta-rescale      s beta(x,y) = beta(x, flow(x, beta(x,y), s))
///   beta-chord        beta(flow(x,v,s), flow(x,v,t)) = (t-s) vel(x,v,s)
///   beta-reverse      vel(x, beta(x,y), 1) = -beta(y, x)
///
/// Diagnostic:
///   velocity-separation  distinct velocities stay distinguishable at
///                        parameters 1/4, 1/2 and 1.
pub fn verify_flow_identities(
    field: &GeodesicField,
    icfg: &IntegratorConfig,
    scfg: &ShootingConfig,
    strategy: &SampleStrategy,
) -> Result<Vec<LawReport>> {
    let ctx = FlowContext {
        field,
        icfg: *icfg,
        scfg: *scfg,
    };
    let eq = EqBackend::approx(tolerances::FLOW_TOLERANCE);
    let dim = field.dim();
    let point = || float_slot(0, field.anchors.clone(), field.point_sampler.clone(), dim);
    let vel = || {
        float_slot(
            2,
            field.grid_velocities.clone(),
            field.velocity_sampler.clone(),
            dim,
        )
    };
    let time = || scalar_slot(&[0.0, 0.25, 0.5, 0.75, 1.0]);
    let mut reports = Vec::new();

    reports.push(run_law(
        "flow-rest",
        &[point(), time()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let t = tu[1].as_float().expect("time");
            let end = try_soft!(ctx.flow(&x, &vec![0.0; dim], t));
            Ok(vec![(Value::floats(&end.position), Value::floats(&x))])
        },
    )?);

    reports.push(run_law(
        "flow-compose",
        &[point(), vel(), time(), time(), time()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let v = decode_floats(&tu[1])?;
            let (s, u, t) = (
                tu[2].as_float().expect("time"),
                tu[3].as_float().expect("time"),
                tu[4].as_float().expect("time"),
            );
            let lhs = try_soft!(ctx.flow(&x, &v, s + u * t));
            let mid = try_soft!(ctx.flow(&x, &v, s));
            let scaled: Vec<f64> = mid.velocity.iter().map(|c| c * u).collect();
            let rhs = try_soft!(ctx.flow(&mid.position, &scaled, t));
            Ok(vec![(
                Value::floats(&lhs.position),
                Value::floats(&rhs.position),
            )])
        },
    )?);

    reports.push(run_law(
        "flow-rescale",
        &[point(), vel(), time(), time()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let v = decode_floats(&tu[1])?;
            let (s, t) = (
                tu[2].as_float().expect("time"),
                tu[3].as_float().expect("time"),
            );
            let lhs = try_soft!(ctx.flow(&x, &v, s * t));
            let scaled: Vec<f64> = v.iter().map(|c| c * s).collect();
            let rhs = try_soft!(ctx.flow(&x, &scaled, t));
            Ok(vec![(
                Value::floats(&lhs.position),
                Value::floats(&rhs.position),
            )])
        },
    )?);

    reports.push(run_law(
        "flow-reverse",
        &[point(), vel(), time()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let v = decode_floats(&tu[1])?;
            let t = tu[2].as_float().expect("time");
            let lhs = try_soft!(ctx.flow(&x, &v, 1.0 - t));
            let end = try_soft!(ctx.flow(&x, &v, 1.0));
            let back: Vec<f64> = end.velocity.iter().map(|c| -c).collect();
            let rhs = try_soft!(ctx.flow(&end.position, &back, t));
            Ok(vec![(
                Value::floats(&lhs.position),
                Value::floats(&rhs.position),
            )])
        },
    )?);

    reports.push(run_law(
        "flow-restart",
        &[point(), vel(), time(), time()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let v = decode_floats(&tu[1])?;
            let (s, t) = (
                tu[2].as_float().expect("time"),
                tu[3].as_float().expect("time"),
            );
            let lhs = try_soft!(ctx.flow(&x, &v, t));
            let mid = try_soft!(ctx.flow(&x, &v, s));
            let scaled: Vec<f64> = mid.velocity.iter().map(|c| c * (t - s)).collect();
            let rhs = try_soft!(ctx.flow(&mid.position, &scaled, 1.0));
            Ok(vec![(
                Value::floats(&lhs.position),
                Value::floats(&rhs.position),
            )])
        },
    )?);

    reports.push(run_law(
        "beta-diagonal",
        &[point()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let b = try_soft!(ctx.beta(&x, &x));
            Ok(vec![(Value::floats(&b), Value::floats(&vec![0.0; dim]))])
        },
    )?);

    reports.push(run_law(
        "beta-rescale",
        &[point(), point(), time()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let y = decode_floats(&tu[1])?;
            let s = tu[2].as_float().expect("time");
            let b = try_soft!(ctx.beta(&x, &y));
            let lhs: Vec<f64> = b.iter().map(|c| c * s).collect();
            let mid = try_soft!(ctx.flow(&x, &b, s));
            let rhs = try_soft!(ctx.beta(&x, &mid.position));
            Ok(vec![(Value::floats(&lhs), Value::floats(&rhs))])
        },
    )?);

    reports.push(run_law(
        "beta-chord",
        &[point(), vel(), time(), time()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let v = decode_floats(&tu[1])?;
            let (s, t) = (
                tu[2].as_float().expect("time"),
                tu[3].as_float().expect("time"),
            );
            let a = try_soft!(ctx.flow(&x, &v, s));
            let b = try_soft!(ctx.flow(&x, &v, t));
            let lhs = try_soft!(ctx.beta(&a.position, &b.position));
            let rhs: Vec<f64> = a.velocity.iter().map(|c| c * (t - s)).collect();
            Ok(vec![(Value::floats(&lhs), Value::floats(&rhs))])
        },
    )?);

    reports.push(run_law(
        "beta-reverse",
        &[point(), point()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let y = decode_floats(&tu[1])?;
            let b = try_soft!(ctx.beta(&x, &y));
            let end = try_soft!(ctx.flow(&x, &b, 1.0));
            let back = try_soft!(ctx.beta(&y, &x));
            let negated: Vec<f64> = back.iter().map(|c| -c).collect();
            Ok(vec![(
                Value::floats(&end.velocity),
                Value::floats(&negated),
            )])
        },
    )?);

    reports.push(run_law(
        "velocity-separation",
        &[point(), vel(), vel()],
        Some((1, 2)),
        Expect::Distinct,
        None,
        eq,
        strategy,
        |tu| {
            let x = decode_floats(&tu[0])?;
            let v1 = decode_floats(&tu[1])?;
            let v2 = decode_floats(&tu[2])?;
            let mut pairs = Vec::new();
            for s in [0.25, 0.5, 1.0] {
                let a = try_soft!(ctx.flow(&x, &v1, s));
                let b = try_soft!(ctx.flow(&x, &v2, s));
                pairs.push((Value::floats(&a.position), Value::floats(&b.position)));
            }
            Ok(pairs)
        },
    )?);

    Ok(reports)
}

type BetaMemo = Mutex<HashMap<(Vec<u64>, Vec<u64>), Vec<f64>>>;

fn bits(xs: &[f64]) -> Vec<u64> {
    xs.iter().map(|x| x.to_bits()).collect()
}

/// The mobility space induced by a geodesic field:
/// q(x, t, y) = flow-position(x, beta(x, y), t). Connecting velocities are
/// memoized per endpoint pair, so repeated queries along one chord pay for
/// a single shooting solve.
pub fn geodesic_space(
    field: Arc<GeodesicField>,
    icfg: IntegratorConfig,
    scfg: ShootingConfig,
) -> Result<MobiSpace> {
    let tolerance = tolerances::GEODESIC_TOLERANCE.max(10.0 * scfg.residual_tolerance);
    let eq = EqBackend::approx(tolerance);
    let algebra = Arc::new(interval_algebra(eq)?);
    let dim = field.dim();
    let memo: Arc<BetaMemo> = Arc::new(Mutex::new(HashMap::new()));

    let q_field = field.clone();
    let q: SpaceOp = Arc::new(move |x, t, y| {
        let xs = decode_floats(x)?;
        let ys = decode_floats(y)?;
        let t = f64::from_value(t)?;
        let key = (bits(&xs), bits(&ys));
        let beta = {
            let cached = memo.lock().expect("memo lock").get(&key).cloned();
            match cached {
                Some(b) => b,
                None => {
                    let b = shoot_beta(&q_field, &xs, &ys, &icfg, &scfg)?;
                    memo.lock().expect("memo lock").insert(key, b.clone());
                    b
                }
            }
        };
        let end = integrate(&q_field, &xs, &beta, t, &icfg)?;
        Ok(encode_point(dim, &end.position))
    });

    let member_field = field.clone();
    let member: MemberFn = Arc::new(move |v| match v.to_floats() {
        Some(xs) => {
            xs.len() == member_field.dim()
                && all_finite(&xs)
                && member_field.in_domain(&xs)
        }
        None => false,
    });
    let sampler_field = field.clone();
    let sampler: SamplerFn =
        Arc::new(move |rng| encode_point(dim, &(sampler_field.point_sampler)(rng)));
    let grid = field
        .anchors()
        .iter()
        .map(|a| encode_point(dim, a))
        .collect();
    MobiSpace::new(
        format!("geodesic-{}", field.name()),
        algebra,
        dim,
        q,
        member,
        sampler,
        grid,
    )
}

/// Sampled flow rows (parameter, position, velocity) along the connecting
/// geodesic from x to y; `resolution` segments yield resolution + 1 rows.
pub fn flow_trace(
    field: &GeodesicField,
    x: &[f64],
    y: &[f64],
    resolution: usize,
    icfg: &IntegratorConfig,
    scfg: &ShootingConfig,
) -> Result<Vec<(f64, FlowState)>> {
    if resolution == 0 {
        return Err(Error::config("trace: resolution must be positive"));
    }
    let beta = shoot_beta(field, x, y, icfg, scfg)?;
    let mut rows = Vec::with_capacity(resolution + 1);
    for i in 0..=resolution {
        let t = i as f64 / resolution as f64;
        rows.push((t, integrate(field, x, &beta, t, icfg)?));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::SampleStrategy;

    fn icfg() -> IntegratorConfig {
        IntegratorConfig::default()
    }

    fn scfg() -> ShootingConfig {
        ShootingConfig::default()
    }

    fn projectile_flow_exact(x: &[f64], v: &[f64], t: f64, k: f64) -> Vec<f64> {
        vec![
            x[0] + v[0] * t - k * v[1] * v[1] * t * t,
            x[1] + v[1] * t,
        ]
    }

    #[test]
    fn free_field_flows_along_straight_lines() {
        let field = free_field(2).unwrap();
        let end = integrate(&field, &[1.0, 2.0], &[0.5, -1.0], 0.75, &icfg()).unwrap();
        assert!((end.position[0] - 1.375).abs() < 1e-15);
        assert!((end.position[1] - 1.25).abs() < 1e-15);
        assert_eq!(end.velocity, vec![0.5, -1.0]);
    }

    #[test]
    fn projectile_flow_matches_the_quadratic_solution_exactly() {
        // The flow is polynomial of degree two in t, which RK4 reproduces
        // to rounding error at any step count.
        let field = projectile_field(1.0).unwrap();
        let x = [0.25, -0.5];
        let v = [1.5, 0.75];
        for t in [0.25, 1.0, -0.5] {
            let got = integrate(&field, &x, &v, t, &icfg()).unwrap();
            let want = projectile_flow_exact(&x, &v, t, 1.0);
            assert!((got.position[0] - want[0]).abs() < 1e-12);
            assert!((got.position[1] - want[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn log_line_flow_converges_at_fourth_order() {
        // Exact solution from x = 0 with velocity 1: x(t) = ln(1 + t).
        let field = log_line_field().unwrap();
        let exact = 2.0f64.ln();
        let coarse = integrate(
            &field,
            &[0.0],
            &[1.0],
            1.0,
            &IntegratorConfig { steps_per_unit: 256 },
        )
        .unwrap();
        let fine = integrate(
            &field,
            &[0.0],
            &[1.0],
            1.0,
            &IntegratorConfig { steps_per_unit: 512 },
        )
        .unwrap();
        let e_coarse = (coarse.position[0] - exact).abs();
        let e_fine = (fine.position[0] - exact).abs();
        assert!(e_coarse < 1e-10);
        assert!(e_fine < e_coarse);
        // Fourth order: halving the step divides the error by about 16.
        assert!(e_coarse / e_fine > 8.0, "ratio {}", e_coarse / e_fine);
    }

    #[test]
    fn shooting_recovers_the_projectile_connecting_velocity() {
        let field = projectile_field(1.0).unwrap();
        let beta = shoot_beta(&field, &[0.0, 0.0], &[1.0, 1.0], &icfg(), &scfg()).unwrap();
        // Closed form: (y1 - x1 + k (y2-x2)^2, y2 - x2) = (2, 1).
        assert!((beta[0] - 2.0).abs() < 1e-9);
        assert!((beta[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn shooting_the_diagonal_returns_zero_velocity() {
        let field = projectile_field(1.0).unwrap();
        let beta = shoot_beta(&field, &[0.5, 0.5], &[0.5, 0.5], &icfg(), &scfg()).unwrap();
        assert_eq!(beta, vec![0.0, 0.0]);
    }

    #[test]
    fn augmented_constant_acceleration_reproduces_the_projectile_field() {
        let direct = projectile_field(1.0).unwrap();
        let lifted =
            time_augmented_field("lifted", 1, Arc::new(|_x, _xdot, _t| vec![-2.0])).unwrap();
        let mut rng = SampleStrategy::default().law_rng("augmented-compare");
        for _ in 0..50 {
            let x = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let v = [rng.gen_range(-1.5..1.5), rng.gen_range(0.2..1.5)];
            let a = direct.eval(&x, &v).unwrap();
            let b = lifted.eval(&x, &v).unwrap();
            assert!((a[0] - b[0]).abs() < 1e-12);
            assert_eq!(b[1], 0.0);
        }
    }

    #[test]
    fn singular_velocities_are_reported() {
        let field = oscillator_field(1.0).unwrap();
        assert!(matches!(
            field.eval(&[0.0, 0.0], &[1.0, 0.0]),
            Err(Error::SingularVelocity)
        ));
        // All-zero velocity is fine: the point is stationary.
        assert_eq!(field.eval(&[0.0, 0.0], &[0.0, 0.0]).unwrap(), vec![0.0, 0.0]);
    }

    fn oscillator_flow_exact(x: &[f64], v: &[f64], s: f64, k: f64) -> Vec<f64> {
        // With w = position * e^{k tau}, the dynamics are linear in tau:
        // w(tau) = c1 + c2 tau.
        let (x0, tau0) = (x[0], x[1]);
        let (vx, vtau) = (v[0], v[1]);
        let tau = tau0 + vtau * s;
        let a = x0 * (k * tau0).exp();
        let c2 = (vx / vtau) * (k * tau0).exp() + k * a;
        let c1 = a - c2 * tau0;
        vec![(c1 + c2 * tau) * (-k * tau).exp(), tau]
    }

    #[test]
    fn oscillator_flow_matches_the_closed_form() {
        let k = 3.0;
        let field = oscillator_field(k).unwrap();
        let x = [1.5, -0.5];
        let v = [2.0, 1.25];
        let want = oscillator_flow_exact(&x, &v, 1.0, k);
        let coarse = integrate(
            &field,
            &x,
            &v,
            1.0,
            &IntegratorConfig { steps_per_unit: 256 },
        )
        .unwrap();
        let fine = integrate(
            &field,
            &x,
            &v,
            1.0,
            &IntegratorConfig { steps_per_unit: 512 },
        )
        .unwrap();
        let e_coarse = (coarse.position[0] - want[0]).abs();
        let e_fine = (fine.position[0] - want[0]).abs();
        assert!(e_coarse < 1e-9, "coarse error {}", e_coarse);
        assert!(e_coarse / e_fine > 8.0, "ratio {}", e_coarse / e_fine);
    }

    #[test]
    fn homogeneity_holds_for_catalog_fields() {
        let strategy = SampleStrategy::default().with_count(120);
        for field in [
            free_field(2).unwrap(),
            projectile_field(1.0).unwrap(),
            log_line_field().unwrap(),
            oscillator_field(1.0).unwrap(),
        ] {
            let report = check_homogeneity(&field, &strategy).unwrap();
            assert!(report.passed(), "{}: {}", field.name(), report);
        }
    }

    #[test]
    fn flow_identities_hold_for_the_projectile_field() {
        let field = projectile_field(1.0).unwrap();
        let strategy = SampleStrategy::default().with_count(40);
        let reports =
            verify_flow_identities(&field, &icfg(), &scfg(), &strategy).unwrap();
        assert_eq!(reports.len(), 10);
        for r in &reports {
            assert!(r.passed(), "{} failed: {}", r.law, r);
            assert!(r.samples > 0, "{} evaluated nothing", r.law);
        }
    }

    #[test]
    fn geodesic_space_agrees_with_the_projectile_closed_form() {
        let field = Arc::new(projectile_field(1.0).unwrap());
        let numeric = geodesic_space(field, icfg(), scfg()).unwrap();
        let closed =
            crate::instances::spaces::projectile_space(1, 1, EqBackend::approx(1e-9)).unwrap();
        let mut rng = SampleStrategy::default().law_rng("geodesic-agreement");
        for _ in 0..25 {
            let x = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let y = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let t = rng.gen_range(0.0..=1.0);
            let got = numeric
                .q(&Value::floats(&x), &Value::float(t), &Value::floats(&y))
                .unwrap();
            let want = closed
                .q(&Value::floats(&x), &Value::float(t), &Value::floats(&y))
                .unwrap();
            let (g, w) = (got.to_floats().unwrap(), want.to_floats().unwrap());
            for (a, b) in g.iter().zip(&w) {
                assert!((a - b).abs() < 1e-6, "{} vs {}", a, b);
            }
        }
    }

    #[test]
    fn flow_trace_rows_are_evenly_spaced() {
        let field = projectile_field(1.0).unwrap();
        let rows = flow_trace(&field, &[0.0, 0.0], &[0.0, 1.0], 100, &icfg(), &scfg()).unwrap();
        assert_eq!(rows.len(), 101);
        assert_eq!(rows[0].0, 0.0);
        assert_eq!(rows[100].0, 1.0);
        // Halfway along: position (1/4, 1/2) by the closed form.
        let (t, state) = &rows[50];
        assert!((t - 0.5).abs() < 1e-15);
        assert!((state.position[0] - 0.25).abs() < 1e-9);
        assert!((state.position[1] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn escaping_the_domain_is_reported_with_the_exit_parameter() {
        let field = free_field(1)
            .unwrap()
            .with_domain(Arc::new(|x: &[f64]| x[0] < 1.0));
        let err = integrate(&field, &[0.0], &[2.0], 1.0, &icfg()).unwrap_err();
        match err {
            Error::FlowEscape { exit } => {
                // x(t) = 2t crosses 1.0 at t = 0.5.
                assert!(exit > 0.49 && exit < 0.52, "exit {}", exit);
            }
            other => panic!("expected an escape, got {}", other),
        }
    }
}

//! The bridge between affine mobility spaces and modules.
//!
//! Over an exact affine space with a chosen origin e, the space operation
//! induces module structure:
//!
//!   scale      phi_a(x) = q(e, a, x)
//!   add        x + y    = q(e, 2, q(x, 1/2, y))
//!   negate     -x       = q(e, -1, x)
//!
//! with scalars forming a commutative ring under a + b = p(0, 2, p(a,1/2,b))
//! and a * b = p(0, a, b). Conversely the space operation is recovered as
//! q(x, a, y) = phi_{1-a}(x) + phi_a(y). The same formulas applied to a
//! non-affine space yield a pseudo-module: most laws survive in general
//! position, but addition need not associate.

use crate::algebra::MobiAlgebra;
use crate::error::{Error, Result};
use crate::instances::algebras::rational_algebra;
use crate::report::LawReport;
use crate::runner::{run_law, Expect, Slot};
use crate::sample::SampleStrategy;
use crate::space::{check_affine, MobiSpace, SpaceOp};
use crate::value::Value;
use std::sync::Arc;

/// Module (or pseudo-module) structure induced on a space by an origin.
#[derive(Clone)]
pub struct RingModule {
    name: String,
    space: Arc<MobiSpace>,
    scalars: Arc<MobiAlgebra>,
    origin: Value,
    /// Whether the underlying space passed the affine gate.
    affine: bool,
}

impl RingModule {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &Arc<MobiSpace> {
        &self.space
    }

    pub fn scalars(&self) -> &Arc<MobiAlgebra> {
        &self.scalars
    }

    pub fn origin(&self) -> &Value {
        &self.origin
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    /// phi_a(x) = q(e, a, x), the scalar action.
    pub fn scale(&self, a: &Value, x: &Value) -> Result<Value> {
        self.space.q_raw(&self.origin, a, x)
    }

    /// x + y = q(e, 2, q(x, 1/2, y)): double the midpoint from the origin.
    pub fn add(&self, x: &Value, y: &Value) -> Result<Value> {
        let mid = self.space.q_raw(x, &Value::rat(1, 2), y)?;
        self.space.q_raw(&self.origin, &Value::rat(2, 1), &mid)
    }

    pub fn neg(&self, x: &Value) -> Result<Value> {
        self.space.q_raw(&self.origin, &Value::rat(-1, 1), x)
    }

    /// Ring addition on scalars: a + b = p(0, 2, p(a, 1/2, b)).
    pub fn scalar_add(&self, a: &Value, b: &Value) -> Result<Value> {
        let mid = self.scalars.p(a, &Value::rat(1, 2), b)?;
        self.scalars.p(&Value::rat(0, 1), &Value::rat(2, 1), &mid)
    }

    /// Ring multiplication on scalars: a * b = p(0, a, b).
    pub fn scalar_mul(&self, a: &Value, b: &Value) -> Result<Value> {
        self.scalars.p(&Value::rat(0, 1), a, b)
    }

    /// 1 - a = p(1, a, 0).
    pub fn scalar_comp(&self, a: &Value) -> Result<Value> {
        self.scalars.complement(a)
    }

    /// The space operation rebuilt from module data:
    /// q(x, a, y) = phi_{1-a}(x) + phi_a(y).
    pub fn reconstruct(&self, x: &Value, a: &Value, y: &Value) -> Result<Value> {
        let left = self.scale(&self.scalar_comp(a)?, x)?;
        let right = self.scale(a, y)?;
        self.add(&left, &right)
    }

    fn point_slot(&self) -> Slot {
        self.space.point_slot()
    }

    fn scalar_slot(&self) -> Slot {
        self.scalars.slot()
    }

    /// True when the tuple of points is in general position for this
    /// space (always true for spaces without a position filter).
    pub fn admissible(&self, points: &[Value]) -> bool {
        match self.space.bridge_filter() {
            Some(filter) => filter(points),
            None => true,
        }
    }
}

fn require_exact(space: &MobiSpace) -> Result<()> {
    if !space.eq().is_exact() {
        return Err(Error::config(format!(
            "{}: the module bridge requires the exact backend",
            space.name()
        )));
    }
    Ok(())
}

fn build(space: Arc<MobiSpace>, origin: Value, affine: bool, suffix: &str) -> Result<RingModule> {
    require_exact(&space)?;
    if !space.contains(&origin) {
        return Err(Error::domain(format!(
            "{}: origin {} is not a point of the space",
            space.name(),
            origin
        )));
    }
    let scalars = Arc::new(rational_algebra()?);
    debug_assert!(scalars.two().is_some());
    Ok(RingModule {
        name: format!("{}{}", space.name(), suffix),
        space,
        scalars,
        origin,
        affine,
    })
}

/// Induce a module on an affine space. The affine identity is checked on
/// the gate sample first and a failing space is refused with the report.
pub fn module_from_space(
    space: Arc<MobiSpace>,
    origin: Value,
    gate: &SampleStrategy,
) -> Result<RingModule> {
    require_exact(&space)?;
    let report = check_affine(&space, gate)?;
    if !report.passed() {
        return Err(Error::LawFailure {
            instance: space.name().to_string(),
            law: report.law.clone(),
            report: Box::new(report),
        });
    }
    build(space, origin, true, "-module")
}

/// Apply the module formulas without the affine gate.
pub fn extract_pseudo_module(space: Arc<MobiSpace>, origin: Value) -> Result<RingModule> {
    build(space, origin, false, "-pseudo-module")
}

/// Rebuild a mobility space from module structure.
pub fn space_from_module(module: &RingModule) -> Result<MobiSpace> {
    let m = module.clone();
    let q: SpaceOp = Arc::new(move |x, a, y| m.reconstruct(x, a, y));
    let original = module.space();
    MobiSpace::new(
        format!("{}-rebuilt", original.name()),
        original.algebra().clone(),
        original.dim(),
        q,
        original.member_fn(),
        original.point_slot().sampler,
        original.grid().to_vec(),
    )
}

/// The nine algebraic laws shared by modules and pseudo-modules: abelian
/// group axioms for addition and the action laws for phi. Tuples outside
/// general position (per the space's own filter) are skipped.
fn algebraic_laws(module: &RingModule, strategy: &SampleStrategy) -> Result<Vec<LawReport>> {
    let eq = module.space().eq();
    let pt = || module.point_slot();
    let sc = || module.scalar_slot();
    let mut reports = Vec::new();

    reports.push(run_law(
        "bridge.add-commutes",
        &[pt(), pt()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..2]) {
                return Ok(vec![]);
            }
            Ok(vec![(module.add(&t[0], &t[1])?, module.add(&t[1], &t[0])?)])
        },
    )?);

    reports.push(run_law(
        "bridge.add-identity",
        &[pt()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..1]) {
                return Ok(vec![]);
            }
            Ok(vec![(module.add(&t[0], module.origin())?, t[0].clone())])
        },
    )?);

    reports.push(run_law(
        "bridge.add-inverses",
        &[pt()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..1]) {
                return Ok(vec![]);
            }
            Ok(vec![(
                module.add(&t[0], &module.neg(&t[0])?)?,
                module.origin().clone(),
            )])
        },
    )?);

    reports.push(run_law(
        "bridge.add-associates",
        &[pt(), pt(), pt()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..3]) {
                return Ok(vec![]);
            }
            let lhs = module.add(&module.add(&t[0], &t[1])?, &t[2])?;
            let rhs = module.add(&t[0], &module.add(&t[1], &t[2])?)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    reports.push(run_law(
        "bridge.scale-distributes",
        &[pt(), pt(), sc()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..2]) {
                return Ok(vec![]);
            }
            let lhs = module.scale(&t[2], &module.add(&t[0], &t[1])?)?;
            let rhs = module.add(
                &module.scale(&t[2], &t[0])?,
                &module.scale(&t[2], &t[1])?,
            )?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    reports.push(run_law(
        "bridge.scale-adds",
        &[pt(), sc(), sc()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..1]) {
                return Ok(vec![]);
            }
            let lhs = module.scale(&module.scalar_add(&t[1], &t[2])?, &t[0])?;
            let rhs = module.add(
                &module.scale(&t[1], &t[0])?,
                &module.scale(&t[2], &t[0])?,
            )?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    reports.push(run_law(
        "bridge.scale-composes",
        &[pt(), sc(), sc()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..1]) {
                return Ok(vec![]);
            }
            let lhs = module.scale(&module.scalar_mul(&t[1], &t[2])?, &t[0])?;
            let rhs = module.scale(&t[1], &module.scale(&t[2], &t[0])?)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    reports.push(run_law(
        "bridge.scale-one",
        &[pt()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| Ok(vec![(module.scale(&Value::rat(1, 1), &t[0])?, t[0].clone())]),
    )?);

    reports.push(run_law(
        "bridge.scale-zero",
        &[pt()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            Ok(vec![(
                module.scale(&Value::rat(0, 1), &t[0])?,
                module.origin().clone(),
            )])
        },
    )?);

    Ok(reports)
}

/// The full module law suite for affine spaces: the nine algebraic laws plus
/// the reconstruction identity, the half-shift identity, and both round
/// trips (rebuilding the space from the module and the module from that).
pub fn check_module_laws(
    module: &RingModule,
    strategy: &SampleStrategy,
) -> Result<Vec<LawReport>> {
    let eq = module.space().eq();
    let pt = || module.point_slot();
    let sc = || module.scalar_slot();
    let mut reports = algebraic_laws(module, strategy)?;

    reports.push(run_law(
        "bridge.reconstruction",
        &[pt(), pt(), module.space().algebra().slot()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..2]) {
                return Ok(vec![]);
            }
            Ok(vec![(
                module.reconstruct(&t[0], &t[2], &t[1])?,
                module.space().q_raw(&t[0], &t[2], &t[1])?,
            )])
        },
    )?);

    reports.push(run_law(
        "bridge.half-shift",
        &[pt(), pt()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..2]) {
                return Ok(vec![]);
            }
            let lhs = module.space().q_raw(
                module.origin(),
                &Value::rat(1, 2),
                &module.add(&t[0], &t[1])?,
            )?;
            let rhs = module.space().q_raw(&t[0], &Value::rat(1, 2), &t[1])?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    let rebuilt = space_from_module(module)?;
    reports.push(run_law(
        "bridge.roundtrip-space",
        &[pt(), pt(), sc()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..2]) {
                return Ok(vec![]);
            }
            Ok(vec![(
                rebuilt.q_raw(&t[0], &t[2], &t[1])?,
                module.space().q_raw(&t[0], &t[2], &t[1])?,
            )])
        },
    )?);

    let again = build(
        Arc::new(space_from_module(module)?),
        module.origin().clone(),
        module.is_affine(),
        "-again",
    )?;
    reports.push(run_law(
        "bridge.roundtrip-module",
        &[pt(), pt(), sc()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..2]) {
                return Ok(vec![]);
            }
            Ok(vec![
                (again.add(&t[0], &t[1])?, module.add(&t[0], &t[1])?),
                (again.neg(&t[0])?, module.neg(&t[0])?),
                (again.scale(&t[2], &t[0])?, module.scale(&t[2], &t[0])?),
            ])
        },
    )?);

    Ok(reports)
}

/// The pseudo-module law suite: the nine algebraic laws plus a check that
/// the reconstructed operation q'(x,a,y) = phi(1-a)(x) + phi(a)(y) satisfies
/// the interchange axiom X5. On a non-affine space the addition is still a
/// commutative inverse loop, but associativity and the X5 identity of the
/// reconstruction are the designed casualties.
pub fn check_pseudo_module_laws(
    module: &RingModule,
    strategy: &SampleStrategy,
) -> Result<Vec<LawReport>> {
    let eq = module.space().eq();
    let pt = || module.point_slot();
    let alg = module.space().algebra();
    let mut reports = algebraic_laws(module, strategy)?;

    reports.push(run_law(
        "bridge.reconstruction-x5",
        &[pt(), pt(), alg.slot(), alg.slot(), alg.slot()],
        None,
        Expect::Equal,
        None,
        eq,
        strategy,
        |t| {
            if !module.admissible(&t[0..2]) {
                return Ok(vec![]);
            }
            let (x, y, a, b, c) = (&t[0], &t[1], &t[2], &t[3], &t[4]);
            let left = module.reconstruct(x, a, y)?;
            let right = module.reconstruct(x, c, y)?;
            let lhs = module.reconstruct(&left, b, &right)?;
            let rhs = module.reconstruct(x, &alg.p(a, b, c)?, y)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eq::EqBackend;
    use crate::instances::spaces::{euclidean, graph_space, projectile_space, GraphCurve};

    fn gate() -> SampleStrategy {
        SampleStrategy::default().with_count(60)
    }

    fn pt2(a: (i64, i64), b: (i64, i64)) -> Value {
        Value::tuple(vec![Value::rat(a.0, a.1), Value::rat(b.0, b.1)])
    }

    fn plane_module() -> RingModule {
        let space = Arc::new(euclidean(2, EqBackend::Exact).unwrap());
        let origin = pt2((0, 1), (0, 1));
        module_from_space(space, origin, &gate()).unwrap()
    }

    #[test]
    fn plane_module_operations_are_vector_arithmetic() {
        let m = plane_module();
        let x = pt2((1, 1), (2, 1));
        let y = pt2((3, 1), (-5, 1));
        assert_eq!(m.add(&x, &y).unwrap(), pt2((4, 1), (-3, 1)));
        assert_eq!(m.neg(&x).unwrap(), pt2((-1, 1), (-2, 1)));
        assert_eq!(m.scale(&Value::rat(3, 2), &x).unwrap(), pt2((3, 2), (3, 1)));
        assert_eq!(
            m.scalar_add(&Value::rat(1, 3), &Value::rat(1, 6)).unwrap(),
            Value::rat(1, 2)
        );
        assert_eq!(
            m.scalar_mul(&Value::rat(2, 3), &Value::rat(3, 4)).unwrap(),
            Value::rat(1, 2)
        );
    }

    #[test]
    fn plane_module_satisfies_every_bridge_law() {
        let m = plane_module();
        let reports = check_module_laws(&m, &gate()).unwrap();
        assert_eq!(reports.len(), 13);
        for r in &reports {
            assert!(r.passed(), "{} failed: {}", r.law, r);
        }
    }

    #[test]
    fn projectile_module_has_the_twisted_addition() {
        let space = Arc::new(projectile_space(1, 1, EqBackend::Exact).unwrap());
        let m = module_from_space(space, pt2((0, 1), (0, 1)), &gate()).unwrap();
        // x + y = (x1 + y1 - 2 k x2 y2, x2 + y2).
        assert_eq!(
            m.add(&pt2((1, 1), (2, 1)), &pt2((3, 1), (4, 1))).unwrap(),
            pt2((-12, 1), (6, 1))
        );
        // phi_a(x) = (a x1 + k a (1 - a) x2^2, a x2).
        assert_eq!(
            m.scale(&Value::rat(3, 1), &pt2((1, 1), (2, 1))).unwrap(),
            pt2((-21, 1), (6, 1))
        );
        let reports = check_module_laws(&m, &gate()).unwrap();
        for r in &reports {
            assert!(r.passed(), "{} failed: {}", r.law, r);
        }
    }

    #[test]
    fn non_affine_spaces_are_refused_with_the_failing_report() {
        let space = Arc::new(graph_space(GraphCurve::Cube).unwrap());
        match module_from_space(space, pt2((0, 1), (0, 1)), &gate()) {
            Err(Error::LawFailure { law, report, .. }) => {
                assert_eq!(law, "affine");
                assert!(!report.passed());
            }
            Err(other) => panic!("unexpected error: {}", other),
            Ok(_) => panic!("the cubic graph space is not affine"),
        }
    }

    #[test]
    fn approximate_spaces_are_refused() {
        let space = Arc::new(euclidean(2, EqBackend::approx(1e-9)).unwrap());
        match module_from_space(space, Value::floats(&[0.0, 0.0]), &gate()) {
            Err(Error::Config(_)) => {}
            Err(other) => panic!("unexpected error: {}", other),
            Ok(_) => panic!("approximate spaces must be refused"),
        }
    }

    #[test]
    fn cubic_pseudo_module_adds_vertical_points_by_height() {
        let space = Arc::new(graph_space(GraphCurve::Cube).unwrap());
        let m = extract_pseudo_module(space, pt2((0, 1), (0, 1))).unwrap();
        assert_eq!(
            m.add(&pt2((0, 1), (3, 1)), &pt2((0, 1), (5, 1))).unwrap(),
            pt2((0, 1), (8, 1))
        );
        // Opposite first coordinates also land on the vertical line.
        assert_eq!(
            m.add(&pt2((2, 1), (3, 1)), &pt2((-2, 1), (5, 1))).unwrap(),
            pt2((0, 1), (8, 1))
        );
        // phi on the cubic: (a y1, a^3 y2).
        assert_eq!(
            m.scale(&Value::rat(1, 2), &pt2((2, 1), (8, 1))).unwrap(),
            pt2((1, 1), (1, 1))
        );
    }

    #[test]
    fn cubic_pseudo_module_fails_associativity_and_reconstruction() {
        let space = Arc::new(graph_space(GraphCurve::Cube).unwrap());
        let m = extract_pseudo_module(space, pt2((0, 1), (0, 1))).unwrap();
        let reports = check_pseudo_module_laws(&m, &gate()).unwrap();
        assert_eq!(reports.len(), 10);
        let failing: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.law.as_str())
            .collect();
        assert_eq!(
            failing,
            vec!["bridge.add-associates", "bridge.reconstruction-x5"]
        );
    }

    #[test]
    fn pseudo_module_suite_passes_wholesale_on_an_affine_space() {
        let m = plane_module();
        let reports = check_pseudo_module_laws(&m, &gate()).unwrap();
        assert_eq!(reports.len(), 10);
        for r in &reports {
            assert!(r.passed(), "{} failed: {}", r.law, r);
        }
    }

    #[test]
    fn cubic_association_defect_has_an_exact_witness() {
        let space = Arc::new(graph_space(GraphCurve::Cube).unwrap());
        let m = extract_pseudo_module(space, pt2((0, 1), (0, 1))).unwrap();
        let x = pt2((-13, 6), (-2, 1));
        let y = pt2((17, 6), (-1, 1));
        let z = pt2((8, 3), (8, 3));
        let lhs = m.add(&m.add(&x, &y).unwrap(), &z).unwrap();
        let rhs = m.add(&x, &m.add(&y, &z).unwrap()).unwrap();
        assert_eq!(lhs, pt2((10, 3), (-18508, 237)));
        assert_eq!(rhs, pt2((10, 3), (-20094028, 2031879)));
        assert_ne!(lhs, rhs);
    }
}

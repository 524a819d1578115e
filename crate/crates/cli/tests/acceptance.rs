//! End-to-end acceptance gate for the workspace: twelve shipping criteria,
//! one test each, every test printing a single `criterion NN: pass/FAIL`
//! line. The criteria pin exact witness values computed independently of
//! the library code they exercise, so a regression in any layer (algebra,
//! spaces, geodesics, quotients, bridge, CLI) turns its line red.

use std::panic::AssertUnwindSafe;
use std::process::Command;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use mobi_core::instances::algebras::{
    endo_algebra, interval_algebra, lozenge_algebra, midpoint_endo_algebra,
};
use mobi_core::instances::spaces::{
    cylinder_chart, euclidean, f_transform, graph_space, lozenge_space, oscillator_space,
    projectile_line, projectile_space, time_squared_line, Chart, GraphCurve, Transform,
};
use mobi_core::{
    big_rat, check_affine, check_algebra, check_derived, check_injectivity_conjecture,
    check_module_laws, check_pseudo_module_laws, check_quotient_conditions, check_space,
    check_space_properties, cylinder_quotient, extract_pseudo_module, geodesic_space, integrate,
    law_id_cmp, log_line_field, module_from_space, oscillator_field, projectile_field,
    quotient_space, shoot_beta, verify_flow_identities, EqBackend, Error, IntegratorConfig,
    LawReport, SampleStrategy, ShootingConfig, Value, WrapStyle,
};
use num_rational::BigRational;
use rand::Rng;

/// Criteria run one at a time so the wall-clock bounds measure the work
/// itself rather than scheduler contention from sibling tests.
static GATE: Mutex<()> = Mutex::new(());

fn criterion<F: FnOnce()>(n: usize, label: &str, body: F) {
    let _serial = GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    match std::panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("criterion {:02}: pass — {}", n, label),
        Err(cause) => {
            println!("criterion {:02}: FAIL — {}", n, label);
            std::panic::resume_unwind(cause);
        }
    }
}

fn all_pass(reports: &[LawReport], context: &str) {
    for r in reports {
        assert!(r.passed(), "{}: law {} failed: {}", context, r.law, r);
        assert!(r.samples > 0, "{}: law {} evaluated nothing", context, r.law);
    }
}

fn failing_ids(reports: &[LawReport]) -> Vec<String> {
    let mut ids: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.law.clone())
        .collect();
    ids.sort_by(|a, b| law_id_cmp(a, b));
    ids
}

fn report<'a>(reports: &'a [LawReport], law: &str) -> &'a LawReport {
    reports
        .iter()
        .find(|r| r.law == law)
        .unwrap_or_else(|| panic!("no report for law {}", law))
}

fn pair(a: (i64, i64), b: (i64, i64)) -> Value {
    Value::rats(&[a, b])
}

#[test]
fn criterion_01_scalar_algebras_satisfy_every_law() {
    criterion(
        1,
        "interval and lozenge scalar algebras pass A1-A8 and all derived identities",
        || {
            let started = Instant::now();
            let strategy = SampleStrategy::default().with_count(1000);
            for alg in [
                interval_algebra(EqBackend::Exact).unwrap(),
                lozenge_algebra(EqBackend::Exact).unwrap(),
            ] {
                let context = alg.name().to_string();
                let axioms = check_algebra(&alg, &strategy).unwrap();
                assert_eq!(axioms.len(), 8, "{}: expected eight axiom reports", context);
                all_pass(&axioms, &context);
                for r in &axioms {
                    // A1 is the closed anchor identity p(1,1/2,0) = 1/2: it
                    // has no free slots, so it evaluates exactly one tuple.
                    if r.law == "A1" {
                        assert_eq!(r.samples, 1, "{}", context);
                        continue;
                    }
                    assert!(
                        r.samples >= 1000,
                        "{}: {} ran only {} tuples",
                        context,
                        r.law,
                        r.samples
                    );
                }
                let derived = check_derived(&alg, &strategy).unwrap();
                assert_eq!(derived.len(), 9, "{}: expected nine derived reports", context);
                all_pass(&derived, &context);
            }
            assert!(
                started.elapsed() < Duration::from_secs(5),
                "algebra suites took {:?}",
                started.elapsed()
            );
        },
    );
}

#[test]
fn criterion_02_instance_spaces_satisfy_axioms_and_properties() {
    criterion(
        2,
        "the space catalog families pass X1-X5 and Y1-Y10 at 500 samples",
        || {
            let strategy = SampleStrategy::default().with_count(500);
            let exact = EqBackend::Exact;
            let approx = EqBackend::approx(mobi_core::tolerances::LAW_TOLERANCE);
            let spaces: Vec<(mobi_core::MobiSpace, bool)> = vec![
                (euclidean(1, exact).unwrap(), true),
                (euclidean(2, exact).unwrap(), true),
                (euclidean(3, exact).unwrap(), true),
                (f_transform(Transform::Log, approx).unwrap(), false),
                (f_transform(Transform::Reciprocal, exact).unwrap(), true),
                (graph_space(GraphCurve::Reciprocal).unwrap(), true),
                (graph_space(GraphCurve::Square).unwrap(), true),
                (graph_space(GraphCurve::Cube).unwrap(), true),
                (cylinder_chart(Chart::High).unwrap(), true),
                (cylinder_chart(Chart::Low).unwrap(), true),
                (projectile_space(-1, 1, exact).unwrap(), true),
                (projectile_space(0, 1, exact).unwrap(), true),
                (projectile_space(1, 1, exact).unwrap(), true),
                (projectile_space(2, 1, exact).unwrap(), true),
                (oscillator_space(0.0).unwrap(), false),
                (oscillator_space(1.0).unwrap(), false),
                (lozenge_space(1).unwrap(), true),
                (lozenge_space(-1).unwrap(), true),
            ];
            assert_eq!(spaces.len(), 18);
            for (sp, wants_exact) in &spaces {
                let context = sp.name().to_string();
                assert_eq!(
                    sp.eq().is_exact(),
                    *wants_exact,
                    "{}: wrong backend kind",
                    context
                );
                if !wants_exact {
                    assert_eq!(sp.eq().tolerance(), Some(1e-9), "{}", context);
                }
                let axioms = check_space(sp, &strategy).unwrap();
                assert_eq!(axioms.len(), 5, "{}", context);
                all_pass(&axioms, &context);
                let properties = check_space_properties(sp, &strategy).unwrap();
                assert_eq!(properties.len(), 10, "{}", context);
                all_pass(&properties, &context);
            }
        },
    );
}

#[test]
fn criterion_03_cubic_graph_interchange_witness_is_exact() {
    criterion(
        3,
        "the cubic-graph space yields (1/2,19/189) vs (1/2,1/12) at the pinned tuple",
        || {
            let cube = graph_space(GraphCurve::Cube).unwrap();
            let third = Value::rat(1, 3);
            let half = Value::rat(1, 2);
            let x1 = pair((0, 1), (0, 1));
            let y1 = pair((1, 1), (0, 1));
            let x2 = pair((1, 1), (1, 1));
            let y2 = pair((0, 1), (0, 1));

            // Left association: mix each pair at 1/3, then take the midpoint.
            let lhs = cube
                .q(
                    &cube.q(&x1, &third, &y1).unwrap(),
                    &half,
                    &cube.q(&x2, &third, &y2).unwrap(),
                )
                .unwrap();
            // Right association: midpoints first, then mix at 1/3.
            let rhs = cube
                .q(
                    &cube.q(&x1, &half, &x2).unwrap(),
                    &third,
                    &cube.q(&y1, &half, &y2).unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, pair((1, 2), (19, 189)));
            assert_eq!(rhs, pair((1, 2), (1, 12)));
            assert_ne!(lhs, rhs);

            let report = check_affine(&cube, &SampleStrategy::default()).unwrap();
            assert!(
                !report.passed(),
                "interchange unexpectedly held on the cubic graph"
            );
        },
    );
}

#[test]
fn criterion_04_designed_violators_fail_exactly_as_documented() {
    criterion(
        4,
        "the designed violators break X3, X5, and parameter injectivity with pinned witnesses",
        || {
            let strategy = SampleStrategy::default().with_count(500);

            // A moving particle is nowhere idempotent: q(0,1/2,0) = 1/4.
            let bump = projectile_line(1, 1).unwrap();
            let reports = check_space(&bump, &strategy).unwrap();
            assert_eq!(failing_ids(&reports), vec!["X3", "X5"]);
            let x3 = report(&reports, "X3");
            let witness = x3
                .find_violation(&[Value::rat(0, 1), Value::rat(1, 2)])
                .expect("the anchor grid contains the pinned X3 witness");
            assert_eq!(witness.lhs, Value::rat(1, 4));
            assert_eq!(witness.rhs, Value::rat(0, 1));
            assert_eq!(
                bump.q(&Value::rat(0, 1), &Value::rat(1, 2), &Value::rat(0, 1))
                    .unwrap(),
                Value::rat(1, 4)
            );

            // Quadratic time only breaks mixing compatibility.
            let tsq = time_squared_line().unwrap();
            let reports = check_space(&tsq, &strategy).unwrap();
            assert_eq!(failing_ids(&reports), vec!["X5"]);

            // The minus-signed lozenge action collapses distinct scalars:
            // (1,0) and (1/2,-1/2) act identically on every chord.
            let loz = lozenge_space(-1).unwrap();
            let axioms = check_space(&loz, &strategy).unwrap();
            all_pass(&axioms, "lozenge-space-h-1");
            let inj = check_injectivity_conjecture(&loz, &strategy).unwrap();
            assert!(!inj.passed(), "injectivity unexpectedly held: {}", inj);
            let a = pair((1, 1), (0, 1));
            let b = pair((1, 2), (-1, 2));
            assert_ne!(a, b);
            let (x, y) = (Value::rat(0, 1), Value::rat(1, 1));
            let qa = loz.q(&x, &a, &y).unwrap();
            let qb = loz.q(&x, &b, &y).unwrap();
            assert_eq!(qa, qb);
            assert_eq!(qa, Value::rat(1, 1));
        },
    );
}

#[test]
fn criterion_05_shooting_and_geodesic_space_match_the_closed_form() {
    criterion(
        5,
        "shooting finds (2,1) and the numeric geodesic space tracks the closed form",
        || {
            let started = Instant::now();
            let icfg = IntegratorConfig::default();
            assert_eq!(icfg.steps_per_unit, 1024);
            let scfg = ShootingConfig::default();

            let field = projectile_field(1.0).unwrap();
            let beta = shoot_beta(&field, &[0.0, 0.0], &[1.0, 1.0], &icfg, &scfg).unwrap();
            assert!((beta[0] - 2.0).abs() < 1e-8, "beta = {:?}", beta);
            assert!((beta[1] - 1.0).abs() < 1e-8, "beta = {:?}", beta);

            let numeric =
                geodesic_space(Arc::new(projectile_field(1.0).unwrap()), icfg, scfg).unwrap();
            let closed = projectile_space(1, 1, EqBackend::approx(1e-9)).unwrap();
            let mut rng = SampleStrategy::default().law_rng("acceptance-geodesic-projectile");
            for _ in 0..200 {
                let x = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
                let y = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
                let t = rng.gen_range(0.0..=1.0);
                let got = numeric
                    .q(&Value::floats(&x), &Value::float(t), &Value::floats(&y))
                    .unwrap()
                    .to_floats()
                    .unwrap();
                let want = closed
                    .q(&Value::floats(&x), &Value::float(t), &Value::floats(&y))
                    .unwrap()
                    .to_floats()
                    .unwrap();
                for (g, w) in got.iter().zip(&want) {
                    assert!((g - w).abs() < 1e-6, "{} vs {} at t={}", g, w, t);
                }
            }
            assert!(
                started.elapsed() < Duration::from_secs(30),
                "geodesic comparison took {:?}",
                started.elapsed()
            );
        },
    );
}

#[test]
fn criterion_06_time_augmented_oscillator_matches_its_closed_form() {
    criterion(
        6,
        "the lifted damped-oscillator geodesic space matches the exponential closed form",
        || {
            let icfg = IntegratorConfig::default();
            let scfg = ShootingConfig::default();
            let numeric =
                geodesic_space(Arc::new(oscillator_field(1.0).unwrap()), icfg, scfg).unwrap();
            let closed = oscillator_space(1.0).unwrap();
            let mut rng = SampleStrategy::default().law_rng("acceptance-oscillator-space");
            for _ in 0..100 {
                let x: [f64; 2] = [rng.gen_range(-1.5..1.5), rng.gen_range(-1.0..1.0)];
                let gap = rng.gen_range(0.1..1.2) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                let y: [f64; 2] = [rng.gen_range(-1.5..1.5), x[1] + gap];
                assert!((y[1] - x[1]).abs() >= 0.1);
                let t = rng.gen_range(0.0..=1.0);
                let got = numeric
                    .q(&Value::floats(&x), &Value::float(t), &Value::floats(&y))
                    .unwrap()
                    .to_floats()
                    .unwrap();
                let want = closed
                    .q(&Value::floats(&x), &Value::float(t), &Value::floats(&y))
                    .unwrap()
                    .to_floats()
                    .unwrap();
                for (g, w) in got.iter().zip(&want) {
                    assert!(
                        (g - w).abs() < 1e-6,
                        "{} vs {} at t={} from {:?} to {:?}",
                        g,
                        w,
                        t,
                        x,
                        y
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_07_flow_and_connection_identities_hold() {
    criterion(
        7,
        "all five flow identities and four connecting-map identities pass on the projectile field",
        || {
            let field = projectile_field(1.0).unwrap();
            let reports = verify_flow_identities(
                &field,
                &IntegratorConfig::default(),
                &ShootingConfig::default(),
                &SampleStrategy::default().with_count(60),
            )
            .unwrap();
            assert_eq!(reports.len(), 10);
            for law in [
                "flow-rest",
                "flow-compose",
                "flow-rescale",
                "flow-reverse",
                "flow-restart",
                "beta-diagonal",
                "beta-rescale",
                "beta-chord",
                "beta-reverse",
                "velocity-separation",
            ] {
                let r = report(&reports, law);
                assert!(r.passed(), "{} failed: {}", law, r);
                assert!(r.samples > 0, "{} evaluated nothing", law);
            }
        },
    );
}

#[test]
fn criterion_08_integrator_converges_at_fourth_order() {
    criterion(
        8,
        "doubling RK4 steps shrinks curved-field error at least 8x; quadratic flows are exact",
        || {
            let coarse = IntegratorConfig { steps_per_unit: 256 };
            let fine = IntegratorConfig { steps_per_unit: 512 };

            // Logarithmic line: from 0 with unit velocity, x(1) = ln 2.
            let log = log_line_field().unwrap();
            let want = 2.0f64.ln();
            let e256 = (integrate(&log, &[0.0], &[1.0], 1.0, &coarse).unwrap().position[0]
                - want)
                .abs();
            let e512 = (integrate(&log, &[0.0], &[1.0], 1.0, &fine).unwrap().position[0]
                - want)
                .abs();
            assert!(e256 > 0.0 && e512 > 0.0);
            assert!(e256 / e512 >= 8.0, "log ratio {}", e256 / e512);

            // Damped oscillator, stiffness 3: with w = x e^{k tau}, the
            // dynamics are linear in tau, giving an exponential closed form.
            let k = 3.0;
            let osc = oscillator_field(k).unwrap();
            let x = [1.5, -0.5];
            let v = [2.0, 1.25];
            let tau = x[1] + v[1];
            let a = x[0] * (k * x[1]).exp();
            let c2 = (v[0] / v[1]) * (k * x[1]).exp() + k * a;
            let c1 = a - c2 * x[1];
            let want = (c1 + c2 * tau) * (-k * tau).exp();
            let e256 = (integrate(&osc, &x, &v, 1.0, &coarse).unwrap().position[0] - want).abs();
            let e512 = (integrate(&osc, &x, &v, 1.0, &fine).unwrap().position[0] - want).abs();
            assert!(e256 > 0.0 && e512 > 0.0);
            assert!(e256 / e512 >= 8.0, "oscillator ratio {}", e256 / e512);

            // Constant acceleration integrates exactly at any step count:
            // the flow is quadratic and RK4 reproduces it to rounding error.
            let projectile = projectile_field(1.0).unwrap();
            let x = [0.25, -0.5];
            let v = [1.5, 0.75];
            for cfg in [&coarse, &fine] {
                let got = integrate(&projectile, &x, &v, 1.0, cfg).unwrap();
                let want = [
                    x[0] + v[0] - 1.0 * v[1] * v[1],
                    x[1] + v[1],
                ];
                assert!((got.position[0] - want[0]).abs() <= 1e-12);
                assert!((got.position[1] - want[1]).abs() <= 1e-12);
            }
        },
    );
}

#[test]
fn criterion_09_cylinder_quotient_is_coherent_and_differs_from_its_charts() {
    criterion(
        9,
        "the glued cylinder passes all five conditions, wraps short, and beats both charts",
        || {
            let data = cylinder_quotient(WrapStyle::Geodesic).unwrap();
            let reports = check_quotient_conditions(&data, &SampleStrategy::default()).unwrap();
            let mut ids: Vec<&str> = reports.iter().map(|r| r.law.as_str()).collect();
            ids.sort_unstable();
            assert_eq!(
                ids,
                vec![
                    "compatibility",
                    "midpoint-cancellation",
                    "section",
                    "wrap-diagonal",
                    "wrap-target"
                ]
            );
            all_pass(&reports, "cylinder-quotient");

            // Representatives stay within half a turn: the lifted angle
            // coefficient never strays more than 1 (i.e. pi radians).
            let mut rng = SampleStrategy::default().law_rng("acceptance-displacement");
            let one = big_rat(1, 1);
            for _ in 0..1000 {
                let du = [3, 5, 8, 11][rng.gen_range(0..4)];
                let dv = [3, 5, 8, 11][rng.gen_range(0..4)];
                let u = Value::tuple(vec![
                    Value::Rational(big_rat(rng.gen_range(0..2 * du), du)),
                    Value::Rational(big_rat(rng.gen_range(-8..=8), 4)),
                ]);
                let v = Value::tuple(vec![
                    Value::Rational(big_rat(rng.gen_range(0..2 * dv), dv)),
                    Value::Rational(big_rat(rng.gen_range(-8..=8), 4)),
                ]);
                let lifted = data.rep(&u, &v).unwrap();
                let uc = u.as_tuple().unwrap()[0].as_rational().unwrap().clone();
                let lc = lifted.as_tuple().unwrap()[0].as_rational().unwrap().clone();
                let gap = if lc >= uc { &lc - &uc } else { &uc - &lc };
                assert!(gap <= one, "representative {} strays from {}", lifted, u);
            }

            // Straddling midpoints: each chart walks the long way around its
            // own seam while the quotient takes the short way.
            let space = quotient_space(&data, &SampleStrategy::default().with_count(120)).unwrap();
            let half = Value::rat(1, 2);

            let hi = cylinder_chart(Chart::High).unwrap();
            let across_zero = (pair((7, 4), (0, 1)), pair((1, 4), (0, 1)));
            let chart_mid = hi.q(&across_zero.0, &half, &across_zero.1).unwrap();
            let quotient_mid = space.q(&across_zero.0, &half, &across_zero.1).unwrap();
            assert_eq!(chart_mid, pair((1, 1), (0, 1)));
            assert_eq!(quotient_mid, pair((0, 1), (0, 1)));
            assert_ne!(chart_mid, quotient_mid);

            let lo = cylinder_chart(Chart::Low).unwrap();
            let chart_mid = lo
                .q(&pair((-7, 8), (0, 1)), &half, &pair((7, 8), (0, 1)))
                .unwrap();
            assert_eq!(chart_mid, pair((0, 1), (0, 1)));
            // The same two cylinder points in base coordinates: -7pi/8 is
            // represented by the coefficient 9/8.
            let quotient_mid = space
                .q(&pair((9, 8), (0, 1)), &half, &pair((7, 8), (0, 1)))
                .unwrap();
            assert_eq!(quotient_mid, pair((1, 1), (0, 1)));
            assert_ne!(chart_mid, quotient_mid);
        },
    );
}

/// Expected scaling action on the cubic graph away from the axis:
/// a . (x1, x2) = (a x1, a^3 x2).
fn cubic_scale_expected(a: &Value, x: &Value) -> Value {
    let a = a.as_rational().unwrap();
    let xs = x.as_tuple().unwrap();
    let (x1, x2) = (xs[0].as_rational().unwrap(), xs[1].as_rational().unwrap());
    Value::tuple(vec![
        Value::Rational(a * x1),
        Value::Rational(a * a * a * x2),
    ])
}

/// Expected addition on the cubic graph for general-position pairs
/// (x1, y1, x1 + y1 all nonzero):
///
///   (x1,x2) + (y1,y2) =
///     (x1 + y1, (x2 (x1^2+4x1y1+7y1^2) + y2 (7x1^2+4x1y1+y1^2))
///               / (x1^2 + x1y1 + y1^2)).
fn cubic_add_expected(x: &Value, y: &Value) -> Value {
    let xs = x.as_tuple().unwrap();
    let ys = y.as_tuple().unwrap();
    let (x1, x2) = (xs[0].as_rational().unwrap(), xs[1].as_rational().unwrap());
    let (y1, y2) = (ys[0].as_rational().unwrap(), ys[1].as_rational().unwrap());
    let zero = big_rat(0, 1);
    assert_ne!(*x1, zero);
    assert_ne!(*y1, zero);
    assert_ne!(x1 + y1, zero);
    let four = big_rat(4, 1);
    let seven = big_rat(7, 1);
    let x1x1: BigRational = x1 * x1;
    let y1y1: BigRational = y1 * y1;
    let x1y1: BigRational = x1 * y1;
    let num = x2 * (&x1x1 + &four * &x1y1 + &seven * &y1y1)
        + y2 * (&seven * &x1x1 + &four * &x1y1 + &y1y1);
    let den = &x1x1 + &x1y1 + &y1y1;
    Value::tuple(vec![Value::Rational(x1 + y1), Value::Rational(num / den)])
}

#[test]
fn criterion_10_bridge_roundtrips_and_pseudo_extraction() {
    criterion(
        10,
        "module extraction roundtrips exactly; the cubic graph is refused yet yields its pseudo-module",
        || {
            let strategy = SampleStrategy::default().with_count(500);
            let gate = SampleStrategy::default().with_count(80);
            let origin = pair((0, 1), (0, 1));

            // Affine spaces produce full modules whose thirteen laws all hold.
            for space in [
                euclidean(2, EqBackend::Exact).unwrap(),
                projectile_space(1, 1, EqBackend::Exact).unwrap(),
            ] {
                let context = space.name().to_string();
                let module =
                    module_from_space(Arc::new(space), origin.clone(), &gate).unwrap();
                let reports = check_module_laws(&module, &strategy).unwrap();
                assert_eq!(reports.len(), 13, "{}", context);
                all_pass(&reports, &context);
            }

            // The cubic graph is not affine, so the module constructor
            // refuses it by reporting the interchange failure.
            let cube = Arc::new(graph_space(GraphCurve::Cube).unwrap());
            match module_from_space(cube.clone(), origin.clone(), &gate) {
                Err(Error::LawFailure { law, report, .. }) => {
                    assert_eq!(law, "affine");
                    assert!(!report.passed());
                }
                Err(other) => panic!("unexpected refusal error: {}", other),
                Ok(_) => panic!("the cubic graph must not produce a module"),
            }

            // Forcing extraction anyway reproduces the closed forms exactly.
            let pseudo = extract_pseudo_module(cube, origin).unwrap();
            let scalars = [
                (0, 1),
                (1, 4),
                (1, 3),
                (1, 2),
                (3, 4),
                (1, 1),
                (2, 1),
                (-1, 1),
                (5, 3),
            ];
            let points = [
                pair((1, 1), (1, 1)),
                pair((-1, 1), (1, 1)),
                pair((2, 1), (-1, 1)),
                pair((1, 2), (3, 1)),
                pair((3, 1), (2, 1)),
            ];
            for (n, d) in scalars {
                let a = Value::rat(n, d);
                for x in &points {
                    assert_eq!(
                        pseudo.scale(&a, x).unwrap(),
                        cubic_scale_expected(&a, x),
                        "scaling by {}/{} at {}",
                        n,
                        d,
                        x
                    );
                }
            }
            let general_pairs = [
                (pair((1, 1), (1, 1)), pair((2, 1), (-1, 1))),
                (pair((-1, 1), (1, 1)), pair((1, 2), (3, 1))),
                (pair((2, 1), (-1, 1)), pair((1, 2), (3, 1))),
                (pair((1, 1), (1, 1)), pair((1, 2), (3, 1))),
                (pair((3, 1), (2, 1)), pair((1, 1), (-4, 1))),
                (pair((-1, 1), (1, 1)), pair((-2, 1), (5, 1))),
            ];
            for (x, y) in &general_pairs {
                assert_eq!(
                    pseudo.add(x, y).unwrap(),
                    cubic_add_expected(x, y),
                    "adding {} and {}",
                    x,
                    y
                );
            }
            // On the vertical axis the operation collapses to plain
            // interpolation, so addition there is componentwise.
            assert_eq!(
                pseudo
                    .add(&pair((0, 1), (3, 1)), &pair((0, 1), (5, 1)))
                    .unwrap(),
                pair((0, 1), (8, 1))
            );

            // The pseudo-module keeps seven of the nine operation laws and
            // loses exactly associativity and the mixing reconstruction.
            let reports = check_pseudo_module_laws(&pseudo, &strategy).unwrap();
            assert_eq!(reports.len(), 10);
            assert_eq!(
                failing_ids(&reports),
                vec!["bridge.add-associates", "bridge.reconstruction-x5"]
            );
            for law in [
                "bridge.add-commutes",
                "bridge.add-identity",
                "bridge.add-inverses",
                "bridge.scale-distributes",
                "bridge.scale-adds",
                "bridge.scale-composes",
                "bridge.scale-one",
            ] {
                assert!(report(&reports, law).passed(), "{} should hold", law);
            }
        },
    );
}

#[test]
fn criterion_11_finite_endomorphism_algebras_pass_exhaustively() {
    criterion(
        11,
        "both modulo-9 endomorphism algebras pass A1-A8 over their full carriers",
        || {
            let started = Instant::now();
            let strategy = SampleStrategy::exhaustive();
            for alg in [endo_algebra(9).unwrap(), midpoint_endo_algebra(9).unwrap()] {
                let context = alg.name().to_string();
                let reports = check_algebra(&alg, &strategy).unwrap();
                assert_eq!(reports.len(), 8, "{}", context);
                all_pass(&reports, &context);
            }
            assert!(
                started.elapsed() < Duration::from_secs(10),
                "exhaustive check took {:?}",
                started.elapsed()
            );
        },
    );
}

#[test]
fn criterion_12_cli_output_is_byte_identical_across_runs() {
    criterion(
        12,
        "two identically seeded verify runs emit byte-identical reports",
        || {
            let run = || {
                Command::new(env!("CARGO_BIN_EXE_mobi"))
                    .args([
                        "verify",
                        "euclidean:2",
                        "interval",
                        "--samples",
                        "200",
                        "--seed",
                        "9",
                    ])
                    .output()
                    .expect("failed to launch the CLI")
            };
            let first = run();
            let second = run();
            assert_eq!(first.status.code(), Some(0), "{:?}", first);
            assert_eq!(second.status.code(), Some(0));
            assert!(!first.stdout.is_empty());
            assert_eq!(first.stdout, second.stdout, "reports drifted between runs");
            assert_eq!(first.stderr, second.stderr);
            let text = String::from_utf8(first.stdout).unwrap();
            for line in text.lines().filter(|l| !l.is_empty()) {
                assert!(
                    line.starts_with('{') && line.ends_with('}'),
                    "non-JSON line: {}",
                    line
                );
            }
        },
    );
}

//! The instance catalog: every named algebra, space, quotient and field
//! the library ships, together with the suites it should run and the law
//! failures it is designed to exhibit.

use crate::algebra::{check_algebra, check_derived, MobiAlgebra};
use crate::bridge::{extract_pseudo_module, module_from_space, RingModule};
use crate::eq::EqBackend;
use crate::error::{Error, Result};
use crate::geodesic::{
    free_field, geodesic_space, log_line_field, oscillator_field, projectile_field,
    verify_flow_identities, check_homogeneity, GeodesicField, IntegratorConfig, ShootingConfig,
};
use crate::instances::algebras::{
    endo_algebra, interval_algebra, lozenge_algebra, midpoint_endo_algebra,
    modular_ring_algebra, rational_algebra,
};
use crate::instances::spaces::{
    cylinder_chart, euclidean, f_transform, graph_space, lozenge_space, oscillator_space,
    projectile_line, projectile_space, time_squared_line, Chart, GraphCurve, Transform,
};
use crate::quotient::{check_quotient_conditions, cylinder_quotient, QuotientData, WrapStyle};
use crate::report::LawReport;
use crate::sample::SampleStrategy;
use crate::space::{
    check_affine, check_injectivity_conjecture, check_space, check_space_properties,
    check_strong_affine, MobiSpace,
};
use crate::value::Value;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Space,
    Quotient,
    Field,
    GeodesicSpace,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Space => "space",
            Kind::Quotient => "quotient",
            Kind::Field => "field",
            Kind::GeodesicSpace => "geodesic-space",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteId {
    AlgebraAxioms,
    DerivedOps,
    SpaceAxioms,
    SpaceProperties,
    Affine,
    StrongAffine,
    Injectivity,
    QuotientConditions,
    Homogeneity,
    FlowIdentities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BridgeKind {
    None,
    /// Affine-gated module with the listed origin.
    Module,
    /// Ungated pseudo-module: the formulas applied to a non-affine space.
    Pseudo,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub kind: Kind,
    pub summary: &'static str,
    /// Which equality backends the instance supports.
    pub exact: bool,
    pub approx: bool,
    pub suites: &'static [SuiteId],
    /// Law ids this instance is designed to fail; anything else failing
    /// (or one of these passing) breaks the instance's profile.
    pub expected_failures: &'static [&'static str],
    pub bridge: BridgeKind,
    pub bridge_expected_failures: &'static [&'static str],
    /// Sample-count override for expensive instances; `None` means the
    /// caller's count stands.
    pub default_samples: Option<usize>,
}

const ALGEBRA_SUITES: &[SuiteId] = &[SuiteId::AlgebraAxioms, SuiteId::DerivedOps];
const SPACE_SUITES: &[SuiteId] = &[
    SuiteId::SpaceAxioms,
    SuiteId::SpaceProperties,
    SuiteId::Affine,
    SuiteId::StrongAffine,
    SuiteId::Injectivity,
];
const AXIOMS_ONLY: &[SuiteId] = &[SuiteId::SpaceAxioms];
const QUOTIENT_SUITES: &[SuiteId] = &[
    SuiteId::QuotientConditions,
    SuiteId::SpaceAxioms,
    SuiteId::SpaceProperties,
    SuiteId::Affine,
    SuiteId::StrongAffine,
    SuiteId::Injectivity,
];
const CONDITIONS_ONLY: &[SuiteId] = &[SuiteId::QuotientConditions];
const FIELD_SUITES: &[SuiteId] = &[SuiteId::Homogeneity, SuiteId::FlowIdentities];

const NONE: &[&str] = &[];
const NOT_AFFINE: &[&str] = &["affine", "affine-strong"];

macro_rules! entry {
    ($id:expr, $kind:expr, $summary:expr, ($exact:expr, $approx:expr), $suites:expr,
     $expected:expr, $bridge:expr, $bridge_expected:expr, $samples:expr) => {
        Entry {
            id: $id,
            kind: $kind,
            summary: $summary,
            exact: $exact,
            approx: $approx,
            suites: $suites,
            expected_failures: $expected,
            bridge: $bridge,
            bridge_expected_failures: $bridge_expected,
            default_samples: $samples,
        }
    };
}

pub const ENTRIES: &[Entry] = &[
    entry!(
        "interval",
        Kind::Algebra,
        "the unit interval with p(a,b,c) = a + b(c - a)",
        (true, true),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "lozenge-algebra",
        Kind::Algebra,
        "a two-parameter square algebra with non-commutative mixing",
        (true, false),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "ring:q",
        Kind::Algebra,
        "the rationals as a full ring-derived algebra (has a two)",
        (true, false),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "ring:z9",
        Kind::Algebra,
        "integers modulo 9 under p(a,b,c) = a + b(c - a)",
        (true, false),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "ring:z15",
        Kind::Algebra,
        "integers modulo 15 under p(a,b,c) = a + b(c - a)",
        (true, false),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "endo:z9",
        Kind::Algebra,
        "modulo 9 via the endomorphism mixer p = f - gf + gh",
        (true, false),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "midpoint-endo:z5",
        Kind::Algebra,
        "modulo 5 built from midpoint-endomorphism data",
        (true, false),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "midpoint-endo:z9",
        Kind::Algebra,
        "modulo 9 built from midpoint-endomorphism data",
        (true, false),
        ALGEBRA_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "euclidean:1",
        Kind::Space,
        "the line with straight-line mixing",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::Module,
        NONE,
        None
    ),
    entry!(
        "euclidean:2",
        Kind::Space,
        "the plane with straight-line mixing",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::Module,
        NONE,
        None
    ),
    entry!(
        "euclidean:3",
        Kind::Space,
        "three-space with straight-line mixing",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::Module,
        NONE,
        None
    ),
    entry!(
        "ftrans:id",
        Kind::Space,
        "the line rescaled through the identity map",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "ftrans:inv",
        Kind::Space,
        "the positive line mixed through x -> 1/x (harmonic mixing)",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "ftrans:log",
        Kind::Space,
        "the positive line mixed through x -> ln x (geometric mixing)",
        (false, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "graph:f=inv",
        Kind::Space,
        "the right half-plane steered along reciprocal graphs",
        (true, false),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "graph:f=square",
        Kind::Space,
        "the right half-plane steered along square graphs (not affine)",
        (true, false),
        SPACE_SUITES,
        NOT_AFFINE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "graph:f=cube",
        Kind::Space,
        "the plane steered along cubic graphs (not affine)",
        (true, false),
        SPACE_SUITES,
        NOT_AFFINE,
        BridgeKind::Pseudo,
        &["bridge.add-associates", "bridge.reconstruction-x5"],
        None
    ),
    entry!(
        "cylinder:lo",
        Kind::Space,
        "cylinder chart with angle coefficients in (-1, 1]",
        (true, false),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "cylinder:hi",
        Kind::Space,
        "cylinder chart with angle coefficients in [0, 2)",
        (true, false),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "projectile:k=-1",
        Kind::Space,
        "plane mixing with an upward quadratic bump",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::Module,
        NONE,
        None
    ),
    entry!(
        "projectile:k=0",
        Kind::Space,
        "the projectile family at k = 0 (plain straight lines)",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::Module,
        NONE,
        None
    ),
    entry!(
        "projectile:k=1",
        Kind::Space,
        "plane mixing along unit-gravity parabolic arcs",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::Module,
        NONE,
        None
    ),
    entry!(
        "projectile:k=2",
        Kind::Space,
        "plane mixing along double-gravity parabolic arcs",
        (true, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::Module,
        NONE,
        None
    ),
    entry!(
        "oscillator:k=0",
        Kind::Space,
        "the damped-oscillator space at zero damping",
        (false, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "oscillator:k=1",
        Kind::Space,
        "space-time mixing of a critically damped unit oscillator",
        (false, true),
        SPACE_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "lozenge-space:h=+1",
        Kind::Space,
        "the square mixed by weight t1 + t2 (parameters collide)",
        (true, false),
        SPACE_SUITES,
        &["parameter-injectivity"],
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "lozenge-space:h=-1",
        Kind::Space,
        "the square mixed by weight t1 - t2 (parameters collide)",
        (true, false),
        SPACE_SUITES,
        &["parameter-injectivity"],
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "counterexample:tsquare",
        Kind::Space,
        "line mixing by t^2: keeps endpoints but breaks mixing-compatibility",
        (true, false),
        AXIOMS_ONLY,
        &["X5"],
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "counterexample:projectile-1d",
        Kind::Space,
        "line mixing with a bump: leaves the diagonal and breaks compatibility",
        (true, false),
        AXIOMS_ONLY,
        &["X3", "X5"],
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "cylinder-quotient",
        Kind::Quotient,
        "the flat cylinder as a wrap-aware quotient of the plane",
        (true, false),
        QUOTIENT_SUITES,
        NOT_AFFINE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "cylinder-quotient:nowrap",
        Kind::Quotient,
        "the same quotient data choosing canonical representatives",
        (true, false),
        CONDITIONS_ONLY,
        NONE,
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "cylinder-quotient:halfcut",
        Kind::Quotient,
        "a deliberately broken wrap rule failing the compatibility condition",
        (true, false),
        CONDITIONS_ONLY,
        &["compatibility"],
        BridgeKind::None,
        NONE,
        None
    ),
    entry!(
        "field:free:2",
        Kind::Field,
        "the zero field on the plane",
        (false, true),
        FIELD_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        Some(60)
    ),
    entry!(
        "field:projectile:k=1",
        Kind::Field,
        "constant acceleration -2 against the first coordinate",
        (false, true),
        FIELD_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        Some(60)
    ),
    entry!(
        "field:log",
        Kind::Field,
        "the line with g(x, v) = -v^2 (log-straightened geodesics)",
        (false, true),
        FIELD_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        Some(60)
    ),
    entry!(
        "field:oscillator:k=1",
        Kind::Field,
        "the damped oscillator lifted to homogeneous space-time",
        (false, true),
        FIELD_SUITES,
        NONE,
        BridgeKind::None,
        NONE,
        Some(60)
    ),
    entry!(
        "geodesic:projectile:k=1",
        Kind::GeodesicSpace,
        "the space induced by shooting along the projectile field",
        (false, true),
        AXIOMS_ONLY,
        NONE,
        BridgeKind::None,
        NONE,
        Some(24)
    ),
];

pub fn lookup(id: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.id == id)
}

/// Backend admissibility; `Err` carries a usable message for the CLI.
pub fn check_backend(entry: &Entry, eq: EqBackend) -> Result<()> {
    if eq.is_exact() && !entry.exact {
        return Err(Error::config(format!(
            "{}: exact backend not supported (use --backend approx)",
            entry.id
        )));
    }
    if !eq.is_exact() && !entry.approx {
        return Err(Error::config(format!(
            "{}: approximate backend not supported (use --backend exact)",
            entry.id
        )));
    }
    Ok(())
}

/// The backend an entry runs under when the caller does not choose.
pub fn default_backend(entry: &Entry) -> EqBackend {
    if entry.exact {
        EqBackend::Exact
    } else {
        EqBackend::approx(crate::tolerances::LAW_TOLERANCE)
    }
}

pub enum Built {
    Algebra(Arc<MobiAlgebra>),
    Space(Arc<MobiSpace>),
    Quotient(Arc<QuotientData>),
    Field(Arc<GeodesicField>),
}

pub fn build(entry: &Entry, eq: EqBackend) -> Result<Built> {
    check_backend(entry, eq)?;
    let built = match entry.id {
        "interval" => Built::Algebra(Arc::new(interval_algebra(eq)?)),
        "lozenge-algebra" => Built::Algebra(Arc::new(lozenge_algebra(eq)?)),
        "ring:q" => Built::Algebra(Arc::new(rational_algebra()?)),
        "ring:z9" => Built::Algebra(Arc::new(modular_ring_algebra(9)?)),
        "ring:z15" => Built::Algebra(Arc::new(modular_ring_algebra(15)?)),
        "endo:z9" => Built::Algebra(Arc::new(endo_algebra(9)?)),
        "midpoint-endo:z5" => Built::Algebra(Arc::new(midpoint_endo_algebra(5)?)),
        "midpoint-endo:z9" => Built::Algebra(Arc::new(midpoint_endo_algebra(9)?)),
        "euclidean:1" => Built::Space(Arc::new(euclidean(1, eq)?)),
        "euclidean:2" => Built::Space(Arc::new(euclidean(2, eq)?)),
        "euclidean:3" => Built::Space(Arc::new(euclidean(3, eq)?)),
        "ftrans:id" => Built::Space(Arc::new(f_transform(Transform::Identity, eq)?)),
        "ftrans:inv" => Built::Space(Arc::new(f_transform(Transform::Reciprocal, eq)?)),
        "ftrans:log" => Built::Space(Arc::new(f_transform(Transform::Log, eq)?)),
        "graph:f=inv" => Built::Space(Arc::new(graph_space(GraphCurve::Reciprocal)?)),
        "graph:f=square" => Built::Space(Arc::new(graph_space(GraphCurve::Square)?)),
        "graph:f=cube" => Built::Space(Arc::new(graph_space(GraphCurve::Cube)?)),
        "cylinder:lo" => Built::Space(Arc::new(cylinder_chart(Chart::Low)?)),
        "cylinder:hi" => Built::Space(Arc::new(cylinder_chart(Chart::High)?)),
        "projectile:k=-1" => Built::Space(Arc::new(projectile_space(-1, 1, eq)?)),
        "projectile:k=0" => Built::Space(Arc::new(projectile_space(0, 1, eq)?)),
        "projectile:k=1" => Built::Space(Arc::new(projectile_space(1, 1, eq)?)),
        "projectile:k=2" => Built::Space(Arc::new(projectile_space(2, 1, eq)?)),
        "oscillator:k=0" => Built::Space(Arc::new(oscillator_space(0.0)?)),
        "oscillator:k=1" => Built::Space(Arc::new(oscillator_space(1.0)?)),
        "lozenge-space:h=+1" => Built::Space(Arc::new(lozenge_space(1)?)),
        "lozenge-space:h=-1" => Built::Space(Arc::new(lozenge_space(-1)?)),
        "counterexample:tsquare" => Built::Space(Arc::new(time_squared_line()?)),
        "counterexample:projectile-1d" => Built::Space(Arc::new(projectile_line(1, 1)?)),
        "cylinder-quotient" => Built::Quotient(Arc::new(cylinder_quotient(WrapStyle::Geodesic)?)),
        "cylinder-quotient:nowrap" => {
            Built::Quotient(Arc::new(cylinder_quotient(WrapStyle::Canonical)?))
        }
        "cylinder-quotient:halfcut" => {
            Built::Quotient(Arc::new(cylinder_quotient(WrapStyle::Halfcut)?))
        }
        "field:free:2" => Built::Field(Arc::new(free_field(2)?)),
        "field:projectile:k=1" => Built::Field(Arc::new(projectile_field(1.0)?)),
        "field:log" => Built::Field(Arc::new(log_line_field()?)),
        "field:oscillator:k=1" => Built::Field(Arc::new(oscillator_field(1.0)?)),
        "geodesic:projectile:k=1" => Built::Field(Arc::new(projectile_field(1.0)?)),
        other => {
            return Err(Error::config(format!(
                "unknown instance '{}'; run the list command for the catalog",
                other
            )))
        }
    };
    Ok(built)
}

/// The gate strategy used when a constructor must pre-validate laws
/// (quotient conditions, the affine gate for modules).
pub fn gate_strategy(strategy: &SampleStrategy) -> SampleStrategy {
    strategy.clone().with_count(strategy.count.min(80))
}

/// Run every suite the entry declares and return the combined reports.
pub fn run_suites(
    entry: &Entry,
    eq: EqBackend,
    strategy: &SampleStrategy,
    icfg: &IntegratorConfig,
    scfg: &ShootingConfig,
) -> Result<Vec<LawReport>> {
    let strategy = match entry.default_samples {
        Some(n) if strategy.count > n => strategy.clone().with_count(n),
        _ => strategy.clone(),
    };
    let built = build(entry, eq)?;
    let mut reports = Vec::new();

    let space: Option<Arc<MobiSpace>> = match &built {
        Built::Space(sp) => Some(sp.clone()),
        Built::Quotient(data) => {
            if entry.suites.iter().any(|s| *s != SuiteId::QuotientConditions) {
                Some(Arc::new(crate::quotient::quotient_space(
                    data,
                    &gate_strategy(&strategy),
                )?))
            } else {
                None
            }
        }
        Built::Field(field) if entry.kind == Kind::GeodesicSpace => {
            Some(Arc::new(geodesic_space(field.clone(), *icfg, *scfg)?))
        }
        _ => None,
    };

    for suite in entry.suites {
        match suite {
            SuiteId::AlgebraAxioms | SuiteId::DerivedOps => {
                let Built::Algebra(alg) = &built else {
                    return Err(Error::config(format!(
                        "{}: algebra suite on a non-algebra",
                        entry.id
                    )));
                };
                let batch = if *suite == SuiteId::AlgebraAxioms {
                    check_algebra(alg, &strategy)?
                } else {
                    check_derived(alg, &strategy)?
                };
                reports.extend(batch);
            }
            SuiteId::QuotientConditions => {
                let Built::Quotient(data) = &built else {
                    return Err(Error::config(format!(
                        "{}: quotient suite on a non-quotient",
                        entry.id
                    )));
                };
                reports.extend(check_quotient_conditions(data, &strategy)?);
            }
            SuiteId::Homogeneity | SuiteId::FlowIdentities => {
                let Built::Field(field) = &built else {
                    return Err(Error::config(format!(
                        "{}: flow suite on a non-field",
                        entry.id
                    )));
                };
                if *suite == SuiteId::Homogeneity {
                    reports.push(check_homogeneity(field, &strategy)?);
                } else {
                    reports.extend(verify_flow_identities(field, icfg, scfg, &strategy)?);
                }
            }
            SuiteId::SpaceAxioms
            | SuiteId::SpaceProperties
            | SuiteId::Affine
            | SuiteId::StrongAffine
            | SuiteId::Injectivity => {
                let Some(sp) = &space else {
                    return Err(Error::config(format!(
                        "{}: space suite on a non-space",
                        entry.id
                    )));
                };
                match suite {
                    SuiteId::SpaceAxioms => reports.extend(check_space(sp, &strategy)?),
                    SuiteId::SpaceProperties => {
                        reports.extend(check_space_properties(sp, &strategy)?)
                    }
                    SuiteId::Affine => reports.push(check_affine(sp, &strategy)?),
                    SuiteId::StrongAffine => reports.push(check_strong_affine(sp, &strategy)?),
                    SuiteId::Injectivity => {
                        reports.push(check_injectivity_conjecture(sp, &strategy)?)
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    Ok(reports)
}

/// The origin used for an entry's bridge construction.
pub fn bridge_origin(entry: &Entry) -> Result<Value> {
    match entry.id {
        "euclidean:1" => Ok(Value::rat(0, 1)),
        "euclidean:2" | "graph:f=cube" | "projectile:k=-1" | "projectile:k=0"
        | "projectile:k=1" | "projectile:k=2" => {
            Ok(Value::tuple(vec![Value::rat(0, 1), Value::rat(0, 1)]))
        }
        "euclidean:3" => Ok(Value::tuple(vec![
            Value::rat(0, 1),
            Value::rat(0, 1),
            Value::rat(0, 1),
        ])),
        _ => Err(Error::config(format!(
            "{}: no bridge origin defined",
            entry.id
        ))),
    }
}

/// Build the module (or pseudo-module) an entry declares.
pub fn bridge_module(entry: &Entry, strategy: &SampleStrategy) -> Result<RingModule> {
    let Built::Space(space) = build(entry, EqBackend::Exact)? else {
        return Err(Error::config(format!(
            "{}: only spaces can carry a module bridge",
            entry.id
        )));
    };
    let origin = bridge_origin(entry)?;
    match entry.bridge {
        BridgeKind::Module => module_from_space(space, origin, &gate_strategy(strategy)),
        BridgeKind::Pseudo => extract_pseudo_module(space, origin),
        BridgeKind::None => Err(Error::config(format!(
            "{}: no bridge declared for this instance",
            entry.id
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn every_catalog_id_is_unique_and_buildable() {
        let mut seen = HashSet::new();
        for entry in ENTRIES {
            assert!(seen.insert(entry.id), "duplicate id {}", entry.id);
            assert!(entry.exact || entry.approx, "{} supports no backend", entry.id);
            let built = build(entry, default_backend(entry)).unwrap();
            match (&built, entry.kind) {
                (Built::Algebra(_), Kind::Algebra) => {}
                (Built::Space(_), Kind::Space) => {}
                (Built::Quotient(_), Kind::Quotient) => {}
                (Built::Field(_), Kind::Field | Kind::GeodesicSpace) => {}
                _ => panic!("{}: kind does not match the built object", entry.id),
            }
        }
    }

    #[test]
    fn unsupported_backends_are_refused_with_config_errors() {
        let log = lookup("ftrans:log").unwrap();
        assert!(matches!(
            build(log, EqBackend::Exact),
            Err(Error::Config(_))
        ));
        let ring = lookup("ring:z9").unwrap();
        assert!(matches!(
            build(ring, EqBackend::approx(1e-9)),
            Err(Error::Config(_))
        ));
        assert!(lookup("no-such-instance").is_none());
    }

    #[test]
    fn designed_failures_reference_real_law_ids() {
        // Spot-check the curated profiles stay in sync with the suites.
        let tsq = lookup("counterexample:tsquare").unwrap();
        assert_eq!(tsq.expected_failures, &["X5"]);
        assert_eq!(tsq.suites, AXIOMS_ONLY);
        let cube = lookup("graph:f=cube").unwrap();
        assert_eq!(cube.bridge, BridgeKind::Pseudo);
        assert_eq!(
            cube.bridge_expected_failures,
            &["bridge.add-associates", "bridge.reconstruction-x5"]
        );
    }
}

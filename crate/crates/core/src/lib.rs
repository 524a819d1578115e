//! Numeric and exact verification of mobility algebras and mobility
//! spaces: a ternary mixing operation p(a, b, c) on scalars, its
//! point-space counterpart q(x, a, y), derived operations and their laws,
//! quotient constructions, geodesic flows that induce spaces by shooting,
//! and the bridge between affine spaces and modules.
//!
//! The crate is organized around small law reports: every checker samples
//! deterministically (per-law seeded streams), evaluates both sides of an
//! identity, and returns a [`LawReport`] listing any violations with the
//! exact inputs that produced them.

mod algebra;
mod bridge;
mod eq;
mod error;
mod geodesic;
pub mod instances;
mod num;
mod quotient;
mod report;
mod runner;
mod sample;
mod space;
pub mod tolerances;
mod value;

pub use algebra::{check_algebra, check_derived, MobiAlgebra, TernaryOp};
pub use bridge::{
    check_module_laws, check_pseudo_module_laws, extract_pseudo_module, module_from_space,
    space_from_module, RingModule,
};
pub use eq::EqBackend;
pub use error::{Error, Result};
pub use geodesic::{
    check_homogeneity, christoffel_field, flow_trace, free_field, geodesic_space, integrate,
    log_line_field, oscillator_field, projectile_field, shoot_beta, time_augmented_field,
    verify_flow_identities, AccelFn, DomainFn, FieldFn, FlowState, GammaFn, GeodesicField,
    IntegratorConfig, PairFilter, ShootingConfig, VecSampler,
};
pub use quotient::{
    check_quotient_conditions, cylinder_quotient, quotient_space, PointMap, QuotientData, RepMap,
    WrapStyle,
};
pub use report::{law_id_cmp, sort_reports, LawReport, Violation, ViolationKind};
pub use runner::{MemberFn, SamplerFn};
pub use sample::SampleStrategy;
pub use space::{
    check_affine, check_injectivity_conjecture, check_space, check_space_properties,
    check_strong_affine, MobiSpace, SpaceOp, TraceMap, TupleFilter,
};
pub use value::{big_rat, Value};

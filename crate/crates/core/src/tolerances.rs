//! Central numeric tolerances. Every approximate comparison in the crate
//! routes through one of these constants so that tightening or loosening a
//! bound is a one-line change.

/// Default tolerance for approximate equality when verifying instance laws.
pub const LAW_TOLERANCE: f64 = 1e-9;

/// Tolerance for the numeric flow-identity suite (integrator-limited).
pub const FLOW_TOLERANCE: f64 = 1e-6;

/// Tolerance when comparing a numeric geodesic space against a closed form.
pub const GEODESIC_TOLERANCE: f64 = 1e-6;

/// Newton residual required of a converged shooting solve.
pub const SHOOTING_RESIDUAL: f64 = 1e-10;

/// Step used for the forward-difference shooting Jacobian.
pub const JACOBIAN_STEP: f64 = 1e-6;

/// Minimal distance between members of a sampled "distinct" pair.
pub const PAIR_SEPARATION: f64 = 1e-3;

//! User-configured instances: parameter families beyond the named catalog.
//!
//! The catalog pins the identifiers the acceptance profiles talk about;
//! these patterns let the CLI verify other members of the same families
//! (`euclidean:7`, `projectile:k=5`, `oscillator:k=0.25`, ...). They carry
//! no designed failures, so every law is expected to pass.

use mobi_core::instances::spaces::{euclidean, oscillator_space, projectile_space};
use mobi_core::{EqBackend, MobiSpace, Result};

pub struct DynInstance {
    pub exact: bool,
    pub approx: bool,
    builder: Box<dyn Fn(EqBackend) -> Result<MobiSpace>>,
}

impl DynInstance {
    pub fn build(&self, eq: EqBackend) -> Result<MobiSpace> {
        (self.builder)(eq)
    }
}

fn instance(
    exact: bool,
    approx: bool,
    builder: impl Fn(EqBackend) -> Result<MobiSpace> + 'static,
) -> DynInstance {
    DynInstance {
        exact,
        approx,
        builder: Box::new(builder),
    }
}

/// Recognize a parameterized identifier. Returns `None` for anything that
/// is neither a catalog entry nor a known pattern.
pub fn resolve(id: &str) -> Option<DynInstance> {
    if let Some(dim) = id.strip_prefix("euclidean:") {
        let dim: usize = dim.parse().ok().filter(|d| *d >= 1)?;
        return Some(instance(true, true, move |eq| euclidean(dim, eq)));
    }
    if let Some(k) = id.strip_prefix("projectile:k=") {
        let (num, den) = match k.split_once('/') {
            Some((n, d)) => (n.parse().ok()?, d.parse().ok().filter(|d| *d != 0)?),
            None => (k.parse().ok()?, 1),
        };
        return Some(instance(true, true, move |eq| projectile_space(num, den, eq)));
    }
    if let Some(k) = id.strip_prefix("oscillator:k=") {
        let k: f64 = k.parse::<f64>().ok().filter(|k| k.is_finite())?;
        return Some(instance(false, true, move |_| oscillator_space(k)));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_families_are_recognized() {
        assert!(resolve("euclidean:7").is_some());
        assert!(resolve("projectile:k=5").is_some());
        assert!(resolve("projectile:k=3/2").is_some());
        assert!(resolve("oscillator:k=0.25").is_some());
        assert!(resolve("euclidean:0").is_none());
        assert!(resolve("projectile:k=x").is_none());
        assert!(resolve("no-such-thing").is_none());
    }

    #[test]
    fn dynamic_spaces_build_under_their_backends() {
        let e = resolve("euclidean:4").unwrap();
        assert!(e.build(EqBackend::Exact).is_ok());
        let o = resolve("oscillator:k=0.5").unwrap();
        assert!(!o.exact);
        assert!(o.build(EqBackend::approx(1e-9)).is_ok());
    }
}

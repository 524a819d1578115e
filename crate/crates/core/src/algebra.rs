//! Mobility algebras: a carrier with constants 0, ½, 1 and a ternary
//! operation `p` subject to eight axioms (A1–A8), plus the derived
//! operations (complement, dot, midpoint, circle) and their laws (D1–D9).

use crate::eq::EqBackend;
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::runner::{run_law, Expect, MemberFn, SamplerFn, Slot};
use crate::sample::SampleStrategy;
use crate::value::Value;
use std::sync::Arc;

pub type TernaryOp = Arc<dyn Fn(&Value, &Value, &Value) -> Result<Value> + Send + Sync>;

/// A mobility algebra instance.
///
/// Construction goes through [`MobiAlgebra::new`], which validates that the
/// three constants are members. Operations are total on members; the checked
/// entry points reject non-member inputs with a domain error.
#[derive(Clone)]
pub struct MobiAlgebra {
    name: String,
    eq: EqBackend,
    zero: Value,
    half: Value,
    one: Value,
    /// Doubling element with ½ · two = 1, present on ring-like algebras;
    /// required by the module bridge.
    two: Option<Value>,
    p: TernaryOp,
    member: MemberFn,
    sampler: SamplerFn,
    grid: Vec<Value>,
    carrier: Option<Vec<Value>>,
}

impl MobiAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        eq: EqBackend,
        zero: Value,
        half: Value,
        one: Value,
        p: TernaryOp,
        member: MemberFn,
        sampler: SamplerFn,
        grid: Vec<Value>,
    ) -> Result<MobiAlgebra> {
        let name = name.into();
        for (label, v) in [("0", &zero), ("1/2", &half), ("1", &one)] {
            if !member(v) {
                return Err(Error::config(format!(
                    "{}: constant {} = {} is not a carrier member",
                    name, label, v
                )));
            }
        }
        for v in &grid {
            if !member(v) {
                return Err(Error::config(format!(
                    "{}: grid value {} is not a carrier member",
                    name, v
                )));
            }
        }
        Ok(MobiAlgebra {
            name,
            eq,
            zero,
            half,
            one,
            two: None,
            p,
            member,
            sampler,
            grid,
            carrier: None,
        })
    }

    pub fn with_two(mut self, two: Value) -> Result<MobiAlgebra> {
        let product = self.p(&self.zero.clone(), &self.half.clone(), &two)?;
        if !self.eq.eq(&product, &self.one) {
            return Err(Error::config(format!(
                "{}: 1/2 * {} = {} != 1, not a doubling element",
                self.name, two, product
            )));
        }
        self.two = Some(two);
        Ok(self)
    }

    /// Attach a full carrier enumeration (enables exhaustive strategies).
    pub fn with_carrier(mut self, carrier: Vec<Value>) -> MobiAlgebra {
        self.carrier = Some(carrier);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eq(&self) -> EqBackend {
        self.eq
    }

    pub fn zero(&self) -> &Value {
        &self.zero
    }

    pub fn half(&self) -> &Value {
        &self.half
    }

    pub fn one(&self) -> &Value {
        &self.one
    }

    pub fn two(&self) -> Option<&Value> {
        self.two.as_ref()
    }

    pub fn contains(&self, v: &Value) -> bool {
        (self.member)(v)
    }

    pub fn grid(&self) -> &[Value] {
        &self.grid
    }

    pub fn carrier(&self) -> Option<&[Value]> {
        self.carrier.as_deref()
    }

    fn check_member(&self, v: &Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{}: {} is not a carrier member",
                self.name, v
            )))
        }
    }

    /// The mobility operation, with input membership checks.
    pub fn p(&self, a: &Value, b: &Value, c: &Value) -> Result<Value> {
        self.check_member(a)?;
        self.check_member(b)?;
        self.check_member(c)?;
        (self.p)(a, b, c)
    }

    /// Unchecked operation used by the law suites (sampled inputs are
    /// already members; results get closure-checked by the runner).
    pub(crate) fn p_raw(&self, a: &Value, b: &Value, c: &Value) -> Result<Value> {
        (self.p)(a, b, c)
    }

    /// Complement `ā = p(1, a, 0)`.
    pub fn complement(&self, a: &Value) -> Result<Value> {
        self.check_member(a)?;
        (self.p)(&self.one, a, &self.zero)
    }

    /// Product `a · b = p(0, a, b)`.
    pub fn dot(&self, a: &Value, b: &Value) -> Result<Value> {
        self.check_member(a)?;
        self.check_member(b)?;
        (self.p)(&self.zero, a, b)
    }

    /// Midpoint `a ⊕ b = p(a, 1/2, b)`.
    pub fn midpoint(&self, a: &Value, b: &Value) -> Result<Value> {
        self.check_member(a)?;
        self.check_member(b)?;
        (self.p)(a, &self.half, b)
    }

    /// Circle `a ∘ b = p(a, b, 1)`.
    pub fn circle(&self, a: &Value, b: &Value) -> Result<Value> {
        self.check_member(a)?;
        self.check_member(b)?;
        (self.p)(a, b, &self.one)
    }

    fn comp_raw(&self, a: &Value) -> Result<Value> {
        (self.p)(&self.one, a, &self.zero)
    }

    fn dot_raw(&self, a: &Value, b: &Value) -> Result<Value> {
        (self.p)(&self.zero, a, b)
    }

    fn mid_raw(&self, a: &Value, b: &Value) -> Result<Value> {
        (self.p)(a, &self.half, b)
    }

    fn circ_raw(&self, a: &Value, b: &Value) -> Result<Value> {
        (self.p)(a, b, &self.one)
    }

    pub(crate) fn slot(&self) -> Slot {
        Slot {
            kind: 1,
            grid: self.grid.clone(),
            sampler: self.sampler.clone(),
            member: self.member.clone(),
            carrier: self.carrier.clone(),
        }
    }

    pub(crate) fn member_fn(&self) -> MemberFn {
        self.member.clone()
    }
}

/// Check axioms A1–A8. Every report carries the tuples evaluated and any
/// violations; results are additionally closure-checked against the carrier.
pub fn check_algebra(alg: &MobiAlgebra, strategy: &SampleStrategy) -> Result<Vec<LawReport>> {
    let s = alg.slot();
    let eq = alg.eq();
    let member = alg.member_fn();
    let mut reports = Vec::new();

    // A1: p(1, 1/2, 0) = 1/2
    reports.push(run_law(
        "A1",
        &[],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |_| {
            Ok(vec![(
                alg.p_raw(alg.one(), alg.half(), alg.zero())?,
                alg.half().clone(),
            )])
        },
    )?);

    // A2: p(0, a, 1) = a
    reports.push(run_law(
        "A2",
        &[s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| Ok(vec![(alg.p_raw(alg.zero(), &t[0], alg.one())?, t[0].clone())]),
    )?);

    // A3: p(a, b, a) = a
    reports.push(run_law(
        "A3",
        &[s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| Ok(vec![(alg.p_raw(&t[0], &t[1], &t[0])?, t[0].clone())]),
    )?);

    // A4: p(a, 0, b) = a
    reports.push(run_law(
        "A4",
        &[s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| Ok(vec![(alg.p_raw(&t[0], alg.zero(), &t[1])?, t[0].clone())]),
    )?);

    // A5: p(a, 1, b) = b
    reports.push(run_law(
        "A5",
        &[s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| Ok(vec![(alg.p_raw(&t[0], alg.one(), &t[1])?, t[1].clone())]),
    )?);

    // A6 (cancellation, contrapositive): b1 != b2  =>  p(a,1/2,b1) != p(a,1/2,b2)
    reports.push(run_law(
        "A6",
        &[s.clone(), s.clone(), s.clone()],
        Some((1, 2)),
        Expect::Distinct,
        None,
        eq,
        strategy,
        |t| {
            Ok(vec![(
                alg.p_raw(&t[0], alg.half(), &t[1])?,
                alg.p_raw(&t[0], alg.half(), &t[2])?,
            )])
        },
    )?);

    // A7: p(a, p(c1,c2,c3), b) = p(p(a,c1,b), c2, p(a,c3,b))
    reports.push(run_law(
        "A7",
        &[s.clone(), s.clone(), s.clone(), s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let (a, b, c1, c2, c3) = (&t[0], &t[1], &t[2], &t[3], &t[4]);
            let lhs = alg.p_raw(a, &alg.p_raw(c1, c2, c3)?, b)?;
            let rhs = alg.p_raw(&alg.p_raw(a, c1, b)?, c2, &alg.p_raw(a, c3, b)?)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    // A8: p(p(a1,c,b1), 1/2, p(a2,c,b2)) = p(p(a1,1/2,a2), c, p(b1,1/2,b2))
    reports.push(run_law(
        "A8",
        &[s.clone(), s.clone(), s.clone(), s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let (a1, a2, b1, b2, c) = (&t[0], &t[1], &t[2], &t[3], &t[4]);
            let lhs = alg.p_raw(&alg.p_raw(a1, c, b1)?, alg.half(), &alg.p_raw(a2, c, b2)?)?;
            let rhs = alg.p_raw(&alg.p_raw(a1, alg.half(), a2)?, c, &alg.p_raw(b1, alg.half(), b2)?)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    Ok(reports)
}

/// Check the derived-operation laws D1–D9.
///
/// - D1: the complement of 1/2 is 1/2
/// - D2: a · 1/2 = 1/2 · a = 0 ⊕ a
/// - D3 (cancellation, contrapositive): a != a' => 1/2 · a != 1/2 · a'
/// - D4: p(ā, 1/2, a) = 1/2
/// - D5 (contrapositive): a != 1/2 => ā != a
/// - D6: complement distributes over p: `p(a,b,c)‾ = p(ā, b, c̄)`
/// - D7 (reversal): p(c, b, a) = p(a, b̄, c)
/// - D8: (a ∘ b)‾ = b̄ · ā
/// - D9: 1/2 · p(a,b,c) = (b̄ · a) ⊕ (b · c)
pub fn check_derived(alg: &MobiAlgebra, strategy: &SampleStrategy) -> Result<Vec<LawReport>> {
    let s = alg.slot();
    let eq = alg.eq();
    let member = alg.member_fn();
    let mut reports = Vec::new();

    reports.push(run_law(
        "D1",
        &[],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |_| Ok(vec![(alg.comp_raw(alg.half())?, alg.half().clone())]),
    )?);

    reports.push(run_law(
        "D2",
        &[s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let a = &t[0];
            let left = alg.dot_raw(a, alg.half())?;
            let mid = alg.dot_raw(alg.half(), a)?;
            let right = alg.mid_raw(alg.zero(), a)?;
            Ok(vec![(left, mid.clone()), (mid, right)])
        },
    )?);

    reports.push(run_law(
        "D3",
        &[s.clone(), s.clone()],
        Some((0, 1)),
        Expect::Distinct,
        None,
        eq,
        strategy,
        |t| {
            Ok(vec![(
                alg.dot_raw(alg.half(), &t[0])?,
                alg.dot_raw(alg.half(), &t[1])?,
            )])
        },
    )?);

    reports.push(run_law(
        "D4",
        &[s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let a = &t[0];
            Ok(vec![(
                alg.p_raw(&alg.comp_raw(a)?, alg.half(), a)?,
                alg.half().clone(),
            )])
        },
    )?);

    // D5 needs pairs (a, 1/2) with a != 1/2; reuse the pair machinery with a
    // constant second slot.
    let half = alg.half().clone();
    let half2 = half.clone();
    let half_slot = Slot {
        kind: 1,
        grid: vec![half.clone()],
        sampler: Arc::new(move |_| half2.clone()),
        member: alg.member_fn(),
        // The slot is constant even under exhaustive enumeration.
        carrier: Some(vec![half.clone()]),
    };
    reports.push(run_law(
        "D5",
        &[s.clone(), half_slot],
        Some((0, 1)),
        Expect::Distinct,
        None,
        eq,
        strategy,
        |t| Ok(vec![(alg.comp_raw(&t[0])?, t[0].clone())]),
    )?);

    reports.push(run_law(
        "D6",
        &[s.clone(), s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            let lhs = alg.comp_raw(&alg.p_raw(a, b, c)?)?;
            let rhs = alg.p_raw(&alg.comp_raw(a)?, b, &alg.comp_raw(c)?)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    reports.push(run_law(
        "D7",
        &[s.clone(), s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            let lhs = alg.p_raw(c, b, a)?;
            let rhs = alg.p_raw(a, &alg.comp_raw(b)?, c)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    reports.push(run_law(
        "D8",
        &[s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let (a, b) = (&t[0], &t[1]);
            let lhs = alg.comp_raw(&alg.circ_raw(a, b)?)?;
            let rhs = alg.dot_raw(&alg.comp_raw(b)?, &alg.comp_raw(a)?)?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    reports.push(run_law(
        "D9",
        &[s.clone(), s.clone(), s.clone()],
        None,
        Expect::Equal,
        Some(&member),
        eq,
        strategy,
        |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            let lhs = alg.dot_raw(alg.half(), &alg.p_raw(a, b, c)?)?;
            let rhs = alg.mid_raw(
                &alg.dot_raw(&alg.comp_raw(b)?, a)?,
                &alg.dot_raw(b, c)?,
            )?;
            Ok(vec![(lhs, rhs)])
        },
    )?);

    Ok(reports)
}

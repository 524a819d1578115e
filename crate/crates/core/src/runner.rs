//! Shared law-checking driver: builds deterministic tuple streams (anchor
//! grids, seeded random samples, degenerate collapses) and records verdicts.

use crate::eq::EqBackend;
use crate::error::{Error, Result};
use crate::report::{LawReport, Violation, ViolationKind};
use crate::sample::SampleStrategy;
use crate::value::Value;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub type MemberFn = Arc<dyn Fn(&Value) -> bool + Send + Sync>;
pub type SamplerFn = Arc<dyn Fn(&mut ChaCha8Rng) -> Value + Send + Sync>;

/// One argument position of a law: where its values come from.
#[derive(Clone)]
pub(crate) struct Slot {
    /// Slots sharing a kind collapse to one value in degenerate tuples.
    pub kind: u8,
    pub grid: Vec<Value>,
    pub sampler: SamplerFn,
    pub member: MemberFn,
    /// Full enumeration for exhaustive runs (finite carriers).
    pub carrier: Option<Vec<Value>>,
}

/// Whether the evaluated pairs must agree or must differ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Expect {
    Equal,
    Distinct,
}

fn separated(eq: EqBackend, separation: f64, a: &Value, b: &Value) -> bool {
    match eq {
        EqBackend::Exact => !eq.eq(a, b),
        EqBackend::Approx { .. } => EqBackend::distance(a, b) >= separation,
    }
}

/// Cartesian product of per-slot candidate lists, with an optional
/// separation filter on a designated index pair.
fn product_tuples(
    lists: &[Vec<Value>],
    pair: Option<(usize, usize)>,
    eq: EqBackend,
    separation: f64,
) -> Vec<Vec<Value>> {
    let mut out = Vec::new();
    if lists.iter().any(|l| l.is_empty()) {
        return out;
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        let tuple: Vec<Value> = idx
            .iter()
            .enumerate()
            .map(|(s, &i)| lists[s][i].clone())
            .collect();
        let keep = match pair {
            Some((i, j)) => separated(eq, separation, &tuple[i], &tuple[j]),
            None => true,
        };
        if keep {
            out.push(tuple);
        }
        // odometer increment
        let mut s = lists.len();
        loop {
            if s == 0 {
                return out;
            }
            s -= 1;
            idx[s] += 1;
            if idx[s] < lists[s].len() {
                break;
            }
            idx[s] = 0;
        }
    }
}

fn random_tuple(
    slots: &[Slot],
    pair: Option<(usize, usize)>,
    eq: EqBackend,
    separation: f64,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Value>> {
    let mut tuple: Vec<Value> = slots.iter().map(|s| (s.sampler)(rng)).collect();
    if let Some((i, j)) = pair {
        let mut tries = 0;
        while !separated(eq, separation, &tuple[i], &tuple[j]) {
            tries += 1;
            if tries > 60 {
                return None; // carrier too small to separate; caller skips
            }
            tuple[j] = (slots[j].sampler)(rng);
        }
    }
    Some(tuple)
}

/// Degenerate tuple: values collapsed across slots of the selected kinds.
fn degenerate_tuple(slots: &[Slot], mode: usize, rng: &mut ChaCha8Rng) -> Vec<Value> {
    let mut kinds: Vec<u8> = slots.iter().map(|s| s.kind).collect();
    kinds.sort_unstable();
    kinds.dedup();
    let collapse: Vec<u8> = match mode % 3 {
        0 => vec![kinds[0]],
        1 => vec![*kinds.last().unwrap()],
        _ => kinds.clone(),
    };
    let mut shared: Vec<(u8, Value)> = Vec::new();
    slots
        .iter()
        .map(|s| {
            if collapse.contains(&s.kind) {
                if let Some((_, v)) = shared.iter().find(|(k, _)| *k == s.kind) {
                    return v.clone();
                }
                let v = (s.sampler)(rng);
                shared.push((s.kind, v.clone()));
                v
            } else {
                (s.sampler)(rng)
            }
        })
        .collect()
}

fn check_membership(slots: &[Slot], tuple: &[Value]) -> Result<()> {
    for (s, v) in slots.iter().zip(tuple) {
        if !(s.member)(v) {
            return Err(Error::config(format!(
                "sampler produced a non-member value {}",
                v
            )));
        }
    }
    Ok(())
}

/// Build the deterministic tuple stream for one law.
fn tuple_stream(
    law_id: &str,
    slots: &[Slot],
    pair: Option<(usize, usize)>,
    eq: EqBackend,
    strategy: &SampleStrategy,
) -> Result<Vec<Vec<Value>>> {
    if slots.is_empty() {
        return Ok(vec![vec![]]);
    }
    if strategy.exhaustive {
        let lists: Vec<Vec<Value>> = slots
            .iter()
            .map(|s| {
                s.carrier.clone().ok_or_else(|| {
                    Error::config("exhaustive sampling requested on a non-enumerable carrier")
                })
            })
            .collect::<Result<_>>()?;
        return Ok(product_tuples(&lists, pair, eq, strategy.separation));
    }

    let mut tuples = Vec::new();
    if strategy.include_anchors {
        let lists: Vec<Vec<Value>> = slots.iter().map(|s| s.grid.clone()).collect();
        tuples.extend(product_tuples(&lists, pair, eq, strategy.separation));
    }
    let mut rng = strategy.law_rng(law_id);
    for _ in 0..strategy.count {
        if let Some(t) = random_tuple(slots, pair, eq, strategy.separation, &mut rng) {
            check_membership(slots, &t)?;
            tuples.push(t);
        }
    }
    if pair.is_none() {
        for j in 0..strategy.count / 5 {
            let t = degenerate_tuple(slots, j, &mut rng);
            check_membership(slots, &t)?;
            tuples.push(t);
        }
    }
    Ok(tuples)
}

/// Check one law. `eval` maps an input tuple to one or more (lhs, rhs)
/// pairs; the pairs must agree (`Expect::Equal`) or differ
/// (`Expect::Distinct`). When `closure` is given, every evaluated side is
/// also membership-checked and escapes are recorded as closure violations.
pub(crate) fn run_law<F>(
    law_id: &str,
    slots: &[Slot],
    pair: Option<(usize, usize)>,
    expect: Expect,
    closure: Option<&MemberFn>,
    eq: EqBackend,
    strategy: &SampleStrategy,
    eval: F,
) -> Result<LawReport>
where
    F: Fn(&[Value]) -> Result<Vec<(Value, Value)>>,
{
    let tuples = tuple_stream(law_id, slots, pair, eq, strategy)?;
    let mut report = LawReport::new(law_id);
    for tuple in tuples {
        report.samples += 1;
        for (lhs, rhs) in eval(&tuple)? {
            if let Some(member) = closure {
                for side in [&lhs, &rhs] {
                    if !member(side) {
                        report.violations.push(Violation {
                            inputs: tuple.clone(),
                            lhs: lhs.clone(),
                            rhs: rhs.clone(),
                            distance: None,
                            kind: ViolationKind::Closure,
                        });
                        break;
                    }
                }
            }
            let agree = eq.eq(&lhs, &rhs);
            let violated = match expect {
                Expect::Equal => !agree,
                Expect::Distinct => agree,
            };
            if violated {
                let distance = eq.tolerance().map(|_| EqBackend::distance(&lhs, &rhs));
                report.violations.push(Violation {
                    inputs: tuple.clone(),
                    lhs,
                    rhs,
                    distance,
                    kind: ViolationKind::Mismatch,
                });
            }
        }
    }
    Ok(report)
}

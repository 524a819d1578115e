use crate::value::{write_float, Value};
use std::cmp::Ordering;
use std::fmt;

/// Why a tuple was recorded as a violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The two sides of the law disagreed.
    Mismatch,
    /// An operation result left the carrier.
    Closure,
}

impl ViolationKind {
    fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::Mismatch => "mismatch",
            ViolationKind::Closure => "closure",
        }
    }
}

/// One failing tuple: the inputs in the law's argument order, both evaluated
/// sides, and (under the approximate backend) their scaled distance.
#[derive(Clone, Debug)]
pub struct Violation {
    pub inputs: Vec<Value>,
    pub lhs: Value,
    pub rhs: Value,
    pub distance: Option<f64>,
    pub kind: ViolationKind,
}

/// Outcome of checking one law on one instance.
#[derive(Clone, Debug)]
pub struct LawReport {
    /// Stable law identifier, e.g. `"A3"`, `"X5"`, `"affine"`.
    pub law: String,
    /// Number of tuples evaluated.
    pub samples: usize,
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> LawReport {
        LawReport {
            law: law.into(),
            samples: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Single-line JSON rendering; this is the schema the CLI emits.
    pub fn to_json(&self) -> String {
        let mut out = String::with_capacity(96);
        out.push_str("{\"law\":\"");
        out.push_str(&self.law);
        out.push_str("\",\"samples\":");
        out.push_str(&self.samples.to_string());
        out.push_str(",\"verdict\":\"");
        out.push_str(if self.passed() { "pass" } else { "fail" });
        out.push_str("\",\"violations\":[");
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str("{\"inputs\":[");
            for (j, input) in v.inputs.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                input.write_json(&mut out);
            }
            out.push_str("],\"lhs\":");
            v.lhs.write_json(&mut out);
            out.push_str(",\"rhs\":");
            v.rhs.write_json(&mut out);
            out.push_str(",\"distance\":");
            match v.distance {
                Some(d) => write_float(d, &mut out),
                None => out.push_str("null"),
            }
            out.push_str(",\"kind\":\"");
            out.push_str(v.kind.as_str());
            out.push_str("\"}");
        }
        out.push_str("]}");
        out
    }

    /// The violation whose inputs match `inputs` under structural equality,
    /// if any. Convenience for tests that pin specific witnesses.
    pub fn find_violation(&self, inputs: &[Value]) -> Option<&Violation> {
        self.violations.iter().find(|v| v.inputs == inputs)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Order law ids by alphabetic prefix, then numeric suffix, so `"Y2"` sorts
/// before `"Y10"` and plain names sort lexicographically.
pub fn law_id_cmp(a: &str, b: &str) -> Ordering {
    let split = |s: &str| {
        let idx = s
            .char_indices()
            .rev()
            .take_while(|(_, c)| c.is_ascii_digit())
            .last()
            .map(|(i, _)| i);
        match idx {
            Some(i) if i < s.len() => {
                let (head, tail) = s.split_at(i);
                match tail.parse::<u64>() {
                    Ok(n) => (head.to_string(), Some(n)),
                    Err(_) => (s.to_string(), None),
                }
            }
            _ => (s.to_string(), None),
        }
    };
    let (ha, na) = split(a);
    let (hb, nb) = split(b);
    ha.cmp(&hb).then(na.cmp(&nb)).then(a.cmp(b))
}

/// Sort a batch of reports into canonical emission order.
pub fn sort_reports(reports: &mut [LawReport]) {
    reports.sort_by(|a, b| law_id_cmp(&a.law, &b.law));
}

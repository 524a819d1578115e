//! Property-based invariants complementing the sampled law suites. Each
//! property states a fact with an independently computed oracle (inline
//! rational arithmetic or a second evaluation path) so proptest's shrinker
//! can hunt for small counterexamples instead of relying on fixed seeds.

use mobi_core::instances::algebras::{interval_algebra, lozenge_algebra};
use mobi_core::instances::spaces::euclidean;
use mobi_core::{big_rat, check_space, law_id_cmp, EqBackend, SampleStrategy, Value};
use proptest::prelude::*;

/// A rational in [0, 1] with a small denominator.
fn unit_ratio() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=12).prop_flat_map(|d| (0..=d).prop_map(move |n| (n, d)))
}

/// A rational in [-3, 3] with a small denominator.
fn signed_ratio() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=8).prop_flat_map(|d| (-3 * d..=3 * d).prop_map(move |n| (n, d)))
}

/// A point of the scalar lozenge: (t, s) with |s| <= min(t, 1 - t),
/// produced by scaling the admissible width by a quarter-step factor.
fn lozenge_point() -> impl Strategy<Value = Value> {
    (unit_ratio(), -4i64..=4).prop_map(|((tn, td), steps)| {
        let t = big_rat(tn, td);
        let one = big_rat(1, 1);
        let width = if &one - &t < t { &one - &t } else { t.clone() };
        let s = width * big_rat(steps, 4);
        Value::tuple(vec![Value::Rational(t), Value::Rational(s)])
    })
}

proptest! {
    // Interval mixing is literally the affine form a + b(c - a).
    #[test]
    fn interval_mixing_matches_the_affine_form(
        (an, ad) in unit_ratio(),
        (bn, bd) in unit_ratio(),
        (cn, cd) in unit_ratio(),
    ) {
        let alg = interval_algebra(EqBackend::Exact).unwrap();
        let (a, b, c) = (big_rat(an, ad), big_rat(bn, bd), big_rat(cn, cd));
        let got = alg.p(
            &Value::Rational(a.clone()),
            &Value::Rational(b.clone()),
            &Value::Rational(c.clone()),
        ).unwrap();
        let want = &a + &b * (&c - &a);
        prop_assert_eq!(got, Value::Rational(want));
    }

    // Complementing twice is the identity on the interval scalars.
    #[test]
    fn interval_complement_is_an_involution((an, ad) in unit_ratio()) {
        let alg = interval_algebra(EqBackend::Exact).unwrap();
        let a = Value::rat(an, ad);
        let twice = alg.complement(&alg.complement(&a).unwrap()).unwrap();
        prop_assert_eq!(twice, a);
    }

    // ... and on the two-component lozenge scalars.
    #[test]
    fn lozenge_complement_is_an_involution(a in lozenge_point()) {
        let alg = lozenge_algebra(EqBackend::Exact).unwrap();
        let twice = alg.complement(&alg.complement(&a).unwrap()).unwrap();
        prop_assert_eq!(twice, a);
    }

    // Mixing runs backwards through the complemented middle scalar:
    // p(c, 1 - b, a) = p(a, b, c) on the interval.
    #[test]
    fn interval_mixing_reverses_through_the_complement(
        (an, ad) in unit_ratio(),
        (bn, bd) in unit_ratio(),
        (cn, cd) in unit_ratio(),
    ) {
        let alg = interval_algebra(EqBackend::Exact).unwrap();
        let (a, b, c) = (Value::rat(an, ad), Value::rat(bn, bd), Value::rat(cn, cd));
        let reversed = alg.p(&c, &alg.complement(&b).unwrap(), &a).unwrap();
        prop_assert_eq!(reversed, alg.p(&a, &b, &c).unwrap());
    }

    // The same reversal on points: q(x, a, y) = q(y, 1 - a, x) on the line.
    #[test]
    fn line_chords_reverse_through_the_complement(
        (xn, xd) in signed_ratio(),
        (yn, yd) in signed_ratio(),
        (an, ad) in unit_ratio(),
    ) {
        let sp = euclidean(1, EqBackend::Exact).unwrap();
        let (x, y, a) = (Value::rat(xn, xd), Value::rat(yn, yd), Value::rat(an, ad));
        let comp = sp.algebra().complement(&a).unwrap();
        prop_assert_eq!(sp.q(&x, &a, &y).unwrap(), sp.q(&y, &comp, &x).unwrap());
    }

    // The lozenge mixer never leaves the lozenge: the result (t1, t2)
    // always satisfies |t2| <= t1 <= 1 - |t2|.
    #[test]
    fn lozenge_mixing_stays_inside(
        a in lozenge_point(),
        b in lozenge_point(),
        c in lozenge_point(),
    ) {
        let alg = lozenge_algebra(EqBackend::Exact).unwrap();
        let out = alg.p(&a, &b, &c).unwrap();
        let items = out.as_tuple().unwrap();
        let t1 = items[0].as_rational().unwrap();
        let t2 = items[1].as_rational().unwrap();
        let zero = big_rat(0, 1);
        let abs2 = if *t2 < zero { -t2 } else { t2.clone() };
        prop_assert!(abs2 <= *t1, "left edge crossed: {}", out);
        prop_assert!(*t1 <= big_rat(1, 1) - &abs2, "right edge crossed: {}", out);
    }

    // Law ids with a shared non-numeric prefix order by numeric suffix, and
    // the comparison is a total order (antisymmetric, reflexive).
    #[test]
    fn law_ids_order_numerically_within_a_prefix(
        prefix in "[A-Za-z.-]{1,6}",
        a in 0u64..1000,
        b in 0u64..1000,
    ) {
        let ia = format!("{}{}", prefix, a);
        let ib = format!("{}{}", prefix, b);
        prop_assert_eq!(law_id_cmp(&ia, &ib), a.cmp(&b));
        prop_assert_eq!(law_id_cmp(&ib, &ia), b.cmp(&a));
        prop_assert_eq!(law_id_cmp(&ia, &ia), std::cmp::Ordering::Equal);
    }
}

proptest! {
    // Report generation is a pure function of the seed: re-running a suite
    // reproduces every report byte for byte. Kept to a few cases because
    // each one runs a full law suite.
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn law_reports_are_deterministic_per_seed(seed in any::<u64>()) {
        let strategy = SampleStrategy::default().with_seed(seed).with_count(40);
        let sp = euclidean(1, EqBackend::Exact).unwrap();
        let first: Vec<String> = check_space(&sp, &strategy)
            .unwrap()
            .iter()
            .map(|r| r.to_json())
            .collect();
        let second: Vec<String> = check_space(&sp, &strategy)
            .unwrap()
            .iter()
            .map(|r| r.to_json())
            .collect();
        prop_assert_eq!(first, second);
    }
}

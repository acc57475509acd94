//! Always-on property suites: normalization laws, pointwise-image
//! membership, enclosure soundness, and evaluation soundness under random
//! sampling with fixed seeds.

mod common;

use cantor_arith::expr::parse_expr;
use cantor_arith::interval::{Interval, IntervalUnion, SetOp};
use cantor_arith::rational::{rat, rat_int, rat_pow, Rational};
use num::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn interval_strategy() -> impl Strategy<Value = Interval> {
    (-100i64..100, -100i64..100, 1i64..20).prop_map(|(a, b, d)| {
        let lo = rat(a.min(b), d);
        let hi = rat(a.max(b), d);
        Interval::make(lo, hi)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    /// normalize(normalize(S)) = normalize(S) = normalize(shuffle(S)).
    #[test]
    fn normalize_idempotent_and_order_insensitive(
        mut intervals in prop::collection::vec(interval_strategy(), 0..12),
        rotate in 0usize..12,
    ) {
        let once = IntervalUnion::normalize(intervals.clone());
        let twice = IntervalUnion::normalize(once.parts().to_vec());
        prop_assert_eq!(&once, &twice);
        let k = if intervals.is_empty() { 0 } else { rotate % intervals.len() };
        intervals.rotate_left(k);
        intervals.reverse();
        let shuffled = IntervalUnion::normalize(intervals);
        prop_assert_eq!(once, shuffled);
    }

    /// Measure is subadditive, with equality exactly for pairwise disjoint,
    /// non-touching raw parts.
    #[test]
    fn normalize_measure_subadditive(
        intervals in prop::collection::vec(interval_strategy(), 0..10),
    ) {
        let raw_total: Rational = intervals
            .iter()
            .map(Interval::length)
            .fold(Rational::zero(), |a, b| a + b);
        let normalized = IntervalUnion::normalize(intervals.clone());
        prop_assert!(normalized.measure() <= raw_total);
        let mut sorted = intervals.clone();
        sorted.sort();
        let separated = sorted.windows(2).all(|w| w[0].hi() < w[1].lo());
        if separated {
            prop_assert_eq!(normalized.measure(), raw_total);
        }
    }

    /// The pointwise sum is exactly {x + y}: forward membership by corner
    /// sampling, and every sampled image point decomposes back.
    #[test]
    fn pointwise_sum_matches_pointset(
        xs in prop::collection::vec(interval_strategy(), 1..4),
        ys in prop::collection::vec(interval_strategy(), 1..4),
        t in 0u32..=4,
    ) {
        let a = IntervalUnion::normalize(xs);
        let b = IntervalUnion::normalize(ys);
        let sum = a.pointwise(&b, SetOp::Sum).unwrap();
        let frac = rat(t as i64, 4);
        for pa in a.parts() {
            for pb in b.parts() {
                let x = pa.lo() + pa.length() * &frac;
                let y = pb.lo() + pb.length() * (Rational::one() - &frac);
                prop_assert!(sum.contains_point(&(x + y)));
            }
        }
        // reverse: a sampled point of the sum splits as x + y
        for ps in sum.parts() {
            let z = ps.lo() + ps.length() * &frac;
            let witnessed = a.parts().iter().any(|pa| {
                let need = Interval::make(&z - pa.hi(), &z - pa.lo());
                b.parts().iter().any(|pb| pb.intersect(&need).is_some())
            });
            prop_assert!(witnessed);
        }
    }

    /// Quotient image on zero-free unions: sampled quotients are members.
    #[test]
    fn pointwise_quotient_sound(
        xs in prop::collection::vec(interval_strategy(), 1..3),
        shift in 101i64..200,
        t in 0u32..=3,
    ) {
        let a = IntervalUnion::normalize(xs);
        // shift the divisor away from zero
        let b = a.translate(&rat(shift, 1));
        let q = a.pointwise(&b, SetOp::Quotient).unwrap();
        let frac = rat(t as i64, 3);
        for pa in a.parts() {
            for pb in b.parts() {
                let x = pa.lo() + pa.length() * &frac;
                let y = pb.lo() + pb.length() * &frac;
                prop_assert!(q.contains_point(&(x / y)));
            }
        }
    }
}

use common::random_expr;

/// Central finite differences agree with the symbolic derivative to 1e−6
/// relative tolerance at 200 random expression/point pairs (step 1e−6 of
/// the box width), all in exact arithmetic.
#[test]
fn derivative_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let dims = 3usize;
    let h = rat(1, 1_000_000); // box width is 1
    let tol = rat(1, 1_000_000);
    let floor = rat(1, 100);
    let mut kept = 0usize;
    while kept < 200 {
        let e = random_expr(&mut rng, dims, 3);
        let i = rng.gen_range(0..dims);
        // random interior rational point in [1, 2]^d
        let point: Vec<Rational> = (0..dims)
            .map(|_| rat_int(1) + rat(rng.gen_range(1..=15), 16))
            .collect();
        let d = e.differentiate(i);
        let d_val = d.eval_point(&point).expect("tame expression");
        if d_val.abs() < floor {
            continue; // derivative too small for a relative comparison
        }
        let mut plus = point.clone();
        plus[i] += &h;
        let mut minus = point.clone();
        minus[i] -= &h;
        let fd = (e.eval_point(&plus).unwrap() - e.eval_point(&minus).unwrap()) / (rat_int(2) * &h);
        let rel = ((&fd - &d_val) / &d_val).abs();
        assert!(
            rel <= tol,
            "relative error {rel} for {e} at {point:?} (fd {fd}, sym {d_val})"
        );
        kept += 1;
    }
}

/// Interval evaluation is sound: sampled values always land inside the
/// enclosure (1000 points across five expression/box pairs).
#[test]
fn interval_evaluation_sound_under_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBADA55);
    let cases = [
        ("x1 + x2", vec![((0, 1), (1, 1)), ((0, 1), (1, 1))]),
        ("x1 * x2 - x2^2", vec![((-1, 1), (1, 1)), ((-1, 2), (3, 2))]),
        ("1/x1 + 1/x2", vec![((2, 3), (1, 1)), ((1, 2), (2, 1))]),
        (
            "(x1 - x2) * (x1 + x2)",
            vec![((-2, 1), (2, 1)), ((0, 1), (1, 1))],
        ),
        ("x1 / (x2 + 3)", vec![((-1, 1), (1, 1)), ((-1, 1), (1, 1))]),
    ];
    for (text, box_spec) in cases {
        let box_: Vec<Interval> = box_spec
            .iter()
            .map(|(a, b)| Interval::make(rat(a.0, a.1), rat(b.0, b.1)))
            .collect();
        let e = parse_expr(text, box_.len()).unwrap();
        let enclosure = e.eval_interval(&box_).unwrap();
        for _ in 0..200 {
            let point: Vec<Rational> = box_
                .iter()
                .map(|iv| iv.lo() + iv.length() * rat(rng.gen_range(0..=64), 64))
                .collect();
            let v = e.eval_point(&point).unwrap();
            assert!(
                enclosure.contains(&v),
                "{text}: {v} escapes {enclosure} at {point:?}"
            );
        }
    }
}

/// Root enclosures are sound on 500 random (x, n): lo^n ≤ x ≤ hi^n and the
/// width never exceeds 2^(−p)·max(1, |lo|).
#[test]
fn root_enclosures_sound_under_sampling() {
    use cantor_arith::enclosure::root_enclosure;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for _ in 0..500 {
        let x = rat(rng.gen_range(0..=1_000_000), rng.gen_range(1..=10_000));
        let n = rng.gen_range(1..=6u32);
        let p = rng.gen_range(4..=96u32);
        let enc = root_enclosure(&x, n, p).unwrap();
        let v = enc.value();
        assert!(rat_pow(v.lo(), n as i64).unwrap() <= x);
        assert!(rat_pow(v.hi(), n as i64).unwrap() >= x);
        let bound = rat_pow(&rat(1, 2), p as i64).unwrap() * v.lo().abs().max(Rational::one());
        assert!(
            v.length() <= bound,
            "width {} over bound at p={p}",
            v.length()
        );
    }
}

/// Parse → print → parse is the identity on parsed trees.
#[test]
fn parser_round_trip_on_random_expressions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x12EE);
    for _ in 0..100 {
        let e = random_expr(&mut rng, 4, 3);
        let printed = e.to_string();
        let reparsed = parse_expr(&printed, 4)
            .unwrap_or_else(|err| panic!("`{printed}` failed to reparse: {err}"));
        assert_eq!(reparsed, e, "round trip changed `{printed}`");
    }
}

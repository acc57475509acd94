//! Set images: exact first-level images under proved theorems, certified
//! outer covers at depth, the two-map quotient closed form, scaled-set
//! intersection queries, and outer-measure sequences.

use crate::cover::outer_cover;
use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::interval::{Interval, IntervalUnion};
use crate::rational::{rat, rat_pow, rational_string, Rational};
use crate::system::{CantorSystem, SelfSimilarSystem};
use crate::theorems::{check_thm_intersection, Conclusion, TheoremId, Verdict};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    /// The set equals f(K₁,…,K_d), certified by a proved theorem.
    Exact,
    /// The set contains f(K₁,…,K_d).
    Outer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageResult {
    pub set: IntervalUnion,
    pub exactness: Exactness,
    pub depth: u32,
    pub theorem: Option<TheoremId>,
}

/// Theorems whose Proved conclusion is a certified exact image.
fn yields_exact_image(id: TheoremId) -> bool {
    matches!(
        id,
        TheoremId::Cantor
            | TheoremId::CorSum
            | TheoremId::CorIntervalTwo
            | TheoremId::ArithmeticSss
            | TheoremId::CorArithmeticTwo
            | TheoremId::RatioTwo
    )
}

/// Wraps a proved verdict's image conclusion as an exact result.
/// The verdict must come from a theorem whose conclusion is the image
/// itself (not a structure-only statement).
pub fn image_exact(verdict: &Verdict) -> Result<ImageResult> {
    if !verdict.is_proved() {
        return Err(Error::NotProved);
    }
    if !yields_exact_image(verdict.theorem) {
        return Err(Error::NoImageConclusion);
    }
    match &verdict.conclusion {
        Some(Conclusion::Image(set)) => Ok(ImageResult {
            set: set.clone(),
            exactness: Exactness::Exact,
            depth: 1,
            theorem: Some(verdict.theorem),
        }),
        _ => Err(Error::NoImageConclusion),
    }
}

/// Certified outer cover of f(K₁,…,K_d) from the level-`depth` bridge
/// tuples. The true image is contained in the result; covers are antitone
/// in the depth.
pub fn image_outer(f: &Expr, systems: &[CantorSystem], depth: u32) -> Result<ImageResult> {
    Ok(ImageResult {
        set: outer_cover(f, systems, depth)?,
        exactness: Exactness::Outer,
        depth,
        theorem: None,
    })
}

/// union_measure of the outer covers at the given (strictly increasing)
/// depths; the sequence is nonincreasing and every term bounds the true
/// measure from above.
pub fn outer_measure_sequence(
    f: &Expr,
    systems: &[CantorSystem],
    depths: &[u32],
) -> Result<Vec<Rational>> {
    assert!(
        depths.windows(2).all(|w| w[0] < w[1]),
        "depths must be strictly increasing"
    );
    let mut out = Vec::with_capacity(depths.len());
    for &d in depths {
        out.push(image_outer(f, systems, d)?.set.measure());
    }
    debug_assert!(out.windows(2).all(|w| w[0] >= w[1]));
    Ok(out)
}

/// Quotient set K/K of the two-branch system {λx, λx+1−λ} as the union of
/// the pieces λ^k·[1−λ, (1−λ)⁻¹] over the requested k range, together with
/// the disjointness regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientClosedForm {
    pub pieces: IntervalUnion,
    /// Pieces are pairwise disjoint exactly when λ² − 3λ + 1 > 0,
    /// i.e. λ < (3 − √5)/2; at and above the threshold they merge.
    pub disjoint: bool,
    pub lambda: Rational,
}

/// Exact sign of λ² − 3λ + 1 deciding the disjointness regime.
pub fn quotient_regime_is_disjoint(lambda: &Rational) -> bool {
    (lambda * lambda - rat(3, 1) * lambda + Rational::one()).is_positive()
}

pub fn quotient_closed_form(
    lambda: &Rational,
    k_min: i64,
    k_max: i64,
) -> Result<QuotientClosedForm> {
    if lambda < &rat(1, 3) || lambda >= &rat(1, 2) {
        return Err(Error::LambdaOutOfRange(rational_string(lambda)));
    }
    assert!(k_min <= k_max, "empty k range");
    let one_minus = Rational::one() - lambda;
    let base = Interval::make(one_minus.clone(), one_minus.recip());
    let mut parts = Vec::with_capacity((k_max - k_min + 1) as usize);
    for k in k_min..=k_max {
        let factor = rat_pow(lambda, k)?;
        parts.push(base.scale(&factor));
    }
    Ok(QuotientClosedForm {
        pieces: IntervalUnion::normalize(parts),
        disjoint: quotient_regime_is_disjoint(lambda),
        lambda: lambda.clone(),
    })
}

/// Scale factor for an intersection query: exact rational or a certified
/// enclosure of an irrational value.
#[derive(Debug, Clone)]
pub enum Scale {
    Exact(Rational),
    Enclosed(Enclosure),
}

impl Scale {
    fn interval(&self) -> Interval {
        match self {
            Scale::Exact(r) => Interval::point(r.clone()),
            Scale::Enclosed(e) => e.value().clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectAnswer {
    Intersect,
    Disjoint,
    Unknown,
}

/// Is this the two-branch system {λx, λx + 1 − λ} in the disjoint
/// quotient regime λ ∈ [1/3, (3−√5)/2)?
fn two_branch_lambda(sys: &CantorSystem) -> Option<Rational> {
    let s = match sys {
        CantorSystem::SelfSimilar(s) => s,
        CantorSystem::Moran(_) => return None,
    };
    if s.maps().len() != 2 {
        return None;
    }
    let (m1, m2) = (&s.maps()[0], &s.maps()[1]);
    let lambda = m1.ratio().clone();
    let expected_offset = Rational::one() - &lambda;
    if m1.offset().is_zero()
        && m2.ratio() == &lambda
        && m2.offset() == &expected_offset
        && lambda >= rat(1, 3)
        && quotient_regime_is_disjoint(&lambda)
    {
        Some(lambda)
    } else {
        None
    }
}

/// Decides whether aK₁ ∩ bK₂ is nonempty (0 excluded from both sets).
///
/// For matching two-branch λ systems in the disjoint regime the query
/// reduces to membership of b/a in the quotient closed form, decided with
/// enclosure arithmetic: Intersect when the enclosure lands inside one
/// piece, Disjoint when it lands strictly inside a gap (or the quotient is
/// negative), Unknown when it straddles a boundary at this precision.
/// Otherwise, rational scales are answered through the intersection
/// criterion when its hypotheses hold.
pub fn scaled_intersection(
    sys1: &CantorSystem,
    sys2: &CantorSystem,
    a: &Scale,
    b: &Scale,
    _depth: u32,
) -> Result<IntersectAnswer> {
    let ia = a.interval();
    let ib = b.interval();
    if ia.contains_zero() || ib.contains_zero() {
        return Err(Error::ZeroScale);
    }
    let q = ib.div(&ia)?;

    if let (Some(l1), Some(l2)) = (two_branch_lambda(sys1), two_branch_lambda(sys2)) {
        if l1 == l2 {
            return lambda_quotient_membership(&l1, &q);
        }
    }

    if let (Scale::Exact(ra), Scale::Exact(rb)) = (a, b) {
        if sys1.hull().lo().is_positive() && sys2.hull().lo().is_positive() {
            let verdict = check_thm_intersection(sys1, sys2, ra, rb)?;
            if let Some(Conclusion::Membership(m)) = verdict.conclusion {
                return Ok(if m {
                    IntersectAnswer::Intersect
                } else {
                    IntersectAnswer::Disjoint
                });
            }
            return Ok(IntersectAnswer::Unknown);
        }
    }
    Ok(IntersectAnswer::Unknown)
}

/// Membership of the quotient enclosure in ∪_k λ^k [1−λ, (1−λ)⁻¹] ∪ {0}.
fn lambda_quotient_membership(lambda: &Rational, q: &Interval) -> Result<IntersectAnswer> {
    if q.hi().is_negative() {
        // both sets sit in (0, ∞) after removing 0
        return Ok(IntersectAnswer::Disjoint);
    }
    if !q.lo().is_positive() {
        return Ok(IntersectAnswer::Unknown);
    }
    let one_minus = Rational::one() - lambda;
    // walk k until the pieces bracket the query from both sides
    let mut lo_piece = one_minus.clone(); // λ^k (1−λ)
    let mut hi_piece = one_minus.recip(); // λ^k (1−λ)⁻¹
    let mut k: i64 = 0;
    // move up while the piece is entirely below the query
    while &hi_piece < q.lo() {
        lo_piece /= lambda;
        hi_piece /= lambda;
        k -= 1;
    }
    // move down while the piece is entirely above the query
    while &lo_piece > q.hi() {
        lo_piece *= lambda;
        hi_piece *= lambda;
        k += 1;
    }
    let _ = k;
    // now piece(k) = [lo_piece, hi_piece] overlaps or brackets the query side
    if q.lo() >= &lo_piece && q.hi() <= &hi_piece {
        return Ok(IntersectAnswer::Intersect);
    }
    // the gap above piece(k) is (hi_piece, lo_piece/λ); the gap below is
    // (hi_piece·λ, lo_piece)
    let next_lo = &lo_piece / lambda;
    if q.lo() > &hi_piece && q.hi() < &next_lo {
        return Ok(IntersectAnswer::Disjoint);
    }
    let prev_hi = &hi_piece * lambda;
    if q.lo() > &prev_hi && q.hi() < &lo_piece {
        return Ok(IntersectAnswer::Disjoint);
    }
    Ok(IntersectAnswer::Unknown)
}

/// Convenience: the λ-system itself, for intersection queries.
pub fn two_branch_system(lambda: &Rational) -> Result<CantorSystem> {
    Ok(SelfSimilarSystem::two_branch(lambda.clone())?.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enclosure::{constant_enclosure, root_enclosure, ConstantName};
    use crate::expr::parse_expr;
    use crate::rational::rat_int;
    use crate::theorems::check_cor_sum;

    fn cantor_sys() -> CantorSystem {
        SelfSimilarSystem::middle_thirds().into()
    }

    type Endpoints = ((i64, i64), (i64, i64));

    fn union(parts: &[Endpoints]) -> IntervalUnion {
        IntervalUnion::normalize(
            parts
                .iter()
                .map(|(a, b)| Interval::make(rat(a.0, a.1), rat(b.0, b.1)))
                .collect(),
        )
    }

    #[test]
    fn exact_image_from_sum_verdict() {
        let v = check_cor_sum(&[cantor_sys(), cantor_sys()]).unwrap();
        let img = image_exact(&v).unwrap();
        assert_eq!(img.exactness, Exactness::Exact);
        assert_eq!(img.set, union(&[((0, 1), (2, 1))]));
        assert_eq!(img.theorem, Some(TheoremId::CorSum));
    }

    #[test]
    fn exact_image_requires_proved_image_verdict() {
        let k1: CantorSystem = SelfSimilarSystem::from_ratios_offsets(&[
            (rat(1, 4), rat(0, 1)),
            (rat(1, 4), rat(3, 10)),
        ])
        .unwrap()
        .into();
        let v = check_cor_sum(&[k1, cantor_sys()]).unwrap();
        assert!(matches!(image_exact(&v), Err(Error::NotProved)));
    }

    /// Level-1 product boxes of C × C merge to [0,1/3] ∪ [4/9,1].
    /// Oracle: the four boxes by hand.
    #[test]
    fn outer_product_cover_examples() {
        let f = parse_expr("x1 * x2", 2).unwrap();
        let systems = [cantor_sys(), cantor_sys()];
        let d0 = image_outer(&f, &systems, 0).unwrap();
        assert_eq!(d0.set, union(&[((0, 1), (1, 1))]));
        let d1 = image_outer(&f, &systems, 1).unwrap();
        assert_eq!(d1.set, union(&[((0, 1), (1, 3)), ((4, 9), (1, 1))]));
    }

    #[test]
    fn sum_cover_stays_full_interval() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let systems = [cantor_sys(), cantor_sys()];
        let d5 = image_outer(&f, &systems, 5).unwrap();
        assert_eq!(d5.set, union(&[((0, 1), (2, 1))]));
    }

    #[test]
    fn covers_are_antitone_in_depth() {
        let f = parse_expr("x1 * x2", 2).unwrap();
        let systems = [cantor_sys(), cantor_sys()];
        let mut prev = image_outer(&f, &systems, 0).unwrap().set;
        for d in 1..=5 {
            let cur = image_outer(&f, &systems, d).unwrap().set;
            assert!(cur.is_subset_of(&prev), "cover at depth {d} escaped");
            prev = cur;
        }
    }

    #[test]
    fn measure_sequence_for_product() {
        let f = parse_expr("x1 * x2", 2).unwrap();
        let systems = [cantor_sys(), cantor_sys()];
        let seq = outer_measure_sequence(&f, &systems, &[0, 1, 2]).unwrap();
        assert_eq!(seq[0], rat_int(1));
        assert_eq!(seq[1], rat(8, 9));
        assert!(seq[2] <= seq[1]);
    }

    #[test]
    fn quotient_closed_form_at_one_third() {
        let q = quotient_closed_form(&rat(1, 3), -1, 1).unwrap();
        assert!(q.disjoint);
        assert_eq!(
            q.pieces,
            union(&[((2, 9), (1, 2)), ((2, 3), (3, 2)), ((2, 1), (9, 2))])
        );
        assert_eq!(q.pieces.num_parts(), 3);
    }

    #[test]
    fn quotient_regime_boundary() {
        // 0.38 < (3−√5)/2 ≈ 0.381966: disjoint (sign 44/10000 > 0)
        let q = quotient_closed_form(&rat(38, 100), 0, 1).unwrap();
        assert!(q.disjoint);
        // 0.4 > threshold: consecutive pieces overlap and merge
        let q = quotient_closed_form(&rat(2, 5), 0, 1).unwrap();
        assert!(!q.disjoint);
        assert_eq!(q.pieces.num_parts(), 1);
        assert_eq!(q.pieces, union(&[((6, 25), (5, 3))]));
        // rationals straddling the threshold flip the flag exactly
        assert!(quotient_regime_is_disjoint(&rat(381965, 1000000)));
        assert!(!quotient_regime_is_disjoint(&rat(381967, 1000000)));
    }

    #[test]
    fn quotient_closed_form_rejects_bad_lambda() {
        assert!(quotient_closed_form(&rat(1, 4), 0, 1).is_err());
        assert!(quotient_closed_form(&rat(1, 2), 0, 1).is_err());
    }

    #[test]
    fn scaled_intersection_with_enclosures() {
        let k = two_branch_system(&rat(1, 3)).unwrap();
        let e = constant_enclosure(ConstantName::E, 64).unwrap();
        let pi = constant_enclosure(ConstantName::Pi, 64).unwrap();

        // eK ∩ K: 1/e ≈ 0.3679 ∈ (1/3)·[2/3,3/2] = [2/9, 1/2]
        let ans = scaled_intersection(
            &k,
            &k,
            &Scale::Enclosed(e.clone()),
            &Scale::Exact(rat_int(1)),
            1,
        )
        .unwrap();
        assert_eq!(ans, IntersectAnswer::Intersect);

        // eK ∩ πK: π/e ≈ 1.1557 ∈ [2/3, 3/2]
        let ans =
            scaled_intersection(&k, &k, &Scale::Enclosed(e), &Scale::Enclosed(pi), 1).unwrap();
        assert_eq!(ans, IntersectAnswer::Intersect);

        // 5/9 lies strictly inside the gap (1/2, 2/3)
        let ans = scaled_intersection(
            &k,
            &k,
            &Scale::Exact(rat_int(1)),
            &Scale::Exact(rat(5, 9)),
            1,
        )
        .unwrap();
        assert_eq!(ans, IntersectAnswer::Disjoint);
    }

    #[test]
    fn scaled_intersection_detects_boundary_uncertainty() {
        let k = two_branch_system(&rat(1, 3)).unwrap();
        // √2/2 straddles nothing, but a deliberately coarse enclosure of a
        // boundary point must come back Unknown
        let coarse = root_enclosure(&rat(4001, 16000), 2, 2).unwrap();
        // enclosure of √0.2500625 ≈ 0.50006 with width up to 1/4 straddles 1/2
        let ans = scaled_intersection(
            &k,
            &k,
            &Scale::Exact(rat_int(1)),
            &Scale::Enclosed(coarse),
            1,
        )
        .unwrap();
        assert_eq!(ans, IntersectAnswer::Unknown);
    }

    #[test]
    fn scaled_intersection_rejects_zero() {
        let k = two_branch_system(&rat(1, 3)).unwrap();
        assert!(matches!(
            scaled_intersection(
                &k,
                &k,
                &Scale::Exact(rat_int(0)),
                &Scale::Exact(rat_int(1)),
                1
            ),
            Err(Error::ZeroScale)
        ));
    }

    #[test]
    fn scaled_intersection_mixed_signs_disjoint() {
        let k = two_branch_system(&rat(1, 3)).unwrap();
        let ans = scaled_intersection(
            &k,
            &k,
            &Scale::Exact(rat_int(1)),
            &Scale::Exact(rat_int(-2)),
            1,
        )
        .unwrap();
        assert_eq!(ans, IntersectAnswer::Disjoint);
    }
}

//! Sufficient-condition checkers for interval structure of continuous
//! images of Cantor sets.
//!
//! Each checker verifies the worst-case form of its theorem's pointwise
//! hypotheses with exact rational arithmetic and returns `Proved` together
//! with every inequality's slack (and, where the theorem yields one, the
//! certified image), or `Inconclusive`. Inconclusive never means disproved:
//! all conditions are sufficient only. Negative partial derivatives are
//! normalized away by reflecting the corresponding system about its hull
//! midpoint, which preserves the image as a point set.

use crate::calculus::{partial_bounds, BoxBounds, Sign};
use crate::cover::{box_budget, monotone_tuple_union, outer_cover, tuple_count};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::interval::{Interval, IntervalUnion, SetOp};
use crate::rational::Rational;
use crate::structure::{kappa, s_min, thickness};
use crate::system::{CantorSystem, SelfSimilarSystem};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Cantor,
    CorSum,
    CorIntervalTwo,
    Intersection,
    ArithmeticSss,
    CorArithmeticTwo,
    CorMultiplication,
    RatioTwo,
    Main,
    AstelsExt,
}

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Cantor => "cantor",
            TheoremId::CorSum => "cor-sum",
            TheoremId::CorIntervalTwo => "cor-interval-two",
            TheoremId::Intersection => "intersection",
            TheoremId::ArithmeticSss => "arithmetic",
            TheoremId::CorArithmeticTwo => "cor-arithmetic-two",
            TheoremId::CorMultiplication => "cor-multiplication",
            TheoremId::RatioTwo => "ratio-two",
            TheoremId::Main => "main",
            TheoremId::AstelsExt => "astels-ext",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        match s {
            "cantor" => Ok(TheoremId::Cantor),
            "cor-sum" => Ok(TheoremId::CorSum),
            "cor-interval-two" => Ok(TheoremId::CorIntervalTwo),
            "intersection" => Ok(TheoremId::Intersection),
            "arithmetic" => Ok(TheoremId::ArithmeticSss),
            "cor-arithmetic-two" => Ok(TheoremId::CorArithmeticTwo),
            "cor-multiplication" => Ok(TheoremId::CorMultiplication),
            "ratio-two" => Ok(TheoremId::RatioTwo),
            "main" => Ok(TheoremId::Main),
            "astels-ext" => Ok(TheoremId::AstelsExt),
            other => Err(Error::Usage(format!("unknown theorem id `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Proved,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conclusion {
    /// Certified image of f(K₁,…,K_d) as a finite union of closed intervals.
    Image(IntervalUnion),
    /// Answer to an intersection query.
    Membership(bool),
}

/// Outcome of a checker run. When `status` is `Proved`, every hypothesis
/// slack in `witness` is a nonnegative exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub status: Status,
    pub witness: Vec<(String, Rational)>,
    pub notes: Vec<String>,
    pub conclusion: Option<Conclusion>,
}

impl Verdict {
    fn inconclusive(theorem: TheoremId) -> Verdict {
        Verdict {
            theorem,
            status: Status::Inconclusive,
            witness: Vec::new(),
            notes: Vec::new(),
            conclusion: None,
        }
    }

    pub fn is_proved(&self) -> bool {
        self.status == Status::Proved
    }

    pub fn image(&self) -> Option<&IntervalUnion> {
        match &self.conclusion {
            Some(Conclusion::Image(u)) => Some(u),
            _ => None,
        }
    }

    fn push(&mut self, name: impl Into<String>, value: Rational) {
        self.witness.push((name.into(), value));
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

/// Expression and systems with every partial derivative certified positive
/// over the hull box, after reflecting negative-sign variables.
struct Oriented {
    f: Expr,
    systems: Vec<CantorSystem>,
    hull_box: Vec<Interval>,
    bounds: BoxBounds,
    reflected: Vec<bool>,
}

enum Orientation {
    Definite(Oriented),
    Indefinite { var: usize },
}

fn orient_positive(f: &Expr, systems: &[CantorSystem]) -> Result<Orientation> {
    let hull_box: Vec<Interval> = systems.iter().map(|s| s.hull().clone()).collect();
    validate_dims(f, systems.len())?;
    let bounds = partial_bounds(f, &hull_box)?;
    if let Some(var) = bounds.first_indefinite() {
        return Ok(Orientation::Indefinite { var });
    }
    let mut g = f.clone();
    let mut oriented_systems = Vec::with_capacity(systems.len());
    let mut reflected = vec![false; systems.len()];
    for (i, pb) in bounds.per_var.iter().enumerate() {
        if pb.sign == Sign::Negative {
            let c = hull_box[i].lo() + hull_box[i].hi();
            let replacement = Expr::Sub(Box::new(Expr::constant(c)), Box::new(Expr::Var(i)));
            g = g.substitute(i, &replacement).simplified();
            oriented_systems.push(systems[i].reflected());
            reflected[i] = true;
        } else {
            oriented_systems.push(systems[i].clone());
        }
    }
    let new_bounds = partial_bounds(&g, &hull_box)?;
    if let Some(var) = new_bounds.first_indefinite() {
        // conservative enclosures may fail to recover the sign after
        // substitution; report honestly rather than guessing
        return Ok(Orientation::Indefinite { var });
    }
    debug_assert!(new_bounds
        .per_var
        .iter()
        .all(|pb| pb.sign == Sign::Positive));
    Ok(Orientation::Definite(Oriented {
        f: g,
        systems: oriented_systems,
        hull_box,
        bounds: new_bounds,
        reflected,
    }))
}

fn validate_dims(f: &Expr, d: usize) -> Result<()> {
    if let Some(m) = f.max_var() {
        if m >= d {
            return Err(Error::VarOutOfRange {
                index: m + 1,
                dims: d,
            });
        }
    }
    Ok(())
}

fn mark_indefinite(v: &mut Verdict, var: usize) {
    v.note(format!(
        "partial derivative of x{} has indefinite sign on the hull box",
        var + 1
    ));
}

fn level1_boxes(systems: &[CantorSystem]) -> Result<Vec<Vec<Interval>>> {
    let budget = box_budget();
    systems
        .iter()
        .map(|s| Ok(s.level_set(1, budget)?.parts().to_vec()))
        .collect()
}

/// Nonlinear condition without thickness: per variable i,
/// s_min·Σ_{j≠i}(B_j−A_j)·S_j − κ·(B_i−A_i)·L_i ≥ 0 with positive partials.
/// Proved ⟹ f(K₁,…,K_d) equals its exact first-level image.
pub fn check_thm_cantor(f: &Expr, systems: &[CantorSystem]) -> Result<Verdict> {
    check_cantor_with_id(f, systems, TheoremId::Cantor)
}

fn check_cantor_with_id(f: &Expr, systems: &[CantorSystem], id: TheoremId) -> Result<Verdict> {
    assert!(systems.len() >= 2, "need at least two systems");
    let mut verdict = Verdict::inconclusive(id);
    let oriented = match orient_positive(f, systems)? {
        Orientation::Definite(o) => o,
        Orientation::Indefinite { var } => {
            mark_indefinite(&mut verdict, var);
            return Ok(verdict);
        }
    };
    note_reflections(&mut verdict, &oriented);
    let smin = s_min(&oriented.systems);
    let kap = kappa(&oriented.systems, false)?;
    verdict.push("s_min", smin.clone());
    verdict.push("kappa", kap.clone());

    let widths: Vec<Rational> = oriented.hull_box.iter().map(Interval::length).collect();
    let mut all_ok = true;
    for i in 0..oriented.systems.len() {
        let mut sum = Rational::zero();
        for (j, w) in widths.iter().enumerate() {
            if j != i {
                sum += w * &oriented.bounds.per_var[j].lower_abs;
            }
        }
        let slack = &smin * sum - &kap * &widths[i] * &oriented.bounds.per_var[i].upper_abs;
        if slack.is_negative() {
            all_ok = false;
        }
        verdict.push(format!("slack_x{}", i + 1), slack);
    }
    if all_ok {
        verdict.status = Status::Proved;
        let boxes = level1_boxes(&oriented.systems)?;
        let image = monotone_tuple_union(&oriented.f, &boxes, &oriented.bounds)?;
        verdict.conclusion = Some(Conclusion::Image(image));
    }
    Ok(verdict)
}

fn note_reflections(v: &mut Verdict, o: &Oriented) {
    for (i, r) in o.reflected.iter().enumerate() {
        if *r {
            v.note(format!("x{} reflected about its hull midpoint", i + 1));
        }
    }
}

/// Specialization of the nonlinear condition to f = Σ x_i:
/// s_min·Σ_{j≠i}(B_j−A_j) − κ·(B_i−A_i) ≥ 0. Proved ⟹ the Minkowski sum
/// equals the exact first-level sum union.
pub fn check_cor_sum(systems: &[CantorSystem]) -> Result<Verdict> {
    let f = Expr::sum_of_vars(systems.len());
    check_cantor_with_id(&f, systems, TheoremId::CorSum)
}

/// Two-set interval criterion: the two nonlinear conditions plus the
/// endpoint conditions S_y(B₂−A₂) ≥ L_x·max|G⁽¹⁾| and
/// S_x·min|B⁽¹⁾| ≥ L_y·max|G⁽²⁾|. Proved ⟹ f(K₁,K₂) is one closed interval.
pub fn check_cor_interval_two(
    f: &Expr,
    sys1: &CantorSystem,
    sys2: &CantorSystem,
) -> Result<Verdict> {
    let systems = [sys1.clone(), sys2.clone()];
    let mut verdict = Verdict::inconclusive(TheoremId::CorIntervalTwo);
    let oriented = match orient_positive(f, &systems)? {
        Orientation::Definite(o) => o,
        Orientation::Indefinite { var } => {
            mark_indefinite(&mut verdict, var);
            return Ok(verdict);
        }
    };
    note_reflections(&mut verdict, &oriented);
    let smin = s_min(&oriented.systems);
    let kap = kappa(&oriented.systems, false)?;
    verdict.push("s_min", smin.clone());
    verdict.push("kappa", kap.clone());

    let w1 = oriented.hull_box[0].length();
    let w2 = oriented.hull_box[1].length();
    let sx = &oriented.bounds.per_var[0].lower_abs;
    let lx = &oriented.bounds.per_var[0].upper_abs;
    let sy = &oriented.bounds.per_var[1].lower_abs;
    let ly = &oriented.bounds.per_var[1].upper_abs;

    let gaps1 = oriented.systems[0].first_level_gaps()?;
    let gaps2 = oriented.systems[1].first_level_gaps()?;
    let max_gap = |gaps: &[Interval]| {
        gaps.iter()
            .map(Interval::length)
            .max()
            .unwrap_or_else(Rational::zero)
    };
    let max_g1 = max_gap(&gaps1);
    let max_g2 = max_gap(&gaps2);
    let min_b1 = oriented.systems[0]
        .first_level_bridges()?
        .iter()
        .map(Interval::length)
        .min()
        .expect("at least one bridge");

    let slacks = [
        ("slack_cond1", &smin * &w2 * sy - &kap * &w1 * lx),
        ("slack_cond2", &smin * &w1 * sx - &kap * &w2 * ly),
        ("slack_cond3", sy * &w2 - lx * &max_g1),
        ("slack_cond4", sx * &min_b1 - ly * &max_g2),
    ];
    let all_ok = slacks.iter().all(|(_, s)| !s.is_negative());
    for (name, s) in slacks {
        verdict.push(name, s);
    }
    if all_ok {
        verdict.status = Status::Proved;
        let lo_corner = [
            oriented.hull_box[0].lo().clone(),
            oriented.hull_box[1].lo().clone(),
        ];
        let hi_corner = [
            oriented.hull_box[0].hi().clone(),
            oriented.hull_box[1].hi().clone(),
        ];
        let image = Interval::make(
            oriented.f.eval_point(&lo_corner)?,
            oriented.f.eval_point(&hi_corner)?,
        );
        verdict.conclusion = Some(Conclusion::Image(IntervalUnion::single(image)));
    }
    Ok(verdict)
}

/// Scaled-intersection criterion for hulls [A_i, B_i] with A_i > 0:
/// A₁·s_min·(B₂−A₂) ≥ B₂·κ·(B₁−A₁) and symmetrically. Proved ⟹
/// aK₁ ∩ bK₂ ≠ ∅ exactly when b/a lies in the first-level quotient union.
pub fn check_thm_intersection(
    sys1: &CantorSystem,
    sys2: &CantorSystem,
    a: &Rational,
    b: &Rational,
) -> Result<Verdict> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroScale);
    }
    for (label, s) in [("first", sys1), ("second", sys2)] {
        if !s.hull().lo().is_positive() {
            return Err(Error::InvalidSystem(format!(
                "{label} system must have a strictly positive hull (A > 0)"
            )));
        }
    }
    let systems = [sys1.clone(), sys2.clone()];
    let mut verdict = Verdict::inconclusive(TheoremId::Intersection);
    let smin = s_min(&systems);
    let kap = kappa(&systems, false)?;
    verdict.push("s_min", smin.clone());
    verdict.push("kappa", kap.clone());

    let (a1, b1) = (sys1.hull().lo(), sys1.hull().hi());
    let (a2, b2) = (sys2.hull().lo(), sys2.hull().hi());
    let w1 = sys1.hull().length();
    let w2 = sys2.hull().length();
    let slack1 = a1 * &smin * &w2 - b2 * &kap * &w1;
    let slack2 = a2 * &smin * &w1 - b1 * &kap * &w2;
    verdict.push("slack_1", slack1.clone());
    verdict.push("slack_2", slack2.clone());
    if slack1.is_negative() || slack2.is_negative() {
        return Ok(verdict);
    }
    verdict.status = Status::Proved;
    let budget = box_budget();
    let f1 = sys1.level_set(1, budget)?;
    let f2 = sys2.level_set(1, budget)?;
    let quotient = f1.pointwise(&f2, SetOp::Quotient)?;
    let q = b / a;
    verdict.push("b_over_a", q.clone());
    verdict.conclusion = Some(Conclusion::Membership(quotient.contains_point(&q)));
    Ok(verdict)
}

fn consecutive_overlaps(s: &SelfSimilarSystem) -> Vec<Rational> {
    s.first_level_images()
        .windows(2)
        .map(|w| w[0].hi() - w[1].lo())
        .collect()
}

fn as_self_similar(sys: &CantorSystem) -> &SelfSimilarSystem {
    match sys {
        CantorSystem::SelfSimilar(s) => s,
        CantorSystem::Moran(_) => unreachable!("reflection preserves the system kind"),
    }
}

/// Self-similar criterion with no separation condition: per variable i and
/// consecutive maps k, s_min·Σ_{j≠i}(B_j−A_j)∂_j f + (φ_k(B_i)−φ_{k+1}(A_i))∂_i f ≥ 0
/// in worst-case form. Proved ⟹ exact first-level image.
pub fn check_thm_arithmetic_sss(f: &Expr, systems: &[SelfSimilarSystem]) -> Result<Verdict> {
    check_arithmetic_with_id(f, systems, TheoremId::ArithmeticSss)
}

fn check_arithmetic_with_id(
    f: &Expr,
    systems: &[SelfSimilarSystem],
    id: TheoremId,
) -> Result<Verdict> {
    assert!(systems.len() >= 2, "need at least two systems");
    let wrapped: Vec<CantorSystem> = systems.iter().cloned().map(CantorSystem::from).collect();
    let mut verdict = Verdict::inconclusive(id);
    let oriented = match orient_positive(f, &wrapped)? {
        Orientation::Definite(o) => o,
        Orientation::Indefinite { var } => {
            mark_indefinite(&mut verdict, var);
            return Ok(verdict);
        }
    };
    note_reflections(&mut verdict, &oriented);
    let smin = s_min(&oriented.systems);
    verdict.push("s_min", smin.clone());

    let widths: Vec<Rational> = oriented.hull_box.iter().map(Interval::length).collect();
    let mut all_ok = true;
    for i in 0..oriented.systems.len() {
        let mut base = Rational::zero();
        for (j, w) in widths.iter().enumerate() {
            if j != i {
                base += w * &oriented.bounds.per_var[j].lower_abs;
            }
        }
        base *= &smin;
        let overlaps = consecutive_overlaps(as_self_similar(&oriented.systems[i]));
        let mut min_slack: Option<Rational> = None;
        let mut min_overlap: Option<Rational> = None;
        for ov in &overlaps {
            let weight = if ov.is_negative() {
                &oriented.bounds.per_var[i].upper_abs
            } else {
                &oriented.bounds.per_var[i].lower_abs
            };
            let slack = &base + ov * weight;
            if min_slack.as_ref().is_none_or(|m| &slack < m) {
                min_slack = Some(slack);
            }
            if min_overlap.as_ref().is_none_or(|m| ov < m) {
                min_overlap = Some(ov.clone());
            }
        }
        let slack = min_slack.expect("at least two maps");
        if slack.is_negative() {
            all_ok = false;
        }
        verdict.push(format!("overlap_x{}", i + 1), min_overlap.unwrap());
        verdict.push(format!("slack_x{}", i + 1), slack);
    }
    if all_ok {
        verdict.status = Status::Proved;
        let boxes = level1_boxes(&oriented.systems)?;
        let image = monotone_tuple_union(&oriented.f, &boxes, &oriented.bounds)?;
        verdict.conclusion = Some(Conclusion::Image(image));
    }
    Ok(verdict)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithmeticTwoMode {
    /// Interval conclusion over the full hulls.
    Interval,
    /// Interior conclusion at a candidate cylinder-pair box.
    Interior {
        word1: Vec<usize>,
        word2: Vec<usize>,
    },
}

/// Two-system specialization: interval mode checks the full-box conditions
/// and certifies a single closed interval; interior mode checks the strict
/// conditions with the partials bounded over a candidate cylinder-pair box
/// (which meets K₁ × K₂ by construction) and certifies nonempty interior.
pub fn check_cor_arithmetic_two(
    f: &Expr,
    sys1: &SelfSimilarSystem,
    sys2: &SelfSimilarSystem,
    mode: ArithmeticTwoMode,
) -> Result<Verdict> {
    match mode {
        ArithmeticTwoMode::Interval => {
            let verdict = check_arithmetic_with_id(
                f,
                &[sys1.clone(), sys2.clone()],
                TheoremId::CorArithmeticTwo,
            )?;
            if let Some(Conclusion::Image(u)) = &verdict.conclusion {
                debug_assert_eq!(u.num_parts(), 1, "corollary certifies one interval");
            }
            Ok(verdict)
        }
        ArithmeticTwoMode::Interior { word1, word2 } => {
            check_interior(f, sys1, sys2, &word1, &word2)
        }
    }
}

fn check_interior(
    f: &Expr,
    sys1: &SelfSimilarSystem,
    sys2: &SelfSimilarSystem,
    word1: &[usize],
    word2: &[usize],
) -> Result<Verdict> {
    let mut verdict = Verdict::inconclusive(TheoremId::CorArithmeticTwo);
    let hull_box = [sys1.hull().clone(), sys2.hull().clone()];
    validate_dims(f, 2)?;

    // orientation from the candidate box; reflections conjugate the words
    let small_box = [
        sys1.cylinder(word1)?.hull().clone(),
        sys2.cylinder(word2)?.hull().clone(),
    ];
    let small_bounds = partial_bounds(f, &small_box)?;
    if let Some(var) = small_bounds.first_indefinite() {
        verdict.note(format!(
            "partial derivative of x{} has indefinite sign on the candidate box",
            var + 1
        ));
        return Ok(verdict);
    }

    let mut g = f.clone();
    let mut systems = [sys1.clone(), sys2.clone()];
    let mut words = [word1.to_vec(), word2.to_vec()];
    for i in 0..2 {
        if small_bounds.per_var[i].sign == Sign::Negative {
            let c = hull_box[i].lo() + hull_box[i].hi();
            let replacement = Expr::Sub(Box::new(Expr::constant(c)), Box::new(Expr::Var(i)));
            g = g.substitute(i, &replacement).simplified();
            let count = systems[i].maps().len();
            systems[i] = systems[i].reflected();
            // reflection reverses image order at every level
            words[i] = words[i].iter().map(|&m| count - 1 - m).collect();
            verdict.note(format!("x{} reflected about its hull midpoint", i + 1));
        }
    }
    let small_box = [
        systems[0].cylinder(&words[0])?.hull().clone(),
        systems[1].cylinder(&words[1])?.hull().clone(),
    ];
    let bounds = partial_bounds(&g, &small_box)?;
    if let Some(var) = bounds.first_indefinite() {
        verdict.note(format!(
            "partial derivative of x{} has indefinite sign on the candidate box",
            var + 1
        ));
        return Ok(verdict);
    }

    let smin = systems[0].min_ratio().min(systems[1].min_ratio());
    verdict.push("s_min", smin.clone());
    verdict.push("box1_lo", small_box[0].lo().clone());
    verdict.push("box1_hi", small_box[0].hi().clone());
    verdict.push("box2_lo", small_box[1].lo().clone());
    verdict.push("box2_hi", small_box[1].hi().clone());

    let widths = [hull_box[0].length(), hull_box[1].length()];
    let mut all_ok = true;
    for (i, sys) in systems.iter().enumerate() {
        let other = 1 - i;
        let base = &smin * &widths[other] * &bounds.per_var[other].lower_abs;
        let overlaps = consecutive_overlaps(sys);
        let mut min_slack: Option<Rational> = None;
        for ov in &overlaps {
            let weight = if ov.is_negative() {
                &bounds.per_var[i].upper_abs
            } else {
                &bounds.per_var[i].lower_abs
            };
            let slack = &base + ov * weight;
            if min_slack.as_ref().is_none_or(|m| &slack < m) {
                min_slack = Some(slack);
            }
        }
        let slack = min_slack.expect("at least two maps");
        // interior needs strict positivity
        if !slack.is_positive() {
            all_ok = false;
        }
        verdict.push(format!("slack_x{}", i + 1), slack);
    }
    if all_ok {
        verdict.status = Status::Proved;
        verdict.note("f(K1, K2) contains interior");
    }
    Ok(verdict)
}

/// Product-interior criterion for nonnegative hulls: searches cylinder
/// corner points (x₀, y₀) up to `search_depth` for
/// s_min(B₂−A₂)x₀ + (φ_i(B₁)−φ_{i+1}(A₁))y₀ > 0 and the symmetric family.
/// The search is an ordered enumeration (larger corners first), so verdicts
/// are deterministic.
pub fn check_cor_multiplication(
    sys1: &SelfSimilarSystem,
    sys2: &SelfSimilarSystem,
    search_depth: u32,
) -> Result<Verdict> {
    for (label, s) in [("first", sys1), ("second", sys2)] {
        if s.hull().lo().is_negative() {
            return Err(Error::InvalidSystem(format!(
                "{label} system must have a nonnegative hull (A ≥ 0)"
            )));
        }
    }
    let mut verdict = Verdict::inconclusive(TheoremId::CorMultiplication);
    let smin = sys1.min_ratio().min(sys2.min_ratio());
    verdict.push("s_min", smin.clone());
    verdict.push("search_depth", Rational::from_integer(search_depth.into()));

    let ov1 = consecutive_overlaps(sys1);
    let ov2 = consecutive_overlaps(sys2);
    let w1 = sys1.hull().length();
    let w2 = sys2.hull().length();

    let corners = |s: &SelfSimilarSystem| -> Result<Vec<Rational>> {
        let budget = box_budget();
        let mut out = Vec::new();
        for depth in 0..=search_depth {
            for b in s.level_bridges(depth, budget)? {
                out.push(b.lo().clone());
                out.push(b.hi().clone());
            }
        }
        out.sort();
        out.dedup();
        out.reverse(); // larger corners first
        Ok(out)
    };
    let xs = corners(sys1)?;
    let ys = corners(sys2)?;
    for x0 in &xs {
        for y0 in &ys {
            let ok1 = ov1
                .iter()
                .all(|ov| (&smin * &w2 * x0 + ov * y0).is_positive());
            let ok2 = ov2
                .iter()
                .all(|ov| (&smin * &w1 * y0 + ov * x0).is_positive());
            if ok1 && ok2 {
                verdict.status = Status::Proved;
                verdict.push("x0", x0.clone());
                verdict.push("y0", y0.clone());
                verdict.note("K1 · K2 contains interior");
                return Ok(verdict);
            }
        }
    }
    Ok(verdict)
}

/// Counts gaps of the system with length ≥ threshold, walking bridges until
/// they are too short to contain one (gap lengths shrink geometrically).
fn count_gaps_at_least(sys: &CantorSystem, threshold: &Rational) -> Result<u64> {
    assert!(threshold.is_positive(), "threshold must be positive");
    let mut count = 0u64;
    let mut stack = vec![(sys.hull().clone(), 0u32)];
    while let Some((bridge, level)) = stack.pop() {
        let children = sys.children_of(&bridge, level)?;
        for w in children.windows(2) {
            if w[1].lo() < w[0].hi() {
                return Err(Error::OverlappingImages);
            }
            let gap = w[1].lo() - w[0].hi();
            if &gap >= threshold {
                count += 1;
            }
        }
        for child in children {
            // any gap inside the child is strictly shorter than the child
            if &child.length() > threshold {
                stack.push((child, level + 1));
            }
        }
    }
    Ok(count)
}

/// Extracts the affine coefficients of f on a box when every partial
/// enclosure is a point (constant derivative ⟹ affine on the box).
fn affine_coefficients(bounds: &BoxBounds) -> Option<Vec<Rational>> {
    bounds
        .per_var
        .iter()
        .map(|pb| pb.enclosure.is_point().then(|| pb.enclosure.lo().clone()))
        .collect()
}

fn merge_open_intervals(mut opens: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    opens.retain(|(u, v)| u < v);
    opens.sort();
    let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(opens.len());
    for (u, v) in opens {
        match merged.last_mut() {
            // merge only strictly overlapping opens: touching opens leave
            // their shared endpoint in the image
            Some((_, mv)) if u < *mv => {
                if v > *mv {
                    *mv = v;
                }
            }
            _ => merged.push((u, v)),
        }
    }
    merged
}

/// Ratio criterion 1/τ(K₁) ≤ |∂_x f / ∂_y f| ≤ τ(K₂) in certified form,
/// with the interval-count bound h₁ + v₁ + 1. For affine f the certified
/// image is computed exactly by removing the w-ranges of curves that fit
/// inside a single gap strip.
pub fn check_thm_ratio_two(f: &Expr, sys1: &CantorSystem, sys2: &CantorSystem) -> Result<Verdict> {
    let mut verdict = Verdict::inconclusive(TheoremId::RatioTwo);
    let hull_box = [sys1.hull().clone(), sys2.hull().clone()];
    validate_dims(f, 2)?;
    let bounds = partial_bounds(f, &hull_box)?;
    if let Some(var) = bounds.first_indefinite() {
        mark_indefinite(&mut verdict, var);
        return Ok(verdict);
    }
    let tau1 = thickness(sys1, 1)?;
    let tau2 = thickness(sys2, 1)?;
    verdict.push("tau1_lower", tau1.lower_bound.clone());
    verdict.push("tau2_lower", tau2.lower_bound.clone());
    if !tau1.exact {
        verdict.note("tau1 is a certified lower bound (exactness not established)");
    }
    if !tau2.exact {
        verdict.note("tau2 is a certified lower bound (exactness not established)");
    }
    if tau1.lower_bound.is_zero() || tau2.lower_bound.is_zero() {
        return Ok(verdict);
    }

    let sx = &bounds.per_var[0].lower_abs;
    let lx = &bounds.per_var[0].upper_abs;
    let sy = &bounds.per_var[1].lower_abs;
    let ly = &bounds.per_var[1].upper_abs;
    // 1/τ₁ ≤ S_x/L_y and L_x/S_y ≤ τ₂
    let slack_lower = &tau1.lower_bound * sx - ly;
    let slack_upper = &tau2.lower_bound * sy - lx;
    verdict.push("slack_ratio_lower", slack_lower.clone());
    verdict.push("slack_ratio_upper", slack_upper.clone());
    if slack_lower.is_negative() || slack_upper.is_negative() {
        return Ok(verdict);
    }
    verdict.status = Status::Proved;

    let w1 = hull_box[0].length();
    let w2 = hull_box[1].length();
    // conservative thresholds from the certified ratio bounds
    let h_threshold = &w2 * sy / lx;
    let v_threshold = &w1 * sx / ly;
    let h1 = count_gaps_at_least(sys1, &h_threshold)?;
    let v1 = count_gaps_at_least(sys2, &v_threshold)?;
    verdict.push("h1", Rational::from_integer(h1.into()));
    verdict.push("v1", Rational::from_integer(v1.into()));
    verdict.push(
        "interval_count_bound",
        Rational::from_integer((h1 + v1 + 1).into()),
    );

    if let Some(coefs) = affine_coefficients(&bounds) {
        let image = affine_ratio_image(f, &hull_box, &coefs, sys1, sys2)?;
        verdict.conclusion = Some(Conclusion::Image(image));
    } else {
        verdict.note("non-affine f: certified interval count only, no exact image");
    }
    Ok(verdict)
}

/// Exact image of an affine f over K₁ × K₂ under the ratio criterion: the
/// hull image minus the open w-ranges of curves lying inside one gap strip.
fn affine_ratio_image(
    f: &Expr,
    hull_box: &[Interval; 2],
    coefs: &[Rational],
    sys1: &CantorSystem,
    sys2: &CantorSystem,
) -> Result<IntervalUnion> {
    let (c1, c2) = (&coefs[0], &coefs[1]);
    debug_assert!(!c1.is_zero() && !c2.is_zero());
    let corner =
        |x: &Rational, y: &Rational| -> Result<Rational> { f.eval_point(&[x.clone(), y.clone()]) };
    let corners = [
        corner(hull_box[0].lo(), hull_box[1].lo())?,
        corner(hull_box[0].lo(), hull_box[1].hi())?,
        corner(hull_box[0].hi(), hull_box[1].lo())?,
        corner(hull_box[0].hi(), hull_box[1].hi())?,
    ];
    let hull_lo = corners.iter().min().unwrap().clone();
    let hull_hi = corners.iter().max().unwrap().clone();

    let mut opens: Vec<(Rational, Rational)> = Vec::new();
    // gaps of K₁: strips O_x × [A₂, B₂]
    let m2 = (c2 * hull_box[1].lo()).min(c2 * hull_box[1].hi());
    let big_m2 = (c2 * hull_box[1].lo()).max(c2 * hull_box[1].hi());
    let x_gap_threshold = (&big_m2 - &m2) / c1.abs();
    if x_gap_threshold.is_positive() {
        for gap in collect_gaps_longer(sys1, &x_gap_threshold)? {
            let (ca, cb) = (c1 * gap.lo(), c1 * gap.hi());
            let lo = ca.clone().min(cb.clone()) + &big_m2;
            let hi = ca.max(cb) + &m2;
            opens.push((lo, hi));
        }
    }
    // gaps of K₂: strips [A₁, B₁] × O_y
    let m1 = (c1 * hull_box[0].lo()).min(c1 * hull_box[0].hi());
    let big_m1 = (c1 * hull_box[0].lo()).max(c1 * hull_box[0].hi());
    let y_gap_threshold = (&big_m1 - &m1) / c2.abs();
    if y_gap_threshold.is_positive() {
        for gap in collect_gaps_longer(sys2, &y_gap_threshold)? {
            let (ca, cb) = (c2 * gap.lo(), c2 * gap.hi());
            let lo = ca.clone().min(cb.clone()) + &big_m1;
            let hi = ca.max(cb) + &m1;
            opens.push((lo, hi));
        }
    }
    // the affine offset is already inside the corner values; shift opens by it
    let c0 =
        corner(hull_box[0].lo(), hull_box[1].lo())? - c1 * hull_box[0].lo() - c2 * hull_box[1].lo();
    let opens: Vec<(Rational, Rational)> =
        opens.into_iter().map(|(u, v)| (u + &c0, v + &c0)).collect();

    // consecutive parts are always separated by a nonempty removed open, so
    // normalization merges nothing and shared endpoints of touching opens
    // survive as point parts
    let mut parts = Vec::new();
    let mut cursor = hull_lo;
    for (u, v) in merge_open_intervals(opens) {
        parts.push(Interval::make(cursor, u));
        cursor = v;
    }
    parts.push(Interval::make(cursor, hull_hi));
    Ok(IntervalUnion::normalize(parts))
}

/// Collects gaps with length strictly greater than the threshold.
fn collect_gaps_longer(sys: &CantorSystem, threshold: &Rational) -> Result<Vec<Interval>> {
    let mut out = Vec::new();
    let mut stack = vec![(sys.hull().clone(), 0u32)];
    while let Some((bridge, level)) = stack.pop() {
        let children = sys.children_of(&bridge, level)?;
        for w in children.windows(2) {
            if w[1].lo() < w[0].hi() {
                return Err(Error::OverlappingImages);
            }
            let gap = Interval::make(w[0].hi().clone(), w[1].lo().clone());
            if &gap.length() > threshold {
                out.push(gap);
            }
        }
        for child in children {
            if &child.length() > threshold {
                stack.push((child, level + 1));
            }
        }
    }
    Ok(out)
}

/// Thickness-based criterion: condition (1) L_i ≤ Σ_{j≠i} S_j·τ(K_j), or
/// condition (2) Σ τ(K_i)/(τ(K_i)+r_i) ≥ 1, with certified τ lower bounds.
/// Proved ⟹ the image is a finite union of closed intervals; the reported
/// set is the outer cover at the first depth where covers stabilize
/// (structure-only when no fixed point appears within budget).
pub fn check_thm_main(f: &Expr, systems: &[CantorSystem]) -> Result<Verdict> {
    check_main_with_id(f, systems, TheoremId::Main)
}

fn check_main_with_id(f: &Expr, systems: &[CantorSystem], id: TheoremId) -> Result<Verdict> {
    assert!(systems.len() >= 2, "need at least two systems");
    let mut verdict = Verdict::inconclusive(id);
    let hull_box: Vec<Interval> = systems.iter().map(|s| s.hull().clone()).collect();
    validate_dims(f, systems.len())?;
    let bounds = partial_bounds(f, &hull_box)?;
    if let Some(var) = bounds.first_indefinite() {
        mark_indefinite(&mut verdict, var);
        return Ok(verdict);
    }
    let taus: Vec<Rational> = systems
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let report = thickness(s, 1)?;
            verdict.push(format!("tau{}", i + 1), report.lower_bound.clone());
            if !report.exact {
                verdict.note(format!(
                    "tau{} is a certified lower bound (exactness not established)",
                    i + 1
                ));
            }
            Ok(report.lower_bound)
        })
        .collect::<Result<_>>()?;

    // condition (1)
    let mut cond1 = true;
    let mut min_slack1: Option<Rational> = None;
    for i in 0..systems.len() {
        let mut sum = Rational::zero();
        for (j, tau) in taus.iter().enumerate() {
            if j != i {
                sum += &bounds.per_var[j].lower_abs * tau;
            }
        }
        let slack = sum - &bounds.per_var[i].upper_abs;
        if slack.is_negative() {
            cond1 = false;
        }
        if min_slack1.as_ref().is_none_or(|m| &slack < m) {
            min_slack1 = Some(slack);
        }
    }
    verdict.push("cond1_min_slack", min_slack1.unwrap());

    // condition (2)
    let mut sum = Rational::zero();
    for (i, tau) in taus.iter().enumerate() {
        let r = bounds.per_var[i]
            .ratio()
            .expect("signs definite implies S > 0");
        sum += tau / (tau + r);
    }
    let slack2 = &sum - Rational::one();
    verdict.push("cond2_sum", sum);
    verdict.push("cond2_slack", slack2.clone());
    let cond2 = !slack2.is_negative();

    if !(cond1 || cond2) {
        return Ok(verdict);
    }
    verdict.status = Status::Proved;
    verdict.note(if cond1 && cond2 {
        "conditions (1) and (2) both hold"
    } else if cond1 {
        "condition (1) holds"
    } else {
        "condition (2) holds"
    });

    // fixed-point search for the certified union
    let fixed_point_cap: u64 = 1 << 16;
    let mut prev = outer_cover(f, systems, 1)?;
    let mut found = None;
    for depth in 2..=8u32 {
        let per_level: Result<Vec<Vec<Interval>>> = systems
            .iter()
            .map(|s| Ok(s.level_set(depth, fixed_point_cap)?.parts().to_vec()))
            .collect();
        let per_level = match per_level {
            Ok(p) => p,
            Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        match tuple_count(&per_level) {
            Ok(c) if c <= fixed_point_cap => {}
            _ => break,
        }
        let cur = outer_cover(f, systems, depth)?;
        if cur == prev {
            found = Some((depth - 1, cur));
            break;
        }
        prev = cur;
    }
    match found {
        Some((depth, image)) => {
            verdict.push("fixed_point_depth", Rational::from_integer(depth.into()));
            verdict.conclusion = Some(Conclusion::Image(image));
        }
        None => {
            verdict.note("no cover fixed point within budget; structure-only conclusion");
        }
    }
    Ok(verdict)
}

/// Astels-style multiple-sum criterion Σ τ(K_i)/(τ(K_i)+1) ≥ 1 as the
/// thickness criterion specialized to f = Σ x_i (so every r_i = 1).
pub fn check_cor_astels_ext(systems: &[CantorSystem]) -> Result<Verdict> {
    let f = Expr::sum_of_vars(systems.len());
    check_main_with_id(&f, systems, TheoremId::AstelsExt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;
    use crate::rational::{rat, rat_int};

    fn cantor() -> SelfSimilarSystem {
        SelfSimilarSystem::middle_thirds()
    }

    fn cantor_sys() -> CantorSystem {
        cantor().into()
    }

    /// [2/3, 1] window of C as a standalone system.
    fn cyl2() -> SelfSimilarSystem {
        cantor().cylinder(&[1]).unwrap()
    }

    fn k1_example() -> SelfSimilarSystem {
        SelfSimilarSystem::from_ratios_offsets(&[(rat(1, 4), rat(0, 1)), (rat(1, 4), rat(3, 10))])
            .unwrap()
    }

    fn k_four_map() -> SelfSimilarSystem {
        SelfSimilarSystem::from_ratios_offsets(&[
            (rat(1, 10), rat(0, 1)),
            (rat(1, 10), rat(3, 10)),
            (rat(1, 10), rat(3, 5)),
            (rat(1, 10), rat(9, 10)),
        ])
        .unwrap()
    }

    /// [3/5, 1] window of the λ = 2/5 two-branch system.
    fn lambda25_window() -> SelfSimilarSystem {
        SelfSimilarSystem::two_branch(rat(2, 5))
            .unwrap()
            .cylinder(&[1])
            .unwrap()
    }

    fn witness<'v>(v: &'v Verdict, name: &str) -> &'v Rational {
        &v.witness
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("witness `{name}` missing: {:?}", v.witness))
            .1
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
    fn cantor_checker_on_reciprocal_window() {
        let f = parse_expr("-1/x1 - 1/x2 - 1/x3 - 1/x4", 4).unwrap();
        let systems: Vec<CantorSystem> = (0..4).map(|_| cyl2().into()).collect();
        let v = check_thm_cantor(&f, &systems).unwrap();
        assert!(v.is_proved());
        for i in 1..=4 {
            assert_eq!(witness(&v, &format!("slack_x{i}")), &rat(1, 12));
        }
        assert_eq!(v.image().unwrap(), &union(&[((-6, 1), (-4, 1))]));
    }

    #[test]
    fn cantor_checker_proves_steinhaus_sum() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let v = check_thm_cantor(&f, &[cantor_sys(), cantor_sys()]).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "slack_x1"), &rat_int(0));
        assert_eq!(witness(&v, "s_min"), &rat(1, 3));
        assert_eq!(witness(&v, "kappa"), &rat(1, 3));
        assert_eq!(v.image().unwrap(), &union(&[((0, 1), (2, 1))]));
    }

    #[test]
    fn cantor_checker_inconclusive_on_window_quotient() {
        let f = parse_expr("x1 / x2", 2).unwrap();
        let v = check_thm_cantor(&f, &[cyl2().into(), cyl2().into()]).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        // worst-case slack goes negative: 2/27 − 1/6 = −5/54
        assert_eq!(witness(&v, "slack_x1"), &rat(-5, 54));
    }

    #[test]
    fn cor_sum_examples() {
        let v = check_cor_sum(&[cantor_sys(), cantor_sys()]).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "slack_x1"), &rat_int(0));
        assert_eq!(v.image().unwrap(), &union(&[((0, 1), (2, 1))]));

        let v = check_cor_sum(&[cantor_sys(), cantor_sys(), cantor_sys()]).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "slack_x1"), &rat(1, 3));
        assert_eq!(v.image().unwrap(), &union(&[((0, 1), (3, 1))]));

        // [0, 1/3] window of C against C: the second slack is 1/9 − 1/3 < 0
        let j: CantorSystem = cantor().cylinder(&[0]).unwrap().into();
        let v = check_cor_sum(&[j, cantor_sys()]).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(witness(&v, "slack_x1"), &rat(2, 9));
        assert_eq!(witness(&v, "slack_x2"), &rat(-2, 9));
    }

    #[test]
    fn interval_two_proves_steinhaus_identities() {
        let sum = parse_expr("x1 + x2", 2).unwrap();
        let v = check_cor_interval_two(&sum, &cantor_sys(), &cantor_sys()).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "slack_cond1"), &rat_int(0));
        assert_eq!(witness(&v, "slack_cond3"), &rat(2, 3));
        assert_eq!(witness(&v, "slack_cond4"), &rat_int(0));
        assert_eq!(v.image().unwrap(), &union(&[((0, 1), (2, 1))]));

        let diff = parse_expr("x1 - x2", 2).unwrap();
        let v = check_cor_interval_two(&diff, &cantor_sys(), &cantor_sys()).unwrap();
        assert!(v.is_proved());
        assert!(v.notes.iter().any(|n| n.contains("x2 reflected")));
        assert_eq!(v.image().unwrap(), &union(&[((-1, 1), (1, 1))]));
    }

    #[test]
    fn interval_two_inconclusive_on_mismatched_scales() {
        let sum = parse_expr("x1 + x2", 2).unwrap();
        let v = check_cor_interval_two(&sum, &cantor_sys(), &k1_example().into()).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        // κ is dominated by K₁'s internal gap ratio 1/2
        assert_eq!(witness(&v, "kappa"), &rat(1, 2));
    }

    #[test]
    fn intersection_checker_on_lambda_window() {
        let w: CantorSystem = lambda25_window().into();
        let v = check_thm_intersection(&w, &w, &rat_int(1), &rat_int(1)).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "slack_1"), &rat(2, 125));
        assert_eq!(v.conclusion, Some(Conclusion::Membership(true)));

        let v = check_thm_intersection(&w, &w, &rat_int(1), &rat(4, 5)).unwrap();
        assert_eq!(v.conclusion, Some(Conclusion::Membership(true)));

        // 1/2 is below min(F₁/F₁) = 3/5: certified no intersection
        let v = check_thm_intersection(&w, &w, &rat_int(1), &rat(1, 2)).unwrap();
        assert!(v.is_proved());
        assert_eq!(v.conclusion, Some(Conclusion::Membership(false)));
    }

    #[test]
    fn intersection_checker_rejects_bad_inputs() {
        let w: CantorSystem = lambda25_window().into();
        assert!(matches!(
            check_thm_intersection(&w, &w, &rat_int(0), &rat_int(1)),
            Err(Error::ZeroScale)
        ));
        assert!(check_thm_intersection(&cantor_sys(), &w, &rat_int(1), &rat_int(1)).is_err());
    }

    #[test]
    fn arithmetic_checker_proves_steinhaus() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let v = check_thm_arithmetic_sss(&f, &[cantor(), cantor()]).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "overlap_x1"), &rat(-1, 3));
        assert_eq!(witness(&v, "slack_x1"), &rat_int(0));
        assert_eq!(v.image().unwrap(), &union(&[((0, 1), (2, 1))]));
    }

    /// The two-scale four-map model: overlap −1/5 beats s_min·width = 1/10,
    /// so the checker honestly reports Inconclusive (and indeed the sum of
    /// this system with itself is not an interval).
    #[test]
    fn arithmetic_checker_inconclusive_on_four_map_model() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let v = check_thm_arithmetic_sss(&f, &[k_four_map(), k_four_map()]).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(witness(&v, "overlap_x1"), &rat(-1, 5));
        assert_eq!(witness(&v, "slack_x1"), &rat(-1, 10));
    }

    #[test]
    fn arithmetic_checker_indefinite_product_at_zero() {
        let f = parse_expr("x1 * x2", 2).unwrap();
        let v = check_thm_arithmetic_sss(&f, &[cantor(), cantor()]).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.notes.iter().any(|n| n.contains("indefinite")));
    }

    #[test]
    fn arithmetic_two_interval_mode() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let v = check_cor_arithmetic_two(&f, &cantor(), &cantor(), ArithmeticTwoMode::Interval)
            .unwrap();
        assert!(v.is_proved());
        assert_eq!(v.theorem, TheoremId::CorArithmeticTwo);
        assert_eq!(v.image().unwrap().num_parts(), 1);
    }

    #[test]
    fn arithmetic_two_interior_mode() {
        let f = parse_expr("x1 * x2", 2).unwrap();
        // candidate box [8/9,1]²: slack 8/81 − 9/81 < 0 → Inconclusive
        let v = check_cor_arithmetic_two(
            &f,
            &cyl2(),
            &cyl2(),
            ArithmeticTwoMode::Interior {
                word1: vec![1],
                word2: vec![1],
            },
        )
        .unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(witness(&v, "slack_x1"), &rat(-1, 81));

        // λ = 2/5 window [3/5,1]²: slack 24/250 − 20/250 > 0 → interior
        let v = check_cor_arithmetic_two(
            &f,
            &lambda25_window(),
            &lambda25_window(),
            ArithmeticTwoMode::Interior {
                word1: vec![],
                word2: vec![],
            },
        )
        .unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "slack_x1"), &rat(2, 125));
    }

    #[test]
    fn multiplication_checker() {
        let v = check_cor_multiplication(&lambda25_window(), &lambda25_window(), 1).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "x0"), &rat_int(1));
        assert_eq!(witness(&v, "y0"), &rat_int(1));

        let v = check_cor_multiplication(&cantor(), &cantor(), 2).unwrap();
        assert_eq!(v.status, Status::Inconclusive);

        // touching images: overlap terms vanish and any positive corner works
        let touching = SelfSimilarSystem::from_ratios_offsets(&[
            (rat(1, 2), rat(0, 1)),
            (rat(1, 2), rat(1, 2)),
        ])
        .unwrap();
        let v = check_cor_multiplication(&touching, &touching, 0).unwrap();
        assert!(v.is_proved());
    }

    #[test]
    fn ratio_two_on_equal_cantor_pair() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let v = check_thm_ratio_two(&f, &cantor_sys(), &cantor_sys()).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "h1"), &rat_int(0));
        assert_eq!(witness(&v, "v1"), &rat_int(0));
        assert_eq!(witness(&v, "interval_count_bound"), &rat_int(1));
        assert_eq!(v.image().unwrap(), &union(&[((0, 1), (2, 1))]));
    }

    /// J = [0,1/9] window of C against C: certified image splits into
    /// exactly the two pieces [0,4/9] and [2/3,10/9].
    #[test]
    fn ratio_two_on_ninth_window_sum() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let j: CantorSystem = cantor().cylinder(&[0, 0]).unwrap().into();
        let v = check_thm_ratio_two(&f, &j, &cantor_sys()).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "h1"), &rat_int(0));
        // three gaps of C have length ≥ 1/9: (1/3,2/3), (1/9,2/9), (7/9,8/9)
        assert_eq!(witness(&v, "v1"), &rat_int(3));
        assert_eq!(witness(&v, "interval_count_bound"), &rat_int(4));
        let image = v.image().unwrap();
        assert_eq!(image, &union(&[((0, 1), (4, 9)), ((2, 3), (10, 9))]));
        assert_eq!(image.num_parts(), 2);
    }

    #[test]
    fn ratio_two_inconclusive_on_skewed_sum() {
        let f = parse_expr("x1 + 2*x2", 2).unwrap();
        let v = check_thm_ratio_two(&f, &cantor_sys(), &cantor_sys()).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(witness(&v, "slack_ratio_lower"), &rat_int(-1));
    }

    #[test]
    fn main_checker_on_cantor_pair() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let v = check_thm_main(&f, &[cantor_sys(), cantor_sys()]).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "cond2_sum"), &rat_int(1));
        assert_eq!(witness(&v, "cond2_slack"), &rat_int(0));
        assert_eq!(v.image().unwrap(), &union(&[((0, 1), (2, 1))]));
    }

    #[test]
    fn main_checker_on_reciprocal_window() {
        let f = parse_expr("-1/x1 - 1/x2 - 1/x3 - 1/x4", 4).unwrap();
        let systems: Vec<CantorSystem> = (0..4).map(|_| cyl2().into()).collect();
        let v = check_thm_main(&f, &systems).unwrap();
        assert!(v.is_proved());
        // Σ 1/(1 + 9/4) = 16/13
        assert_eq!(witness(&v, "cond2_sum"), &rat(16, 13));
    }

    #[test]
    fn main_checker_inconclusive_on_four_map_pair() {
        let f = parse_expr("x1 + x2", 2).unwrap();
        let k: CantorSystem = k_four_map().into();
        let v = check_thm_main(&f, &[k.clone(), k]).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(witness(&v, "cond2_sum"), &rat(2, 3));
        assert_eq!(witness(&v, "cond1_min_slack"), &rat(-1, 2));
    }

    #[test]
    fn astels_extension_checker() {
        let v = check_cor_astels_ext(&[cantor_sys(), cantor_sys()]).unwrap();
        assert!(v.is_proved());
        assert_eq!(v.theorem, TheoremId::AstelsExt);

        let v = check_cor_astels_ext(&[cantor_sys(), cantor_sys(), cantor_sys()]).unwrap();
        assert!(v.is_proved());
        assert_eq!(witness(&v, "cond2_sum"), &rat(3, 2));

        let k1: CantorSystem = k1_example().into();
        let v = check_cor_astels_ext(&[k1.clone(), k1]).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(witness(&v, "cond2_sum"), &rat(2, 3));
    }

    /// Shrinking s_min / growing κ can only lose Proved: over the two-branch
    /// family the sum criterion flips exactly at λ = 1/3 (slack 3λ − 1).
    #[test]
    fn sum_criterion_monotone_in_lambda() {
        for (num, den, expect) in [
            (1i64, 4i64, false),
            (3, 10, false),
            (33, 100, false),
            (1, 3, true),
            (2, 5, true),
            (9, 20, true),
        ] {
            let k: CantorSystem = SelfSimilarSystem::two_branch(rat(num, den)).unwrap().into();
            let v = check_cor_sum(&[k.clone(), k]).unwrap();
            assert_eq!(v.is_proved(), expect, "λ = {num}/{den}");
        }
    }

    /// Identical inputs give identical verdicts and witnesses.
    #[test]
    fn verdicts_are_deterministic() {
        let f = parse_expr("-1/x1 - 1/x2 - 1/x3 - 1/x4", 4).unwrap();
        let systems: Vec<CantorSystem> = (0..4).map(|_| cyl2().into()).collect();
        let a = check_thm_cantor(&f, &systems).unwrap();
        let b = check_thm_cantor(&f, &systems).unwrap();
        assert_eq!(a, b);
        let a = check_cor_multiplication(&lambda25_window(), &lambda25_window(), 1).unwrap();
        let b = check_cor_multiplication(&lambda25_window(), &lambda25_window(), 1).unwrap();
        assert_eq!(a, b);
    }

    /// Proved conclusions are sandwich-stable between outer covers.
    #[test]
    fn proved_conclusions_sandwich_between_covers() {
        let cases: Vec<(Expr, Vec<CantorSystem>)> = vec![
            (
                parse_expr("x1 + x2", 2).unwrap(),
                vec![cantor_sys(), cantor_sys()],
            ),
            (
                parse_expr("x1 + x2", 2).unwrap(),
                vec![cantor().cylinder(&[0, 0]).unwrap().into(), cantor_sys()],
            ),
        ];
        for (f, systems) in cases {
            let v = if systems[0].hull().length() == systems[1].hull().length() {
                check_cor_sum(&systems).unwrap()
            } else {
                check_thm_ratio_two(&f, &systems[0], &systems[1]).unwrap()
            };
            let image = v.image().expect("proved with image").clone();
            let outer1 = outer_cover(&f, &systems, 1).unwrap();
            let outer6 = outer_cover(&f, &systems, 6).unwrap();
            assert!(image.is_subset_of(&outer1));
            assert!(outer6.is_subset_of(&image));
        }
    }
}

//! Generators of Cantor sets on the line: self-similar systems (finite lists
//! of increasing affine contractions) and Moran systems (level-refinement
//! rules with declared structural constants).

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalUnion};
use crate::rational::{rat, Rational};
use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

/// x ↦ r·x + a with 0 < r < 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    ratio: Rational,
    offset: Rational,
}

impl AffineMap {
    pub fn new(ratio: Rational, offset: Rational) -> Result<Self> {
        if !ratio.is_positive() || ratio >= Rational::one() {
            return Err(Error::InvalidSystem(format!(
                "similarity ratio {ratio} outside (0, 1)"
            )));
        }
        Ok(AffineMap { ratio, offset })
    }

    pub fn ratio(&self) -> &Rational {
        &self.ratio
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.ratio * x + &self.offset
    }

    pub fn apply_interval(&self, iv: &Interval) -> Interval {
        Interval::make(self.apply(iv.lo()), self.apply(iv.hi()))
    }

    pub fn fixed_point(&self) -> Rational {
        &self.offset / (Rational::one() - &self.ratio)
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            ratio: &self.ratio * &inner.ratio,
            offset: &self.ratio * &inner.offset + &self.offset,
        }
    }
}

/// How the first-level images of a system sit next to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    Disjoint,
    Touching,
    Overlapping,
}

/// A self-similar set given by its IFS, maps ordered by image left endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfSimilarSystem {
    maps: Vec<AffineMap>,
    hull: Interval,
}

impl SelfSimilarSystem {
    pub fn new(mut maps: Vec<AffineMap>) -> Result<Self> {
        if maps.len() < 2 {
            return Err(Error::InvalidSystem(
                "a system needs at least 2 maps".into(),
            ));
        }
        let fixed: Vec<Rational> = maps.iter().map(AffineMap::fixed_point).collect();
        let lo = fixed.iter().min().unwrap().clone();
        let hi = fixed.iter().max().unwrap().clone();
        if lo == hi {
            return Err(Error::InvalidSystem(
                "all maps share one fixed point".into(),
            ));
        }
        let hull = Interval::make(lo, hi);
        maps.sort_by(|p, q| {
            p.apply(hull.lo())
                .cmp(&q.apply(hull.lo()))
                .then_with(|| p.apply(hull.hi()).cmp(&q.apply(hull.hi())))
        });
        Ok(SelfSimilarSystem { maps, hull })
    }

    pub fn from_ratios_offsets(pairs: &[(Rational, Rational)]) -> Result<Self> {
        let maps = pairs
            .iter()
            .map(|(r, a)| AffineMap::new(r.clone(), a.clone()))
            .collect::<Result<Vec<_>>>()?;
        SelfSimilarSystem::new(maps)
    }

    /// The middle-thirds Cantor set C.
    pub fn middle_thirds() -> Self {
        SelfSimilarSystem::from_ratios_offsets(&[(rat(1, 3), rat(0, 1)), (rat(1, 3), rat(2, 3))])
            .expect("valid system")
    }

    /// {λx, λx + 1 − λ} on [0, 1].
    pub fn two_branch(lambda: Rational) -> Result<Self> {
        let one_minus = Rational::one() - &lambda;
        SelfSimilarSystem::from_ratios_offsets(&[
            (lambda.clone(), Rational::zero()),
            (lambda, one_minus),
        ])
    }

    pub fn maps(&self) -> &[AffineMap] {
        &self.maps
    }

    pub fn hull(&self) -> &Interval {
        &self.hull
    }

    pub fn min_ratio(&self) -> Rational {
        self.maps.iter().map(|m| m.ratio().clone()).min().unwrap()
    }

    pub fn max_ratio(&self) -> Rational {
        self.maps.iter().map(|m| m.ratio().clone()).max().unwrap()
    }

    /// First-level images of the hull, in order.
    pub fn first_level_images(&self) -> Vec<Interval> {
        self.maps
            .iter()
            .map(|m| m.apply_interval(&self.hull))
            .collect()
    }

    pub fn separation(&self) -> Separation {
        let images = self.first_level_images();
        let mut state = Separation::Disjoint;
        for w in images.windows(2) {
            if w[1].lo() < w[0].hi() {
                return Separation::Overlapping;
            }
            if w[1].lo() == w[0].hi() {
                state = Separation::Touching;
            }
        }
        state
    }

    /// Gaps between consecutive first-level images (closed representations;
    /// zero-length entries appear where images touch). Errors on overlap.
    pub fn first_level_gaps(&self) -> Result<Vec<Interval>> {
        let images = self.first_level_images();
        let mut gaps = Vec::with_capacity(images.len() - 1);
        for w in images.windows(2) {
            if w[1].lo() < w[0].hi() {
                return Err(Error::OverlappingImages);
            }
            gaps.push(Interval::make(w[0].hi().clone(), w[1].lo().clone()));
        }
        Ok(gaps)
    }

    /// All level-k bridges φ_w(hull), |w| = k, sorted by left endpoint.
    /// Bridges are not merged; overlapping systems are accepted here.
    pub fn level_bridges(&self, k: u32, budget: u64) -> Result<Vec<Interval>> {
        let count = (self.maps.len() as u64).checked_pow(k).unwrap_or(u64::MAX);
        if count > budget {
            return Err(Error::BudgetExceeded {
                needed: count,
                budget,
            });
        }
        let mut bridges = vec![self.hull.clone()];
        for _ in 0..k {
            let mut next = Vec::with_capacity(bridges.len() * self.maps.len());
            for b in &bridges {
                for m in &self.maps {
                    next.push(m.apply_interval(b));
                }
            }
            bridges = next;
        }
        bridges.sort();
        Ok(bridges)
    }

    /// F_k as a normalized union (touching/overlapping images merged).
    pub fn level_set(&self, k: u32, budget: u64) -> Result<IntervalUnion> {
        Ok(IntervalUnion::normalize(self.level_bridges(k, budget)?))
    }

    /// The system whose attractor is φ_word(K): maps conjugated by φ_word.
    /// The empty word returns the system unchanged. Similarity ratios (hence
    /// s_min and gap ratios) are preserved.
    pub fn cylinder(&self, word: &[usize]) -> Result<SelfSimilarSystem> {
        if word.is_empty() {
            return Ok(self.clone());
        }
        let mut composed: Option<AffineMap> = None;
        for &idx in word {
            let m = self
                .maps
                .get(idx)
                .ok_or_else(|| Error::InvalidSystem(format!("map index {idx} out of range")))?;
            composed = Some(match composed {
                None => m.clone(),
                Some(c) => c.compose(m),
            });
        }
        let w = composed.unwrap();
        let r_w = w.ratio();
        let a_w = w.offset();
        // ψ_i = φ_w ∘ φ_i ∘ φ_w⁻¹ has ratio r_i and offset a_w(1 − r_i) + r_w·a_i
        let maps = self
            .maps
            .iter()
            .map(|m| AffineMap {
                ratio: m.ratio().clone(),
                offset: a_w * (Rational::one() - m.ratio()) + r_w * m.offset(),
            })
            .collect();
        SelfSimilarSystem::new(maps)
    }

    /// Mirror image about the hull midpoint: maps r·x + (A+B)(1−r) − a,
    /// re-sorted. The attractor is the reflection of the original attractor.
    pub fn reflected(&self) -> SelfSimilarSystem {
        let c = self.hull.lo() + self.hull.hi();
        let maps = self
            .maps
            .iter()
            .map(|m| AffineMap {
                ratio: m.ratio().clone(),
                offset: &c * (Rational::one() - m.ratio()) - m.offset(),
            })
            .collect();
        SelfSimilarSystem::new(maps).expect("reflection preserves validity")
    }
}

/// Pure refinement function: (bridge, level of the bridge) → sub-bridges.
pub type RefineFn = Arc<dyn Fn(&Interval, u32) -> Vec<Interval> + Send + Sync>;

/// Refinement rule of a Moran system: maps a bridge at level k to its
/// ordered sub-bridges at level k+1.
#[derive(Clone)]
pub enum MoranRule {
    /// Every bridge keeps its left and right end fractions.
    TwoBranch { left: Rational, right: Rational },
    /// Explicit first refinement of the hull, then the two-branch rule.
    StagedTwoBranch {
        first: Vec<Interval>,
        left: Rational,
        right: Rational,
    },
    /// Arbitrary pure rule.
    Custom(RefineFn),
}

impl fmt::Debug for MoranRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoranRule::TwoBranch { left, right } => f
                .debug_struct("TwoBranch")
                .field("left", left)
                .field("right", right)
                .finish(),
            MoranRule::StagedTwoBranch { first, left, right } => f
                .debug_struct("StagedTwoBranch")
                .field("first", first)
                .field("left", left)
                .field("right", right)
                .finish(),
            MoranRule::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

fn two_branch_split(bridge: &Interval, left: &Rational, right: &Rational) -> Vec<Interval> {
    let len = bridge.length();
    vec![
        Interval::make(bridge.lo().clone(), bridge.lo() + left * &len),
        Interval::make(bridge.hi() - right * &len, bridge.hi().clone()),
    ]
}

/// A Moran construction: hull, refinement rule, and declared s_min / κ.
/// The declared constants are validated lazily on every refinement actually
/// expanded; a violation is a hard error.
#[derive(Debug, Clone)]
pub struct MoranSystem {
    hull: Interval,
    rule: MoranRule,
    declared_s_min: Rational,
    declared_kappa: Rational,
}

impl MoranSystem {
    pub fn new(
        hull: Interval,
        rule: MoranRule,
        declared_s_min: Rational,
        declared_kappa: Rational,
    ) -> Result<Self> {
        if hull.is_point() {
            return Err(Error::InvalidSystem(
                "Moran hull must have positive length".into(),
            ));
        }
        if !declared_s_min.is_positive() || declared_s_min >= Rational::one() {
            return Err(Error::InvalidSystem(
                "declared s_min must lie in (0, 1)".into(),
            ));
        }
        if declared_kappa.is_negative() || declared_kappa >= Rational::one() {
            return Err(Error::InvalidSystem("declared κ must lie in [0, 1)".into()));
        }
        Ok(MoranSystem {
            hull,
            rule,
            declared_s_min,
            declared_kappa,
        })
    }

    pub fn hull(&self) -> &Interval {
        &self.hull
    }

    pub fn declared_s_min(&self) -> &Rational {
        &self.declared_s_min
    }

    pub fn declared_kappa(&self) -> &Rational {
        &self.declared_kappa
    }

    /// Applies the rule to a level-`level` bridge and validates the output
    /// against the declared constants.
    pub fn refine(&self, bridge: &Interval, level: u32) -> Result<Vec<Interval>> {
        let subs = match &self.rule {
            MoranRule::TwoBranch { left, right } => two_branch_split(bridge, left, right),
            MoranRule::StagedTwoBranch { first, left, right } => {
                if level == 0 {
                    first.clone()
                } else {
                    two_branch_split(bridge, left, right)
                }
            }
            MoranRule::Custom(f) => f(bridge, level),
        };
        if subs.len() < 2 {
            return Err(Error::MoranViolation(format!(
                "refinement of {bridge} produced {} sub-bridges (need at least 2)",
                subs.len()
            )));
        }
        let len = bridge.length();
        for w in subs.windows(2) {
            if w[1].lo() <= w[0].hi() {
                return Err(Error::MoranViolation(format!(
                    "sub-bridges {} and {} are not strictly disjoint",
                    w[0], w[1]
                )));
            }
            // gaps created at level ≥ 2 are constrained by declared κ
            if level >= 1 {
                let gap = w[1].lo() - w[0].hi();
                if gap > &self.declared_kappa * &len {
                    return Err(Error::MoranViolation(format!(
                        "gap ratio {} exceeds declared κ {}",
                        gap / &len,
                        self.declared_kappa
                    )));
                }
            }
        }
        for s in &subs {
            if !bridge.contains_interval(s) {
                return Err(Error::MoranViolation(format!(
                    "sub-bridge {s} escapes its father {bridge}"
                )));
            }
            if s.length() < &self.declared_s_min * &len {
                return Err(Error::MoranViolation(format!(
                    "bridge ratio {} below declared s_min {}",
                    s.length() / &len,
                    self.declared_s_min
                )));
            }
        }
        Ok(subs)
    }

    pub fn level_bridges(&self, k: u32, budget: u64) -> Result<Vec<Interval>> {
        let mut bridges = vec![self.hull.clone()];
        for level in 0..k {
            let mut next = Vec::with_capacity(bridges.len() * 2);
            for b in &bridges {
                next.extend(self.refine(b, level)?);
                if next.len() as u64 > budget {
                    return Err(Error::BudgetExceeded {
                        needed: next.len() as u64,
                        budget,
                    });
                }
            }
            bridges = next;
        }
        Ok(bridges)
    }

    pub fn level_set(&self, k: u32, budget: u64) -> Result<IntervalUnion> {
        Ok(IntervalUnion::normalize(self.level_bridges(k, budget)?))
    }

    pub fn first_level_gaps(&self) -> Result<Vec<Interval>> {
        let bridges = self.refine(&self.hull, 0)?;
        Ok(bridges
            .windows(2)
            .map(|w| Interval::make(w[0].hi().clone(), w[1].lo().clone()))
            .collect())
    }

    /// Mirror image about the hull midpoint.
    pub fn reflected(&self) -> MoranSystem {
        let hull = self.hull.clone();
        let center = hull.lo() + hull.hi();
        let rule = self.rule.clone();
        let reflected_rule = MoranRule::Custom(Arc::new(move |bridge: &Interval, level: u32| {
            let original = bridge.reflect(&center);
            let subs = match &rule {
                MoranRule::TwoBranch { left, right } => two_branch_split(&original, left, right),
                MoranRule::StagedTwoBranch { first, left, right } => {
                    if level == 0 {
                        first.clone()
                    } else {
                        two_branch_split(&original, left, right)
                    }
                }
                MoranRule::Custom(f) => f(&original, level),
            };
            let mut out: Vec<Interval> = subs.iter().map(|s| s.reflect(&center)).collect();
            out.reverse();
            out
        }));
        MoranSystem {
            hull,
            rule: reflected_rule,
            declared_s_min: self.declared_s_min.clone(),
            declared_kappa: self.declared_kappa.clone(),
        }
    }
}

/// Either kind of Cantor-set generator, with the shared operations.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)] // systems are built once and cloned rarely
pub enum CantorSystem {
    SelfSimilar(SelfSimilarSystem),
    Moran(MoranSystem),
}

impl From<SelfSimilarSystem> for CantorSystem {
    fn from(s: SelfSimilarSystem) -> Self {
        CantorSystem::SelfSimilar(s)
    }
}

impl From<MoranSystem> for CantorSystem {
    fn from(s: MoranSystem) -> Self {
        CantorSystem::Moran(s)
    }
}

impl CantorSystem {
    pub fn hull(&self) -> &Interval {
        match self {
            CantorSystem::SelfSimilar(s) => s.hull(),
            CantorSystem::Moran(s) => s.hull(),
        }
    }

    pub fn level_bridges(&self, k: u32, budget: u64) -> Result<Vec<Interval>> {
        match self {
            CantorSystem::SelfSimilar(s) => s.level_bridges(k, budget),
            CantorSystem::Moran(s) => s.level_bridges(k, budget),
        }
    }

    pub fn level_set(&self, k: u32, budget: u64) -> Result<IntervalUnion> {
        match self {
            CantorSystem::SelfSimilar(s) => s.level_set(k, budget),
            CantorSystem::Moran(s) => s.level_set(k, budget),
        }
    }

    pub fn first_level_gaps(&self) -> Result<Vec<Interval>> {
        match self {
            CantorSystem::SelfSimilar(s) => s.first_level_gaps(),
            CantorSystem::Moran(s) => s.first_level_gaps(),
        }
    }

    pub fn first_level_bridges(&self) -> Result<Vec<Interval>> {
        match self {
            CantorSystem::SelfSimilar(s) => {
                // images may overlap for image work; bridge order is by left endpoint
                Ok(s.first_level_images())
            }
            CantorSystem::Moran(s) => s.refine(s.hull(), 0),
        }
    }

    pub fn reflected(&self) -> CantorSystem {
        match self {
            CantorSystem::SelfSimilar(s) => CantorSystem::SelfSimilar(s.reflected()),
            CantorSystem::Moran(s) => CantorSystem::Moran(s.reflected()),
        }
    }

    /// Sub-bridges of a bridge at the given level. For a self-similar system
    /// the children are the affine copy of the first-level pattern inside
    /// the bridge; for a Moran system the refinement rule is applied.
    pub fn children_of(&self, bridge: &Interval, level: u32) -> Result<Vec<Interval>> {
        match self {
            CantorSystem::SelfSimilar(s) => {
                let hull = s.hull();
                let scale = bridge.length() / hull.length();
                Ok(s.first_level_images()
                    .iter()
                    .map(|img| {
                        let lo = bridge.lo() + &scale * (img.lo() - hull.lo());
                        let hi = bridge.lo() + &scale * (img.hi() - hull.lo());
                        Interval::make(lo, hi)
                    })
                    .collect())
            }
            CantorSystem::Moran(m) => m.refine(bridge, level),
        }
    }

    /// This system's contribution to s_min.
    pub fn min_similarity(&self) -> Rational {
        match self {
            CantorSystem::SelfSimilar(s) => s.min_ratio(),
            CantorSystem::Moran(s) => s.declared_s_min().clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::make(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn hull_of_middle_thirds() {
        let c = SelfSimilarSystem::middle_thirds();
        assert_eq!(c.hull(), &iv((0, 1), (1, 1)));
    }

    #[test]
    fn hull_of_quarter_system() {
        // {x/4, x/4 + 3/10}: hull [0, 2/5] since 0.3/(3/4) = 2/5
        let k1 = SelfSimilarSystem::from_ratios_offsets(&[
            (rat(1, 4), rat(0, 1)),
            (rat(1, 4), rat(3, 10)),
        ])
        .unwrap();
        assert_eq!(k1.hull(), &iv((0, 1), (2, 5)));
    }

    #[test]
    fn hull_formula_instance() {
        let s = SelfSimilarSystem::from_ratios_offsets(&[
            (rat(2, 5), rat(0, 1)),
            (rat(2, 5), rat(3, 5)),
        ])
        .unwrap();
        assert_eq!(s.hull(), &iv((0, 1), (1, 1)));
    }

    #[test]
    fn level_sets_of_cantor() {
        let c = SelfSimilarSystem::middle_thirds();
        let f0 = c.level_set(0, 1 << 20).unwrap();
        assert_eq!(f0.parts(), &[iv((0, 1), (1, 1))]);
        let f1 = c.level_set(1, 1 << 20).unwrap();
        assert_eq!(f1.parts(), &[iv((0, 1), (1, 3)), iv((2, 3), (1, 1))]);
        let f2 = c.level_set(2, 1 << 20).unwrap();
        assert_eq!(
            f2.parts(),
            &[
                iv((0, 1), (1, 9)),
                iv((2, 9), (1, 3)),
                iv((2, 3), (7, 9)),
                iv((8, 9), (1, 1))
            ]
        );
    }

    #[test]
    fn level_sets_nest() {
        let c = SelfSimilarSystem::middle_thirds();
        let budget = 1 << 20;
        for k in 0..5u32 {
            let coarse = c.level_set(k, budget).unwrap();
            let fine = c.level_set(k + 1, budget).unwrap();
            assert!(fine.is_subset_of(&coarse), "F_{} ⊄ F_{}", k + 1, k);
        }
    }

    #[test]
    fn cylinders_of_cantor() {
        let c = SelfSimilarSystem::middle_thirds();
        assert_eq!(c.cylinder(&[1]).unwrap().hull(), &iv((2, 3), (1, 1)));
        assert_eq!(c.cylinder(&[0, 1]).unwrap().hull(), &iv((2, 9), (1, 3)));
        assert_eq!(
            c.cylinder(&[0, 1, 0]).unwrap().hull(),
            &iv((6, 27), (7, 27))
        );
        assert_eq!(c.cylinder(&[]).unwrap(), c);
    }

    #[test]
    fn cylinder_hull_is_composed_map_image() {
        let c = SelfSimilarSystem::middle_thirds();
        let word = [1usize, 0, 1];
        let cyl = c.cylinder(&word).unwrap();
        let mut composed = c.maps()[word[0]].clone();
        for &i in &word[1..] {
            composed = composed.compose(&c.maps()[i]);
        }
        assert_eq!(cyl.hull(), &composed.apply_interval(c.hull()));
    }

    #[test]
    fn level_budget_guard() {
        let c = SelfSimilarSystem::middle_thirds();
        assert!(matches!(
            c.level_bridges(20, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn reflection_mirrors_level_sets() {
        let k1 = SelfSimilarSystem::from_ratios_offsets(&[
            (rat(1, 4), rat(0, 1)),
            (rat(1, 4), rat(3, 10)),
        ])
        .unwrap();
        let r = k1.reflected();
        assert_eq!(r.hull(), k1.hull());
        let f1 = k1.level_set(1, 100).unwrap();
        let g1 = r.level_set(1, 100).unwrap();
        let center = k1.hull().lo() + k1.hull().hi();
        let mirrored =
            IntervalUnion::normalize(f1.parts().iter().map(|p| p.reflect(&center)).collect());
        assert_eq!(g1, mirrored);
    }

    #[test]
    fn moran_two_branch_with_staged_first_level() {
        // hull [0,1] → [0, 2/5] ∪ [3/5, 1], then quarters at every bridge
        let m = MoranSystem::new(
            iv((0, 1), (1, 1)),
            MoranRule::StagedTwoBranch {
                first: vec![iv((0, 1), (2, 5)), iv((3, 5), (1, 1))],
                left: rat(1, 4),
                right: rat(1, 4),
            },
            rat(1, 4),
            rat(1, 2),
        )
        .unwrap();
        let f1 = m.level_set(1, 100).unwrap();
        assert_eq!(f1.parts(), &[iv((0, 1), (2, 5)), iv((3, 5), (1, 1))]);
        let f2 = m.level_set(2, 100).unwrap();
        assert_eq!(
            f2.parts(),
            &[
                iv((0, 1), (1, 10)),
                iv((3, 10), (2, 5)),
                iv((3, 5), (7, 10)),
                iv((9, 10), (1, 1))
            ]
        );
        assert!(f2.is_subset_of(&f1));
    }

    #[test]
    fn moran_declared_constants_validated() {
        // declared s_min too large: the quarter rule violates it on expansion
        let m = MoranSystem::new(
            iv((0, 1), (1, 1)),
            MoranRule::TwoBranch {
                left: rat(1, 4),
                right: rat(1, 4),
            },
            rat(1, 3),
            rat(1, 2),
        )
        .unwrap();
        assert!(matches!(
            m.level_bridges(1, 100),
            Err(Error::MoranViolation(_))
        ));

        // declared κ too small for the internal gaps
        let m = MoranSystem::new(
            iv((0, 1), (1, 1)),
            MoranRule::TwoBranch {
                left: rat(1, 4),
                right: rat(1, 4),
            },
            rat(1, 4),
            rat(1, 3),
        )
        .unwrap();
        assert!(m.level_bridges(1, 100).is_ok()); // first-step gaps are not κ-checked
        assert!(matches!(
            m.level_bridges(2, 100),
            Err(Error::MoranViolation(_))
        ));
    }

    /// Applying any map to the hull endpoints never escapes the hull.
    #[test]
    fn hull_is_invariant_under_every_map() {
        let systems = [
            SelfSimilarSystem::middle_thirds(),
            SelfSimilarSystem::two_branch(rat(2, 5)).unwrap(),
            SelfSimilarSystem::from_ratios_offsets(&[
                (rat(1, 4), rat(0, 1)),
                (rat(1, 4), rat(3, 10)),
            ])
            .unwrap(),
        ];
        for s in systems {
            for m in s.maps() {
                assert!(s.hull().contains_interval(&m.apply_interval(s.hull())));
            }
        }
    }

    #[test]
    fn rejects_degenerate_systems() {
        assert!(AffineMap::new(rat_int(1), rat_int(0)).is_err());
        assert!(AffineMap::new(rat(-1, 2), rat_int(0)).is_err());
        assert!(SelfSimilarSystem::from_ratios_offsets(&[(rat(1, 3), rat(0, 1))]).is_err());
    }
}

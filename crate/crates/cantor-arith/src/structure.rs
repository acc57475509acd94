//! Structural constants of Cantor systems: the minimal similarity ratio
//! s_min, the gap-to-father ratios κ and κ⁺, and Newhouse thickness.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::Rational;
use crate::system::{CantorSystem, SelfSimilarSystem, Separation};
use num::Zero;

/// Minimal bridge-to-father ratio across all systems: map ratios for
/// self-similar systems, the declared value for Moran systems.
pub fn s_min(systems: &[CantorSystem]) -> Rational {
    assert!(!systems.is_empty(), "s_min needs at least one system");
    systems
        .iter()
        .map(CantorSystem::min_similarity)
        .min()
        .unwrap()
}

/// Maximal gap-to-father ratio over the given systems.
///
/// κ (plus = false) ranges over gaps strictly inside the first-level bridges;
/// κ⁺ (plus = true) also admits the first-step gaps. For a self-similar
/// system both equal max first-level gap ÷ hull length, because gap ratios
/// repeat at every level. Moran systems contribute their declared κ, plus
/// the computed first-step ratios when κ⁺ is requested.
pub fn kappa(systems: &[CantorSystem], plus: bool) -> Result<Rational> {
    assert!(!systems.is_empty(), "kappa needs at least one system");
    let mut best = Rational::zero();
    for sys in systems {
        let value = match sys {
            CantorSystem::SelfSimilar(s) => {
                let gaps = s.first_level_gaps()?; // errors on overlap
                let hull_len = s.hull().length();
                gaps.iter()
                    .map(|g| g.length() / &hull_len)
                    .max()
                    .unwrap_or_else(Rational::zero)
            }
            CantorSystem::Moran(m) => {
                let mut v = m.declared_kappa().clone();
                if plus {
                    let hull_len = m.hull().length();
                    for g in m.first_level_gaps()? {
                        let r = g.length() / &hull_len;
                        if r > v {
                            v = r;
                        }
                    }
                }
                v
            }
        };
        if value > best {
            best = value;
        }
    }
    Ok(best)
}

/// Certified information about τ(K).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThicknessReport {
    pub lower_bound: Rational,
    pub exact: bool,
    pub depth_used: u32,
}

/// Level-local thickness data of one refinement pattern: for each gap,
/// min(left bridge, right bridge) / gap, plus the gap lengths themselves.
fn local_ratios(bridges: &[Interval]) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for w in bridges.windows(2) {
        if w[1].lo() < w[0].hi() {
            return Err(Error::OverlappingImages);
        }
        let gap = w[1].lo() - w[0].hi();
        if gap.is_zero() {
            return Err(Error::TouchingImages);
        }
        let side = w[0].length().min(w[1].length());
        out.push(side / gap);
    }
    Ok(out)
}

/// Sound exactness certificate for a self-similar level-1 pattern:
///   (a) min gap ≥ max ratio × max gap, so construction order matches the
///       decreasing-size order across levels;
///   (b) each gap's flanking entities (across its adjacent bridges) are the
///       hull edge or gaps at least as long, so the level-local bridges are
///       exactly the Newhouse bridges when the gap is removed.
/// Under (a)+(b) the level-local infimum equals τ(K).
fn exactness_certificate(s: &SelfSimilarSystem) -> Result<bool> {
    let gaps = s.first_level_gaps()?;
    let lens: Vec<Rational> = gaps.iter().map(Interval::length).collect();
    let min_gap = lens.iter().min().unwrap().clone();
    let max_gap = lens.iter().max().unwrap().clone();
    if min_gap < s.max_ratio() * &max_gap {
        return Ok(false);
    }
    // flank check: gap j is flanked (beyond its adjacent bridges) by
    // gap j−1 / hull edge on the left and gap j+1 / hull edge on the right
    for (j, len) in lens.iter().enumerate() {
        if j > 0 && &lens[j - 1] < len {
            return Ok(false);
        }
        if j + 1 < lens.len() && &lens[j + 1] < len {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Certified lower bound for τ(K), with an exactness certificate when the
/// self-similar ordering conditions hold.
///
/// For a self-similar system the pattern inside every deeper bridge is an
/// affine copy of the first-level pattern, so the level-local gap ratios at
/// every level ≤ depth equal the first-level ones; the minimum over the
/// first level is already the minimum over all levels. For Moran systems
/// the bound combines the expanded first level with the declared-constants
/// floor s_min/κ that covers all deeper gaps.
pub fn thickness(system: &CantorSystem, depth: u32) -> Result<ThicknessReport> {
    assert!(depth >= 1, "thickness needs depth ≥ 1");
    match system {
        CantorSystem::SelfSimilar(s) => {
            match s.separation() {
                Separation::Overlapping => return Err(Error::OverlappingImages),
                Separation::Touching => return Err(Error::TouchingImages),
                Separation::Disjoint => {}
            }
            let bound = local_ratios(&s.first_level_images())?
                .into_iter()
                .min()
                .unwrap();
            let exact = exactness_certificate(s)?;
            Ok(ThicknessReport {
                lower_bound: bound,
                exact,
                depth_used: depth,
            })
        }
        CantorSystem::Moran(m) => {
            let first = m.refine(m.hull(), 0)?;
            let mut bound = local_ratios(&first)?.into_iter().min().unwrap();
            // all gaps at levels ≥ 2 have ratio ≥ s_min/κ by the declared,
            // lazily validated constants
            if !m.declared_kappa().is_zero() {
                let floor = m.declared_s_min() / m.declared_kappa();
                if floor < bound {
                    bound = floor;
                }
            }
            Ok(ThicknessReport {
                lower_bound: bound,
                exact: false,
                depth_used: depth,
            })
        }
    }
}

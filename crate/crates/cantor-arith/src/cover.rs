//! Tuple-box enumeration shared by the theorem checkers and the image
//! engine: exact corner images over per-system box lists, and certified
//! outer covers of f(K₁,…,K_d) at a refinement depth.

use crate::calculus::{monotone_box_image, partial_bounds, BoxBounds};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::interval::{Interval, IntervalUnion};
use crate::system::CantorSystem;

pub const DEFAULT_BOX_BUDGET: u64 = 1 << 24;

/// Box budget for one enumeration call; override with CANTOR_ARITH_BUDGET.
pub fn box_budget() -> u64 {
    std::env::var("CANTOR_ARITH_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BOX_BUDGET)
}

pub(crate) fn tuple_count(per_system: &[Vec<Interval>]) -> Result<u64> {
    let budget = box_budget();
    let mut count: u64 = 1;
    for boxes in per_system {
        count = count
            .checked_mul(boxes.len() as u64)
            .filter(|c| *c <= budget)
            .ok_or(Error::BudgetExceeded {
                needed: u64::MAX,
                budget,
            })?;
    }
    Ok(count)
}

fn for_each_tuple<Fn1>(per_system: &[Vec<Interval>], mut visit: Fn1) -> Result<()>
where
    Fn1: FnMut(&[Interval]) -> Result<()>,
{
    tuple_count(per_system)?;
    let d = per_system.len();
    let mut indices = vec![0usize; d];
    let mut current: Vec<Interval> = per_system.iter().map(|b| b[0].clone()).collect();
    loop {
        visit(&current)?;
        // odometer
        let mut pos = d;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < per_system[pos].len() {
                current[pos] = per_system[pos][indices[pos]].clone();
                break;
            }
            indices[pos] = 0;
            current[pos] = per_system[pos][0].clone();
        }
    }
}

/// Exact union of monotone corner images over every tuple of boxes.
/// Requires definite signs for every variable.
pub(crate) fn monotone_tuple_union(
    f: &Expr,
    per_system: &[Vec<Interval>],
    bounds: &BoxBounds,
) -> Result<IntervalUnion> {
    let mut images = Vec::new();
    for_each_tuple(per_system, |tuple| {
        images.push(monotone_box_image(f, tuple, bounds)?);
        Ok(())
    })?;
    Ok(IntervalUnion::normalize(images))
}

/// Certified outer cover of f(K₁,…,K_d) from the level-`depth` bridges:
/// the true image is contained in the result, and covers shrink as the
/// depth grows. Uses exact corner images when every partial has definite
/// sign over the hull box, interval evaluation per box otherwise.
pub(crate) fn outer_cover(f: &Expr, systems: &[CantorSystem], depth: u32) -> Result<IntervalUnion> {
    let budget = box_budget();
    let per_system: Vec<Vec<Interval>> = systems
        .iter()
        .map(|s| Ok(s.level_set(depth, budget)?.parts().to_vec()))
        .collect::<Result<_>>()?;
    let hull_box: Vec<Interval> = systems.iter().map(|s| s.hull().clone()).collect();
    let bounds = partial_bounds(f, &hull_box)?;
    if bounds.all_definite() {
        monotone_tuple_union(f, &per_system, &bounds)
    } else {
        let mut images = Vec::new();
        for_each_tuple(&per_system, |tuple| {
            images.push(f.eval_interval(tuple)?);
            Ok(())
        })?;
        Ok(IntervalUnion::normalize(images))
    }
}

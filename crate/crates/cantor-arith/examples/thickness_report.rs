//! Structural constants of a few systems: s_min, κ, κ⁺ and certified
//! thickness bounds with exactness certificates.
//!
//! Run with: cargo run --example thickness_report

use cantor_arith::rational::rat;
use cantor_arith::structure::{kappa, s_min, thickness};
use cantor_arith::system::{CantorSystem, MoranRule, MoranSystem, SelfSimilarSystem};
use cantor_arith::Interval;

fn describe(label: &str, sys: &CantorSystem) -> cantor_arith::Result<()> {
    let solo = [sys.clone()];
    println!("{label}");
    println!("  hull  = {}", sys.hull());
    println!("  s_min = {}", s_min(&solo));
    println!(
        "  kappa = {}  kappa+ = {}",
        kappa(&solo, false)?,
        kappa(&solo, true)?
    );
    let t = thickness(sys, 2)?;
    println!(
        "  tau   ≥ {}{}",
        t.lower_bound,
        if t.exact {
            "  (exact)"
        } else {
            "  (lower bound)"
        }
    );
    println!();
    Ok(())
}

fn main() -> cantor_arith::Result<()> {
    describe(
        "middle-thirds Cantor set C",
        &SelfSimilarSystem::middle_thirds().into(),
    )?;

    describe(
        "two-branch system λ = 2/5",
        &SelfSimilarSystem::two_branch(rat(2, 5))?.into(),
    )?;

    describe(
        "quarter system {x/4, x/4 + 0.3}",
        &SelfSimilarSystem::from_ratios_offsets(&[
            (rat(1, 4), rat(0, 1)),
            (rat(1, 4), rat(3, 10)),
        ])?
        .into(),
    )?;

    // the two-scale union K₁ ∪ (K₁ + 3/5) as a Moran system: explicit first
    // refinement, then quarters at every bridge
    let moran = MoranSystem::new(
        Interval::make(rat(0, 1), rat(1, 1)),
        MoranRule::StagedTwoBranch {
            first: vec![
                Interval::make(rat(0, 1), rat(2, 5)),
                Interval::make(rat(3, 5), rat(1, 1)),
            ],
            left: rat(1, 4),
            right: rat(1, 4),
        },
        rat(1, 4),
        rat(1, 2),
    )?;
    describe("two-scale union as a Moran system", &moran.into())?;
    Ok(())
}

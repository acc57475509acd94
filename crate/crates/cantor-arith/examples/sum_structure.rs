//! A sum of Cantor sets that is a union of exactly two intervals:
//! J + C = [0, 4/9] ∪ [2/3, 10/9] for J the [0, 1/9] window of C,
//! certified by the derivative-ratio criterion together with its
//! interval-count bound h₁ + v₁ + 1.
//!
//! Run with: cargo run --example sum_structure

use cantor_arith::expr::parse_expr;
use cantor_arith::image::{image_exact, image_outer};
use cantor_arith::system::{CantorSystem, SelfSimilarSystem};
use cantor_arith::theorems::check_thm_ratio_two;

fn main() -> cantor_arith::Result<()> {
    let c = SelfSimilarSystem::middle_thirds();
    let j: CantorSystem = c.cylinder(&[0, 0])?.into();
    let c: CantorSystem = c.into();
    println!("J = window {} of C", j.hull());

    let f = parse_expr("x1 + x2", 2)?;
    let verdict = check_thm_ratio_two(&f, &j, &c)?;
    println!("ratio criterion: {:?}", verdict.status);
    for (name, value) in &verdict.witness {
        println!("  {name} = {value}");
    }
    let image = image_exact(&verdict)?;
    println!("certified J + C = {}", image.set);

    // outer covers shrink onto the certified set
    for depth in [1, 3, 5] {
        let cover = image_outer(&f, &[j.clone(), c.clone()], depth)?;
        println!(
            "  cover at depth {depth}: {} parts, inside certified set: {}",
            cover.set.num_parts(),
            cover.set.is_subset_of(&image.set)
        );
    }
    Ok(())
}

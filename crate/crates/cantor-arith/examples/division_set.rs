//! The division set C ÷ C as a union of scaled copies of [2/3, 3/2]:
//! truncated pieces, their disjointness, and the closed-form match.
//!
//! Run with: cargo run --example division_set

use cantor_arith::apps::verify_division_set;
use cantor_arith::image::quotient_closed_form;
use cantor_arith::rational::rat;

fn main() -> cantor_arith::Result<()> {
    let report = verify_division_set(4)?;
    print!("{}", report.render_text());

    println!();
    println!("closed form pieces for λ straddling the disjointness threshold:");
    for lambda in [
        rat(38, 100),
        rat(381965, 1000000),
        rat(381967, 1000000),
        rat(2, 5),
    ] {
        let q = quotient_closed_form(&lambda, -1, 1)?;
        println!(
            "  λ = {}: {} ({} parts, {})",
            lambda,
            q.pieces,
            q.pieces.num_parts(),
            if q.disjoint {
                "disjoint regime"
            } else {
                "merged regime"
            }
        );
    }
    Ok(())
}

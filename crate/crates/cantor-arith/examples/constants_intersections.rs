//! Certified nonempty intersections of scaled copies of the two-branch
//! attractor K at λ = 1/3: e·K ∩ π·K, e·K ∩ K, π·K ∩ K, √2·K ∩ K, decided
//! through 128-bit constant enclosures and the quotient closed form.
//!
//! Run with: cargo run --example constants_intersections

use cantor_arith::apps::constants_intersections;
use cantor_arith::enclosure::{constant_enclosure, ConstantName};
use cantor_arith::rational::rat;

fn main() -> cantor_arith::Result<()> {
    for name in [ConstantName::E, ConstantName::Pi, ConstantName::Sqrt2] {
        let e = constant_enclosure(name, 128)?;
        println!("{name:?} enclosure at 128 bits: {}", e.value());
    }
    println!();
    let report = constants_intersections(&rat(1, 3))?;
    print!("{}", report.render_text());
    Ok(())
}

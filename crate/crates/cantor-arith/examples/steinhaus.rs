//! Prove C + C = [0, 2] and C − C = [−1, 1] for the middle-thirds Cantor
//! set, with exact slack witnesses.
//!
//! Run with: cargo run --example steinhaus

use cantor_arith::expr::parse_expr;
use cantor_arith::image::image_exact;
use cantor_arith::system::{CantorSystem, SelfSimilarSystem};
use cantor_arith::theorems::check_cor_interval_two;

fn main() -> cantor_arith::Result<()> {
    let c: CantorSystem = SelfSimilarSystem::middle_thirds().into();

    for text in ["x1 + x2", "x1 - x2"] {
        let f = parse_expr(text, 2)?;
        let verdict = check_cor_interval_two(&f, &c, &c)?;
        println!("f = {text}");
        println!("  status: {:?}", verdict.status);
        for (name, value) in &verdict.witness {
            println!("  {name} = {value}");
        }
        let image = image_exact(&verdict)?;
        println!("  certified image: {}", image.set);
        println!();
    }
    Ok(())
}

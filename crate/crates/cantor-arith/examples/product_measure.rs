//! Outer Lebesgue-measure bounds for the product set C·C at increasing
//! refinement depths, plus an SVG rendering of the shrinking covers.
//!
//! Run with: cargo run --example product_measure
//! (writes cc_covers.svg into the working directory)

use cantor_arith::expr::parse_expr;
use cantor_arith::image::image_outer;
use cantor_arith::rational::decimal_string;
use cantor_arith::svg::render_rows;
use cantor_arith::system::{CantorSystem, SelfSimilarSystem};

fn main() -> cantor_arith::Result<()> {
    let c: CantorSystem = SelfSimilarSystem::middle_thirds().into();
    let systems = [c.clone(), c];
    let f = parse_expr("x1 * x2", 2)?;

    let mut rows = Vec::new();
    for depth in 0..=6 {
        let cover = image_outer(&f, &systems, depth)?;
        let measure = cover.set.measure();
        println!(
            "depth {depth}: measure = {measure} ≈ {} ({} parts)",
            decimal_string(&measure, 12),
            cover.set.num_parts()
        );
        rows.push((format!("depth {depth}"), cover.set));
    }

    let svg = render_rows(&rows);
    std::fs::write("cc_covers.svg", &svg).expect("write svg");
    println!("wrote cc_covers.svg");
    Ok(())
}

//! Fermat-equation solution families on the two-branch λ system:
//! admissible α ranges of the solution bracket, 2^(1/n) containment for the
//! x = y family, and the λ-scaling closure.
//!
//! Run with: cargo run --example fermat_solutions

use cantor_arith::apps::{fermat_alpha_ranges, fermat_solution_family};
use cantor_arith::rational::rat;

fn main() -> cantor_arith::Result<()> {
    let lambda = rat(1, 3);
    for (n, k) in [(2u32, 0i64), (3, 0), (2, 1), (5, 0)] {
        let b = fermat_alpha_ranges(&lambda, n, k)?;
        println!("n = {n}, k = {k}:");
        println!("  y = (1+α)x line: α ∈ {}", b.line1);
        println!("  x = (1+α)y line: α ∈ {}", b.line2);
    }
    println!();
    let report = fermat_solution_family(&lambda, 10, 3)?;
    print!("{}", report.render_text());
    Ok(())
}

//! Shared helpers for the integration test binaries.

use cantor_arith::expr::Expr;
use cantor_arith::rational::{rat, rat_int};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random tame expressions: sums, differences, products, small powers, and
/// reciprocals bounded away from zero on the sample box [1, 2]^d.
pub fn random_expr(rng: &mut ChaCha8Rng, dims: usize, depth: u32) -> Expr {
    if depth == 0 {
        return if rng.gen_bool(0.7) {
            Expr::var(rng.gen_range(0..dims))
        } else {
            Expr::constant(rat(rng.gen_range(1..=4), rng.gen_range(1..=3)))
        };
    }
    match rng.gen_range(0..6) {
        0 => Expr::Add(
            Box::new(random_expr(rng, dims, depth - 1)),
            Box::new(random_expr(rng, dims, depth - 1)),
        ),
        1 => Expr::Sub(
            Box::new(random_expr(rng, dims, depth - 1)),
            Box::new(random_expr(rng, dims, depth - 1)),
        ),
        2 | 3 => Expr::Mul(
            Box::new(random_expr(rng, dims, depth - 1)),
            Box::new(random_expr(rng, dims, depth - 1)),
        ),
        4 => Expr::Pow(
            Box::new(random_expr(rng, dims, depth - 1)),
            rng.gen_range(2..=3),
        ),
        _ => Expr::Div(
            Box::new(random_expr(rng, dims, depth - 1)),
            Box::new(Expr::Add(
                Box::new(Expr::var(rng.gen_range(0..dims))),
                Box::new(Expr::constant(rat_int(rng.gen_range(2..=4)))),
            )),
        ),
    }
}

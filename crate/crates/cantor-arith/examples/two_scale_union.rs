//! A cautionary example: the two-scale union K = K₁ ∪ (K₁ + 3/5), where
//! K₁ is the attractor of {x/4, x/4 + 3/10}, has thickness exactly 1/2,
//! yet K + K is NOT an interval — the certified outer cover misses
//! (1/5, 3/10). Every sufficient criterion in the crate is (necessarily)
//! Inconclusive here: for an identical pair, a proved sum criterion forces
//! τ ≥ 1.
//!
//! Run with: cargo run --example two_scale_union

use cantor_arith::apps::two_scale_four_map;
use cantor_arith::expr::parse_expr;
use cantor_arith::image::image_outer;
use cantor_arith::rational::rat;
use cantor_arith::structure::thickness;
use cantor_arith::system::CantorSystem;
use cantor_arith::theorems::{check_cor_astels_ext, check_thm_arithmetic_sss, check_thm_main};

fn main() -> cantor_arith::Result<()> {
    let k = two_scale_four_map();
    let k_sys: CantorSystem = k.clone().into();

    let tau = thickness(&k_sys, 2)?;
    println!(
        "tau(K) = {} ({})",
        tau.lower_bound,
        if tau.exact { "exact" } else { "lower bound" }
    );

    let f = parse_expr("x1 + x2", 2)?;
    let arithmetic = check_thm_arithmetic_sss(&f, &[k.clone(), k])?;
    println!("self-similar sum criterion: {:?}", arithmetic.status);
    let main = check_thm_main(&f, &[k_sys.clone(), k_sys.clone()])?;
    println!("thickness criterion:        {:?}", main.status);
    let astels = check_cor_astels_ext(&[k_sys.clone(), k_sys.clone()])?;
    println!("Astels-style criterion:     {:?}", astels.status);

    let cover = image_outer(&f, &[k_sys.clone(), k_sys], 1)?;
    println!("certified cover of K + K: {}", cover.set);
    println!(
        "1/4 in the cover: {} — K + K is not an interval",
        cover.set.contains_point(&rat(1, 4))
    );
    Ok(())
}

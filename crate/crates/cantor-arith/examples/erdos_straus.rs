//! The four-reciprocal cover: 1/C + 1/C + 1/C + 1/C ⊇ [4, 3^m·6] as a
//! single interval, assembled from six certified cylinder windows plus the
//! x ↦ x/3 scaling chain, with the sharpness gaps for two and three terms.
//!
//! Run with: cargo run --example erdos_straus -- [m]

use cantor_arith::apps::erdos_straus_cover;

fn main() -> cantor_arith::Result<()> {
    let m = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let report = erdos_straus_cover(m)?;
    print!("{}", report.render_text());
    std::process::exit(if report.pass { 0 } else { 1 });
}

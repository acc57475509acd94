//! Static SVG rendering of interval unions, one horizontal bar row per
//! labeled union. Display aid only; coordinates are computed in exact
//! rationals and printed as short decimals.

use crate::interval::IntervalUnion;
use crate::rational::{decimal_string, Rational};
use num::Zero;

const WIDTH: i64 = 800;
const ROW_HEIGHT: i64 = 26;
const BAR_HEIGHT: i64 = 12;
const MARGIN: i64 = 40;

pub fn render_rows(rows: &[(String, IntervalUnion)]) -> String {
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (_, u) in rows {
        if let Some(h) = u.hull() {
            lo = Some(match lo {
                Some(v) => v.min(h.lo().clone()),
                None => h.lo().clone(),
            });
            hi = Some(match hi {
                Some(v) => v.max(h.hi().clone()),
                None => h.hi().clone(),
            });
        }
    }
    let (lo, hi) = match (lo, hi) {
        (Some(a), Some(b)) if a != b => (a, b),
        (Some(a), _) => (a.clone(), a + Rational::from_integer(1.into())),
        _ => (Rational::zero(), Rational::from_integer(1.into())),
    };
    let span = &hi - &lo;
    let scale = Rational::from_integer((WIDTH - 2 * MARGIN).into()) / span;

    let height = rows.len() as i64 * ROW_HEIGHT + 2 * MARGIN;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{height}\" \
         viewBox=\"0 0 {WIDTH} {height}\">\n"
    );
    for (i, (label, u)) in rows.iter().enumerate() {
        let y = MARGIN + i as i64 * ROW_HEIGHT;
        out.push_str(&format!(
            "  <text x=\"4\" y=\"{}\" font-size=\"11\" font-family=\"monospace\">{}</text>\n",
            y + BAR_HEIGHT,
            xml_escape(label)
        ));
        for p in u.parts() {
            let x = Rational::from_integer(MARGIN.into()) + (p.lo() - &lo) * &scale;
            let w = p.length() * &scale;
            out.push_str(&format!(
                "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{BAR_HEIGHT}\" fill=\"#3465a4\"/>\n",
                decimal_string(&x, 6),
                y,
                // degenerate points still get a visible sliver
                decimal_string(&w.max(Rational::new(1.into(), 2.into())), 6),
            ));
        }
    }
    out.push_str(&format!(
        "  <text x=\"{MARGIN}\" y=\"{}\" font-size=\"10\">{}</text>\n",
        height - 8,
        decimal_string(&lo, 6)
    ));
    out.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{}</text>\n",
        WIDTH - MARGIN,
        height - 8,
        decimal_string(&hi, 6)
    ));
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

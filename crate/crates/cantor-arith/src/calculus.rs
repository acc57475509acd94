//! Certified bounds on partial derivatives over boxes, and exact images of
//! boxes under coordinatewise-monotone functions.
//!
//! L_i and S_i come from interval enclosures of the symbolic derivatives, so
//! they are valid outer/inner bounds — possibly conservative, never unsound.

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::interval::Interval;
use crate::rational::Rational;
use num::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
    Indefinite,
}

/// Certified data about one partial derivative over a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialBound {
    /// Interval enclosure of ∂f/∂x_i over the box.
    pub enclosure: Interval,
    pub sign: Sign,
    /// S_i: lower bound on |∂f/∂x_i|; zero when the sign is indefinite.
    pub lower_abs: Rational,
    /// L_i: upper bound on |∂f/∂x_i|.
    pub upper_abs: Rational,
}

impl PartialBound {
    pub fn is_definite(&self) -> bool {
        self.sign != Sign::Indefinite
    }

    /// r_i = L_i / S_i, defined only for definite signs.
    pub fn ratio(&self) -> Option<Rational> {
        self.is_definite()
            .then(|| &self.upper_abs / &self.lower_abs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxBounds {
    pub per_var: Vec<PartialBound>,
}

impl BoxBounds {
    pub fn all_definite(&self) -> bool {
        self.per_var.iter().all(PartialBound::is_definite)
    }

    pub fn first_indefinite(&self) -> Option<usize> {
        self.per_var.iter().position(|p| !p.is_definite())
    }
}

/// Encloses every ∂f/∂x_i over the box. The sign is definite exactly when
/// the enclosure excludes 0.
pub fn partial_bounds(f: &Expr, box_: &[Interval]) -> Result<BoxBounds> {
    assert!(!box_.is_empty(), "box must be nonempty");
    let mut per_var = Vec::with_capacity(box_.len());
    for i in 0..box_.len() {
        let derivative = f.differentiate(i);
        let enclosure = derivative.eval_interval(box_)?;
        let (sign, lower_abs, upper_abs) = if enclosure.lo().is_positive() {
            (
                Sign::Positive,
                enclosure.lo().clone(),
                enclosure.hi().clone(),
            )
        } else if enclosure.hi().is_negative() {
            (
                Sign::Negative,
                -enclosure.hi().clone(),
                -enclosure.lo().clone(),
            )
        } else {
            let upper = enclosure.lo().abs().max(enclosure.hi().abs());
            (Sign::Indefinite, Rational::zero(), upper)
        };
        per_var.push(PartialBound {
            enclosure,
            sign,
            lower_abs,
            upper_abs,
        });
    }
    Ok(BoxBounds { per_var })
}

/// Exact image [f(c⁻), f(c⁺)] of a box under a coordinatewise-monotone f:
/// the corner c⁻ takes the lower endpoint where the partial is positive and
/// the upper endpoint where it is negative; c⁺ is the opposite corner.
/// Refuses when any sign is indefinite.
pub fn monotone_box_image(f: &Expr, box_: &[Interval], bounds: &BoxBounds) -> Result<Interval> {
    assert_eq!(box_.len(), bounds.per_var.len());
    if let Some(i) = bounds.first_indefinite() {
        return Err(Error::IndefiniteSign(i + 1));
    }
    let mut lo_corner = Vec::with_capacity(box_.len());
    let mut hi_corner = Vec::with_capacity(box_.len());
    for (iv, pb) in box_.iter().zip(&bounds.per_var) {
        match pb.sign {
            Sign::Positive => {
                lo_corner.push(iv.lo().clone());
                hi_corner.push(iv.hi().clone());
            }
            Sign::Negative => {
                lo_corner.push(iv.hi().clone());
                hi_corner.push(iv.lo().clone());
            }
            Sign::Indefinite => unreachable!(),
        }
    }
    Interval::new(f.eval_point(&lo_corner)?, f.eval_point(&hi_corner)?)
}

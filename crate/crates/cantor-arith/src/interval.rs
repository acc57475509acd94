//! Closed rational intervals and normalized finite unions of them.
//!
//! `IntervalUnion` is the canonical representation of every computed set:
//! parts are sorted, pairwise disjoint and non-touching (touching parts are
//! merged on construction, since all sets here are closed). Degenerate
//! point intervals are allowed.

use crate::error::{Error, Result};
use crate::rational::{decimal_string, rational_string, Rational};
use num::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: rational_string(&lo),
                hi: rational_string(&hi),
            });
        }
        Ok(Interval { lo, hi })
    }

    /// Panicking constructor for endpoints known to be ordered.
    pub fn make(lo: Rational, hi: Rational) -> Self {
        Interval::new(lo, hi).expect("interval endpoints out of order")
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Intersection, or None when disjoint. Touching intervals intersect in a point.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// Exact image of the product set {xy}. Handles zero-straddling factors.
    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Exact image of {x/y}; errors when the divisor contains 0.
    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::DivisorContainsZero);
        }
        let recip = Interval {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        };
        Ok(self.mul(&recip))
    }

    /// Exact image of {x^n}; n may be negative when 0 is excluded.
    pub fn pow(&self, n: i64) -> Result<Interval> {
        if n == 0 {
            return Ok(Interval::point(Rational::from_integer(1.into())));
        }
        if n < 0 {
            let one = Interval::point(Rational::from_integer(1.into()));
            return one.div(&self.pow(-n)?);
        }
        let e = n as u32;
        let pl = Rational::new(self.lo.numer().pow(e), self.lo.denom().pow(e));
        let ph = Rational::new(self.hi.numer().pow(e), self.hi.denom().pow(e));
        if n % 2 == 1 {
            return Ok(Interval { lo: pl, hi: ph });
        }
        // even power
        if !self.lo.is_negative() {
            Ok(Interval { lo: pl, hi: ph })
        } else if self.hi.is_negative() || self.hi.is_zero() {
            Ok(Interval { lo: ph, hi: pl })
        } else {
            Ok(Interval {
                lo: Rational::zero(),
                hi: pl.max(ph),
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        assert!(!c.is_zero(), "scale factor must be nonzero");
        let a = c * &self.lo;
        let b = c * &self.hi;
        if c.is_positive() {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn translate(&self, t: &Rational) -> Interval {
        Interval {
            lo: &self.lo + t,
            hi: &self.hi + t,
        }
    }

    /// x ↦ c − x.
    pub fn reflect(&self, c: &Rational) -> Interval {
        Interval {
            lo: c - &self.hi,
            hi: c - &self.lo,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            rational_string(&self.lo),
            rational_string(&self.hi)
        )
    }
}

/// Pointwise set operations lifted to unions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Sum,
    Diff,
    Product,
    Quotient,
}

/// Normalized finite union of closed intervals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalUnion {
    parts: Vec<Interval>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        IntervalUnion { parts: Vec::new() }
    }

    /// Canonical constructor: sorts, merges overlapping and touching parts.
    /// Set equality of point sets is preserved.
    pub fn normalize(mut intervals: Vec<Interval>) -> Self {
        intervals.sort();
        let mut parts: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match parts.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => parts.push(iv),
            }
        }
        IntervalUnion { parts }
    }

    pub fn single(iv: Interval) -> Self {
        IntervalUnion { parts: vec![iv] }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Total length (Lebesgue measure) of the union, exactly.
    pub fn measure(&self) -> Rational {
        self.parts
            .iter()
            .map(Interval::length)
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Bounded complementary intervals between consecutive parts, reported as
    /// their closures. Unbounded components are not included.
    pub fn gaps(&self) -> Vec<Interval> {
        self.parts
            .windows(2)
            .map(|w| Interval::make(w[0].hi.clone(), w[1].lo.clone()))
            .collect()
    }

    /// Smallest closed interval containing the union (None when empty).
    pub fn hull(&self) -> Option<Interval> {
        match (self.parts.first(), self.parts.last()) {
            (Some(a), Some(b)) => Some(Interval::make(a.lo.clone(), b.hi.clone())),
            _ => None,
        }
    }

    pub fn contains_point(&self, x: &Rational) -> bool {
        self.parts
            .binary_search_by(|p| {
                if p.hi < *x {
                    std::cmp::Ordering::Less
                } else if p.lo > *x {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    pub fn contains_interval(&self, iv: &Interval) -> bool {
        // parts are separated, so a connected set fits inside a single part
        self.parts.iter().any(|p| p.contains_interval(iv))
    }

    pub fn is_subset_of(&self, other: &IntervalUnion) -> bool {
        self.parts.iter().all(|p| other.contains_interval(p))
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut all = self.parts.clone();
        all.extend(other.parts.iter().cloned());
        IntervalUnion::normalize(all)
    }

    pub fn intersect(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut out = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                if let Some(c) = a.intersect(b) {
                    out.push(c);
                }
            }
        }
        IntervalUnion::normalize(out)
    }

    /// Exact image of the product set under a pointwise arithmetic operation.
    /// Exact because every part is a full interval.
    pub fn pointwise(&self, other: &IntervalUnion, op: SetOp) -> Result<IntervalUnion> {
        if op == SetOp::Quotient {
            if let Some(p) = other.parts.iter().find(|p| p.contains_zero()) {
                let _ = p;
                return Err(Error::DivisorContainsZero);
            }
        }
        let mut out = Vec::with_capacity(self.parts.len() * other.parts.len());
        for a in &self.parts {
            for b in &other.parts {
                out.push(match op {
                    SetOp::Sum => a.add(b),
                    SetOp::Diff => a.sub(b),
                    SetOp::Product => a.mul(b),
                    SetOp::Quotient => a.div(b)?,
                });
            }
        }
        Ok(IntervalUnion::normalize(out))
    }

    pub fn scale(&self, c: &Rational) -> IntervalUnion {
        IntervalUnion::normalize(self.parts.iter().map(|p| p.scale(c)).collect())
    }

    pub fn translate(&self, t: &Rational) -> IntervalUnion {
        IntervalUnion {
            parts: self.parts.iter().map(|p| p.translate(t)).collect(),
        }
    }

    /// Complement within `within`, as a closed union (closures of the open
    /// complement components).
    pub fn complement_within(&self, within: &Interval) -> IntervalUnion {
        let mut out = Vec::new();
        let mut cursor = within.lo.clone();
        for p in &self.parts {
            if p.lo > cursor && p.lo <= within.hi {
                out.push(Interval::make(
                    cursor.clone(),
                    p.lo.clone().min(within.hi.clone()),
                ));
            }
            if p.hi > cursor {
                cursor = p.hi.clone();
            }
            if cursor >= within.hi {
                break;
            }
        }
        if cursor < within.hi {
            out.push(Interval::make(cursor, within.hi.clone()));
        }
        IntervalUnion::normalize(out)
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let rendered: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join(" ∪ "))
    }
}

/// Decimal rendering of a union for human-facing output (non-normative).
pub fn union_decimal(u: &IntervalUnion, sig: usize) -> String {
    if u.is_empty() {
        return "∅".to_string();
    }
    let rendered: Vec<String> = u
        .parts()
        .iter()
        .map(|p| {
            format!(
                "[{}, {}]",
                decimal_string(p.lo(), sig),
                decimal_string(p.hi(), sig)
            )
        })
        .collect();
    rendered.join(" ∪ ")
}

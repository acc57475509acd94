//! Certified rational enclosures of irrational values: n-th roots and the
//! named constants e, π, √2.
//!
//! Roots are bracketed by an exact integer n-th root of a scaled integer, so
//! the returned interval provably contains the true value with width at most
//! 2^(−precision_bits) · max(1, |lo|). Constants use series with certified
//! tail bounds. Everything stays in exact rational arithmetic.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{rational_string, Rational};
use num::{BigInt, One, Signed, Zero};

pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// A rational interval certified to contain an irrational value, together
/// with the precision it was requested at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    value: Interval,
    precision_bits: u32,
}

impl Enclosure {
    fn checked(value: Interval, precision_bits: u32) -> Self {
        debug_assert!(
            value.length() <= width_bound(&value, precision_bits),
            "enclosure width invariant violated"
        );
        Enclosure {
            value,
            precision_bits,
        }
    }

    pub fn value(&self) -> &Interval {
        &self.value
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn is_point(&self) -> bool {
        self.value.is_point()
    }
}

fn width_bound(value: &Interval, precision_bits: u32) -> Rational {
    let unit = Rational::new(BigInt::one(), BigInt::one() << precision_bits);
    let anchor = value.lo().abs().max(Rational::one());
    unit * anchor
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Certified enclosure of x^(1/n) for x ≥ 0. Exact point interval when x is
/// a perfect n-th power of a rational.
pub fn root_enclosure(x: &Rational, n: u32, precision_bits: u32) -> Result<Enclosure> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand(rational_string(x)));
    }
    assert!(n >= 1, "root order must be positive");
    if x.is_zero() {
        return Ok(Enclosure::checked(
            Interval::point(Rational::zero()),
            precision_bits,
        ));
    }

    // perfect power of a rational: exact answer
    let pn = x.numer().nth_root(n);
    let pd = x.denom().nth_root(n);
    if &pn.pow(n) == x.numer() && &pd.pow(n) == x.denom() {
        let root = Rational::new(pn, pd);
        return Ok(Enclosure::checked(Interval::point(root), precision_bits));
    }

    // floor((a/b · 2^(n·p))^(1/n)) brackets the root between consecutive
    // dyadic rationals R/2^p and (R+1)/2^p.
    let p = precision_bits;
    let scaled = (x.numer() * pow2(n.checked_mul(p).expect("precision too large"))) / x.denom();
    let r = scaled.nth_root(n);
    let denom = pow2(p);
    let lo = Rational::new(r.clone(), denom.clone());
    let hi = Rational::new(r + BigInt::one(), denom);
    Ok(Enclosure::checked(Interval::make(lo, hi), precision_bits))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantName {
    E,
    Pi,
    Sqrt2,
}

impl std::str::FromStr for ConstantName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e" => Ok(ConstantName::E),
            "pi" | "π" => Ok(ConstantName::Pi),
            "sqrt2" | "sqrt(2)" => Ok(ConstantName::Sqrt2),
            other => Err(Error::UnknownConstant(other.to_string())),
        }
    }
}

/// Certified enclosure of a named constant at the requested width.
pub fn constant_enclosure(name: ConstantName, precision_bits: u32) -> Result<Enclosure> {
    match name {
        ConstantName::Sqrt2 => root_enclosure(&Rational::from_integer(2.into()), 2, precision_bits),
        ConstantName::E => Ok(e_enclosure(precision_bits)),
        ConstantName::Pi => Ok(pi_enclosure(precision_bits)),
    }
}

/// e via partial sums of Σ 1/k!; tail after K terms is below 2/(K+1)!.
fn e_enclosure(precision_bits: u32) -> Enclosure {
    let target = Rational::new(BigInt::one(), pow2(precision_bits));
    let mut sum = Rational::zero();
    let mut term = Rational::one(); // 1/k!
    let mut k: u64 = 0;
    loop {
        sum += &term;
        k += 1;
        term /= Rational::from_integer(BigInt::from(k));
        // remaining tail = Σ_{j>=k} 1/j! < 2·(1/k!) = 2·term
        let tail = &term * Rational::from_integer(2.into());
        if tail <= target {
            let hi = &sum + tail;
            return Enclosure::checked(Interval::make(sum, hi), precision_bits);
        }
    }
}

/// Alternating arctan series for 1/m with the first omitted term as a
/// certified two-sided error bound.
fn arctan_recip(m: u64, term_bound: &Rational) -> Interval {
    let m2 = Rational::from_integer(BigInt::from(m * m));
    let mut power = Rational::new(BigInt::one(), BigInt::from(m)); // 1/m^(2j+1)
    let mut sum = Rational::zero();
    let mut j: u64 = 0;
    loop {
        let term = &power / Rational::from_integer(BigInt::from(2 * j + 1));
        if &term <= term_bound {
            // |arctan(1/m) − sum| ≤ term (alternating, decreasing)
            return Interval::make(&sum - &term, &sum + &term);
        }
        if j.is_multiple_of(2) {
            sum += &term;
        } else {
            sum -= &term;
        }
        power /= &m2;
        j += 1;
    }
}

/// π = 16·arctan(1/5) − 4·arctan(1/239) with certified tails.
fn pi_enclosure(precision_bits: u32) -> Enclosure {
    // total width ≤ 32·t5 + 8·t239 ≤ 2^(−p) with both bounds at 2^(−p−6)
    let bound = Rational::new(BigInt::one(), pow2(precision_bits + 6));
    let a5 = arctan_recip(5, &bound);
    let a239 = arctan_recip(239, &bound);
    let sixteen = Rational::from_integer(16.into());
    let four = Rational::from_integer(4.into());
    let lo = a5.lo() * &sixteen - a239.hi() * &four;
    let hi = a5.hi() * &sixteen - a239.lo() * &four;
    Enclosure::checked(Interval::make(lo, hi), precision_bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, rat, rat_int, rat_pow};

    #[test]
    fn perfect_powers_are_points() {
        let e = root_enclosure(&rat_int(4), 2, 64).unwrap();
        assert_eq!(e.value(), &Interval::point(rat_int(2)));
        let e = root_enclosure(&rat_int(8), 3, 8).unwrap();
        assert_eq!(e.value(), &Interval::point(rat_int(2)));
        let e = root_enclosure(&rat(4, 9), 2, 8).unwrap();
        assert_eq!(e.value(), &Interval::point(rat(2, 3)));
    }

    #[test]
    fn sqrt2_at_64_bits() {
        let e = root_enclosure(&rat_int(2), 2, 64).unwrap();
        let v = e.value();
        // lo^2 ≤ 2 ≤ hi^2 and width within bound
        assert!(rat_pow(v.lo(), 2).unwrap() <= rat_int(2));
        assert!(rat_pow(v.hi(), 2).unwrap() >= rat_int(2));
        assert!(v.length() <= rat(1, 1) / rat_int(2).pow(64) * rat_int(2));
        // sanity against the familiar decimal expansion
        assert!(v.lo() >= &parse_rational("1.41421356237309").unwrap());
        assert!(v.hi() <= &parse_rational("1.41421356237310").unwrap());
    }

    #[test]
    fn negative_radicand_rejected() {
        assert!(root_enclosure(&rat_int(-1), 2, 16).is_err());
    }

    #[test]
    fn e_at_32_bits() {
        let e = constant_enclosure(ConstantName::E, 32).unwrap();
        let v = e.value();
        assert!(v.lo() >= &parse_rational("2.718281").unwrap());
        assert!(v.hi() <= &parse_rational("2.718282").unwrap());
    }

    #[test]
    fn pi_at_32_bits() {
        let p = constant_enclosure(ConstantName::Pi, 32).unwrap();
        let v = p.value();
        assert!(v.lo() >= &parse_rational("3.141592").unwrap());
        assert!(v.hi() <= &parse_rational("3.141593").unwrap());
    }

    #[test]
    fn constants_match_long_expansions_at_128_bits() {
        let e = constant_enclosure(ConstantName::E, 128).unwrap();
        let e_lo = parse_rational("2.718281828459045235360287471352662497").unwrap();
        let e_hi = parse_rational("2.718281828459045235360287471352662498").unwrap();
        assert!(e.value().lo() >= &e_lo && e.value().hi() <= &e_hi);

        let p = constant_enclosure(ConstantName::Pi, 128).unwrap();
        let p_lo = parse_rational("3.141592653589793238462643383279502884").unwrap();
        let p_hi = parse_rational("3.141592653589793238462643383279502885").unwrap();
        assert!(p.value().lo() >= &p_lo && p.value().hi() <= &p_hi);
    }

    #[test]
    fn sqrt2_delegation() {
        let a = constant_enclosure(ConstantName::Sqrt2, 64).unwrap();
        let b = root_enclosure(&rat_int(2), 2, 64).unwrap();
        assert_eq!(a, b);
    }
}

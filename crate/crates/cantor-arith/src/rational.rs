//! Exact rational scalars.
//!
//! Every coordinate in this crate is a `Rational` (arbitrary-precision,
//! always reduced, positive denominator). There is no floating point
//! anywhere in the computation path; decimal output is rendering only.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand constructor used pervasively in tests and fixtures.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer power with negative exponents allowed (errors on 0^negative).
pub fn rat_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp == 0 {
        return Ok(Rational::one());
    }
    if base.is_zero() && exp < 0 {
        return Err(Error::DivisorContainsZero);
    }
    let e = u32::try_from(exp.unsigned_abs())
        .map_err(|_| Error::Usage(format!("exponent {exp} too large")))?;
    let numer = base.numer().pow(e);
    let denom = base.denom().pow(e);
    Ok(if exp > 0 {
        Rational::new(numer, denom)
    } else {
        Rational::new(denom, numer)
    })
}

/// Parses an exact rational from `p/q`, integer, or decimal notation.
/// `"0.3"` is read bit-exactly as 3/10.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::SpecFile("empty rational literal".into()));
    }
    let bad = |msg: &str| Error::SpecFile(format!("bad rational literal `{s}`: {msg}"));

    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n.trim().parse().map_err(|_| bad("invalid numerator"))?;
        let denom: BigInt = d.trim().parse().map_err(|_| bad("invalid denominator"))?;
        if denom.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(numer, denom));
    }

    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad("no digits"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad("non-digit character"));
    }
    let int_val: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| bad("invalid integer part"))?
    };
    let mut value = Rational::from_integer(int_val);
    if !frac_part.is_empty() {
        let frac_val: BigInt = frac_part
            .parse()
            .map_err(|_| bad("invalid fraction part"))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        value += Rational::new(frac_val, scale);
    }
    if sign < 0 {
        value = -value;
    }
    Ok(value)
}

/// Exact string form, `p/q` or `p` for integers. Inverse of `parse_rational`.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

/// Non-normative decimal rendering with `sig` significant digits,
/// round-to-nearest (ties away from zero). Display only.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let abs = r.abs();
    // Find exponent e with 10^e <= abs < 10^(e+1).
    let ten = Rational::from_integer(BigInt::from(10));
    let mut e: i64 = 0;
    let mut probe = Rational::one();
    if abs >= Rational::one() {
        while &probe * &ten <= abs {
            probe *= &ten;
            e += 1;
        }
    } else {
        while probe > abs {
            probe /= &ten;
            e -= 1;
        }
    }
    // mantissa digits: round(abs * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let scaled = if shift >= 0 {
        abs * Rational::from_integer(BigInt::from(10).pow(shift as u32))
    } else {
        abs / Rational::from_integer(BigInt::from(10).pow((-shift) as u32))
    };
    let twice = &scaled * Rational::from_integer(BigInt::from(2));
    let floor2 = twice.floor().to_integer();
    let mut digits = (&floor2 + BigInt::one()) / BigInt::from(2); // round half away from zero
    let mut digit_str = digits.to_string();
    if digit_str.len() > sig {
        // rounding carried over (e.g. 999.9 -> 1000)
        e += 1;
        digits /= BigInt::from(10);
        digit_str = digits.to_string();
    }
    while digit_str.len() < sig {
        digit_str.push('0');
    }
    let mantissa = digit_str.trim_end_matches('0');
    let mantissa = if mantissa.is_empty() { "0" } else { mantissa };
    let sign = if neg { "-" } else { "" };

    if e >= 0 && (e as usize) < sig.max(1) + 4 {
        let int_len = e as usize + 1;
        if mantissa.len() <= int_len {
            let mut out = String::from(mantissa);
            out.push_str(&"0".repeat(int_len - mantissa.len()));
            format!("{sign}{out}")
        } else {
            format!("{sign}{}.{}", &mantissa[..int_len], &mantissa[int_len..])
        }
    } else if (-6..0).contains(&e) {
        let zeros = (-e - 1) as usize;
        format!("{sign}0.{}{}", "0".repeat(zeros), mantissa)
    } else {
        let head = &mantissa[..1];
        let tail = &mantissa[1..];
        if tail.is_empty() {
            format!("{sign}{head}e{e}")
        } else {
            format!("{sign}{head}.{tail}e{e}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_decimals() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-2/5").unwrap(), rat(-2, 5));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("0.3").unwrap(), rat(3, 10));
        assert_eq!(parse_rational("1.25").unwrap(), rat(5, 4));
        assert_eq!(parse_rational("-0.6").unwrap(), rat(-3, 5));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&rat(2, 3), 2).unwrap(), rat(4, 9));
        assert_eq!(rat_pow(&rat(2, 3), -1).unwrap(), rat(3, 2));
        assert_eq!(rat_pow(&rat(5, 7), 0).unwrap(), rat_int(1));
        assert!(rat_pow(&rat_int(0), -2).is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 2), 20), "0.5");
        assert_eq!(decimal_string(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_string(&rat(-8, 9), 6), "-0.888889");
        assert_eq!(decimal_string(&rat_int(42), 4), "42");
        assert_eq!(decimal_string(&rat(2, 3), 3), "0.667");
    }
}

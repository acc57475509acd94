//! C¹ expressions ℝᵈ → ℝ over the grammar
//!
//!   expr   := term (('+'|'-') term)*
//!   term   := factor (('*'|'/') factor)*
//!   factor := ('-')? atom ('^' ('-')? integer)?
//!   atom   := decimal | 'x'index | '(' expr ')'
//!
//! with exact rational constants ("0.3" = 3/10), symbolic differentiation,
//! and exact point / interval evaluation. Variable indices are 1-based in
//! the surface syntax (x1 … xd) and 0-based in the API.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{parse_rational, rat_pow, rational_string, Rational};
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Const(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    pub fn var(i: usize) -> Expr {
        Expr::Var(i)
    }

    pub fn constant(r: Rational) -> Expr {
        Expr::Const(r)
    }

    /// Sum of the first `d` variables.
    pub fn sum_of_vars(d: usize) -> Expr {
        assert!(d >= 1);
        let mut e = Expr::Var(0);
        for i in 1..d {
            e = Expr::Add(Box::new(e), Box::new(Expr::Var(i)));
        }
        e
    }

    /// −Σ 1/x_i over the first `d` variables.
    pub fn neg_sum_of_reciprocals(d: usize) -> Expr {
        assert!(d >= 1);
        let recip = |i| {
            Expr::Div(
                Box::new(Expr::constant(Rational::one())),
                Box::new(Expr::Var(i)),
            )
        };
        let mut e = recip(0);
        for i in 1..d {
            e = Expr::Add(Box::new(e), Box::new(recip(i)));
        }
        Expr::Neg(Box::new(e))
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Var(i) => Some(*i),
            Expr::Const(_) => None,
            Expr::Neg(a) | Expr::Pow(a, _) => a.max_var(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                match (a.max_var(), b.max_var()) {
                    (Some(x), Some(y)) => Some(x.max(y)),
                    (x, y) => x.or(y),
                }
            }
        }
    }

    /// Whether variable `i` occurs in the expression.
    pub fn contains_var(&self, i: usize) -> bool {
        match self {
            Expr::Var(j) => *j == i,
            Expr::Const(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.contains_var(i),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.contains_var(i) || b.contains_var(i)
            }
        }
    }

    /// Substitutes `replacement` for variable `i`.
    pub fn substitute(&self, i: usize, replacement: &Expr) -> Expr {
        match self {
            Expr::Var(j) if *j == i => replacement.clone(),
            Expr::Var(_) | Expr::Const(_) => self.clone(),
            Expr::Neg(a) => Expr::Neg(Box::new(a.substitute(i, replacement))),
            Expr::Add(a, b) => Expr::Add(
                Box::new(a.substitute(i, replacement)),
                Box::new(b.substitute(i, replacement)),
            ),
            Expr::Sub(a, b) => Expr::Sub(
                Box::new(a.substitute(i, replacement)),
                Box::new(b.substitute(i, replacement)),
            ),
            Expr::Mul(a, b) => Expr::Mul(
                Box::new(a.substitute(i, replacement)),
                Box::new(b.substitute(i, replacement)),
            ),
            Expr::Div(a, b) => Expr::Div(
                Box::new(a.substitute(i, replacement)),
                Box::new(b.substitute(i, replacement)),
            ),
            Expr::Pow(a, n) => Expr::Pow(Box::new(a.substitute(i, replacement)), *n),
        }
    }

    /// Exact symbolic partial derivative with respect to variable `i`
    /// (0-based), lightly simplified.
    pub fn differentiate(&self, i: usize) -> Expr {
        let d = match self {
            Expr::Var(j) => {
                if *j == i {
                    Expr::Const(Rational::one())
                } else {
                    Expr::Const(Rational::zero())
                }
            }
            Expr::Const(_) => Expr::Const(Rational::zero()),
            Expr::Neg(a) => Expr::Neg(Box::new(a.differentiate(i))),
            Expr::Add(a, b) => {
                Expr::Add(Box::new(a.differentiate(i)), Box::new(b.differentiate(i)))
            }
            Expr::Sub(a, b) => {
                Expr::Sub(Box::new(a.differentiate(i)), Box::new(b.differentiate(i)))
            }
            Expr::Mul(a, b) => Expr::Add(
                Box::new(Expr::Mul(Box::new(a.differentiate(i)), b.clone())),
                Box::new(Expr::Mul(a.clone(), Box::new(b.differentiate(i)))),
            ),
            // structure-aware quotient rule: the one-sided forms keep each
            // variable occurring once, so interval enclosures stay tight
            Expr::Div(a, b) => {
                if !b.contains_var(i) {
                    Expr::Div(Box::new(a.differentiate(i)), b.clone())
                } else if !a.contains_var(i) {
                    Expr::Neg(Box::new(Expr::Div(
                        Box::new(Expr::Mul(a.clone(), Box::new(b.differentiate(i)))),
                        Box::new(Expr::Pow(b.clone(), 2)),
                    )))
                } else {
                    Expr::Div(
                        Box::new(Expr::Sub(
                            Box::new(Expr::Mul(Box::new(a.differentiate(i)), b.clone())),
                            Box::new(Expr::Mul(a.clone(), Box::new(b.differentiate(i)))),
                        )),
                        Box::new(Expr::Pow(b.clone(), 2)),
                    )
                }
            }
            Expr::Pow(a, n) => {
                if *n == 0 {
                    Expr::Const(Rational::zero())
                } else {
                    Expr::Mul(
                        Box::new(Expr::Mul(
                            Box::new(Expr::Const(Rational::from_integer((*n).into()))),
                            Box::new(Expr::Pow(a.clone(), n - 1)),
                        )),
                        Box::new(a.differentiate(i)),
                    )
                }
            }
        };
        d.simplified()
    }

    /// Constant folding and unit/zero elimination.
    pub fn simplified(&self) -> Expr {
        match self {
            Expr::Var(_) | Expr::Const(_) => self.clone(),
            Expr::Neg(a) => match a.simplified() {
                Expr::Const(c) => Expr::Const(-c),
                Expr::Neg(inner) => *inner,
                s => Expr::Neg(Box::new(s)),
            },
            Expr::Add(a, b) => match (a.simplified(), b.simplified()) {
                (Expr::Const(x), Expr::Const(y)) => Expr::Const(x + y),
                (Expr::Const(x), s) if x.is_zero() => s,
                (s, Expr::Const(y)) if y.is_zero() => s,
                (s, t) => Expr::Add(Box::new(s), Box::new(t)),
            },
            Expr::Sub(a, b) => match (a.simplified(), b.simplified()) {
                (Expr::Const(x), Expr::Const(y)) => Expr::Const(x - y),
                (s, Expr::Const(y)) if y.is_zero() => s,
                (Expr::Const(x), t) if x.is_zero() => Expr::Neg(Box::new(t)).simplified(),
                (s, t) => Expr::Sub(Box::new(s), Box::new(t)),
            },
            Expr::Mul(a, b) => match (a.simplified(), b.simplified()) {
                (Expr::Const(x), Expr::Const(y)) => Expr::Const(x * y),
                (Expr::Const(x), _) | (_, Expr::Const(x)) if x.is_zero() => {
                    Expr::Const(Rational::zero())
                }
                (Expr::Const(x), s) if x.is_one() => s,
                (s, Expr::Const(y)) if y.is_one() => s,
                (s, t) => Expr::Mul(Box::new(s), Box::new(t)),
            },
            Expr::Div(a, b) => match (a.simplified(), b.simplified()) {
                (s, Expr::Const(y)) if !y.is_zero() => match s {
                    Expr::Const(x) => Expr::Const(x / y),
                    s if y.is_one() => s,
                    s => Expr::Div(Box::new(s), Box::new(Expr::Const(y))),
                },
                (Expr::Const(x), t) if x.is_zero() => {
                    // 0/t: keep the division so domain violations still surface
                    Expr::Div(Box::new(Expr::Const(x)), Box::new(t))
                }
                (s, t) => Expr::Div(Box::new(s), Box::new(t)),
            },
            Expr::Pow(a, n) => match (a.simplified(), *n) {
                (s, 1) => s,
                (_, 0) => Expr::Const(Rational::one()),
                (Expr::Const(x), n) if !(x.is_zero() && n < 0) => {
                    Expr::Const(rat_pow(&x, n).expect("checked nonzero base"))
                }
                (s, n) => Expr::Pow(Box::new(s), n),
            },
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval_point(&self, point: &[Rational]) -> Result<Rational> {
        match self {
            Expr::Var(i) => point.get(*i).cloned().ok_or(Error::VarOutOfRange {
                index: i + 1,
                dims: point.len(),
            }),
            Expr::Const(c) => Ok(c.clone()),
            Expr::Neg(a) => Ok(-a.eval_point(point)?),
            Expr::Add(a, b) => Ok(a.eval_point(point)? + b.eval_point(point)?),
            Expr::Sub(a, b) => Ok(a.eval_point(point)? - b.eval_point(point)?),
            Expr::Mul(a, b) => Ok(a.eval_point(point)? * b.eval_point(point)?),
            Expr::Div(a, b) => {
                let denom = b.eval_point(point)?;
                if denom.is_zero() {
                    return Err(Error::DivisorContainsZero);
                }
                Ok(a.eval_point(point)? / denom)
            }
            Expr::Pow(a, n) => rat_pow(&a.eval_point(point)?, *n),
        }
    }

    /// Interval extension: the result contains {e(x) : x ∈ box}, with
    /// equality when every variable occurs at most once.
    pub fn eval_interval(&self, box_: &[Interval]) -> Result<Interval> {
        match self {
            Expr::Var(i) => box_.get(*i).cloned().ok_or(Error::VarOutOfRange {
                index: i + 1,
                dims: box_.len(),
            }),
            Expr::Const(c) => Ok(Interval::point(c.clone())),
            Expr::Neg(a) => Ok(a.eval_interval(box_)?.neg()),
            Expr::Add(a, b) => Ok(a.eval_interval(box_)?.add(&b.eval_interval(box_)?)),
            Expr::Sub(a, b) => Ok(a.eval_interval(box_)?.sub(&b.eval_interval(box_)?)),
            Expr::Mul(a, b) => Ok(a.eval_interval(box_)?.mul(&b.eval_interval(box_)?)),
            Expr::Div(a, b) => a.eval_interval(box_)?.div(&b.eval_interval(box_)?),
            Expr::Pow(a, n) => a.eval_interval(box_)?.pow(*n),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Var(_) | Expr::Const(_) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        let prec = self.precedence();
        let paren = prec < parent;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Var(i) => write!(f, "x{}", i + 1)?,
            Expr::Const(c) => {
                // the "/" inside a fraction literal is an operator to the
                // parser, so fractions need parens in tight positions
                let needs_paren =
                    (c.is_negative() && parent > 1) || (!c.is_integer() && parent > 2);
                if needs_paren {
                    write!(f, "({})", rational_string(c))?;
                } else {
                    write!(f, "{}", rational_string(c))?;
                }
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.fmt_prec(f, 3)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " * ")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " / ")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Pow(a, n) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^{n}")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Parses an expression over `dims` variables x1 … x`dims`.
pub fn parse_expr(text: &str, dims: usize) -> Result<Expr> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        dims,
    };
    let e = p.parse_expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    dims: usize,
}

impl Parser {
    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(0, |(b, c)| b + c.len_utf8()),
            |(b, _)| *b,
        )
    }

    fn error(&self, msg: &str) -> Error {
        Error::ExprParse {
            pos: self.byte_pos(),
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat_minus(&mut self) -> bool {
        match self.peek() {
            Some('-') | Some('−') => {
                self.pos += 1;
                true
            }
            _ => false,
        }
    }

    fn parse_expr(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let rhs = self.parse_term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some('-') | Some('−') => {
                    self.bump();
                    let rhs = self.parse_term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let rhs = self.parse_factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some('/') => {
                    self.bump();
                    let rhs = self.parse_factor()?;
                    // constant quotients fold to rational literals, so
                    // printed constants like "2/3" reparse to themselves
                    lhs = match (lhs, rhs) {
                        (Expr::Const(a), Expr::Const(b)) if !b.is_zero() => Expr::Const(a / b),
                        (l, r) => Expr::Div(Box::new(l), Box::new(r)),
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr> {
        self.skip_ws();
        let negated = self.eat_minus();
        let mut atom = self.parse_atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let exp_neg = self.eat_minus();
            let digits = self.take_digits()?;
            let mut exp: i64 = digits
                .parse()
                .map_err(|_| self.error("exponent out of range"))?;
            if exp_neg {
                exp = -exp;
            }
            atom = Expr::Pow(Box::new(atom), exp);
        }
        Ok(match (negated, atom) {
            (false, atom) => atom,
            (true, Expr::Const(c)) => Expr::Const(-c),
            (true, atom) => Expr::Neg(Box::new(atom)),
        })
    }

    fn take_digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() {
            return Err(self.error("expected digits"));
        }
        Ok(s)
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.parse_expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some('x') => {
                self.bump();
                let digits = self.take_digits()?;
                let index: usize = digits
                    .parse()
                    .map_err(|_| self.error("variable index out of range"))?;
                if index < 1 || index > self.dims {
                    return Err(Error::VarOutOfRange {
                        index,
                        dims: self.dims,
                    });
                }
                Ok(Expr::Var(index - 1))
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let mut s = String::new();
                let mut seen_dot = false;
                while let Some(c) = self.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        self.pos += 1;
                    } else if c == '.' && !seen_dot {
                        seen_dot = true;
                        s.push(c);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let value = parse_rational(&s).map_err(|_| self.error("bad number literal"))?;
                Ok(Expr::Const(value))
            }
            Some(c) => Err(self.error(&format!("unexpected character `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::make(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn parses_basic_forms() {
        assert_eq!(
            parse_expr("x1 + x2", 2).unwrap(),
            Expr::Add(Box::new(Expr::Var(0)), Box::new(Expr::Var(1)))
        );
        assert_eq!(
            parse_expr("x1 * x2", 2).unwrap(),
            Expr::Mul(Box::new(Expr::Var(0)), Box::new(Expr::Var(1)))
        );
        let erdos = parse_expr("-1/x1 - 1/x2 - 1/x3 - 1/x4", 4).unwrap();
        let p = [rat(2, 3), rat(2, 3), rat(2, 3), rat(2, 3)];
        assert_eq!(erdos.eval_point(&p).unwrap(), rat_int(-6));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_expr("x1 + ", 2) {
            Err(Error::ExprParse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_expr("x3", 2),
            Err(Error::VarOutOfRange { index: 3, dims: 2 })
        ));
        assert!(parse_expr("x1 ) x2", 2).is_err());
        assert!(parse_expr("x0", 2).is_err());
    }

    #[test]
    fn decimals_parse_exactly() {
        let e = parse_expr("0.3 * x1", 1).unwrap();
        assert_eq!(e.eval_point(&[rat_int(1)]).unwrap(), rat(3, 10));
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "x1 + x2",
            "-1/x1 - 1/x2 - 1/x3 - 1/x4",
            "x1 * x2",
            "(x1 + x2) * (x1 - x2)",
            "x1^3 - 2*x2^-2",
            "x1 / (x2 + 3/2)",
        ] {
            let e = parse_expr(text, 4).unwrap();
            let printed = e.to_string();
            let reparsed = parse_expr(&printed, 4).unwrap();
            assert_eq!(reparsed, e, "round trip failed for `{text}` → `{printed}`");
        }
    }

    #[test]
    fn derivative_examples() {
        let sum = parse_expr("x1 + x2", 2).unwrap();
        assert_eq!(sum.differentiate(0), Expr::Const(rat_int(1)));

        // d/dx1 (−1/x1) = 1/x1²: check semantically at sample points
        let e = parse_expr("-1/x1", 1).unwrap();
        let d = e.differentiate(0);
        for x in [rat(1, 2), rat(2, 3), rat_int(3)] {
            let expected = rat_int(1) / (&x * &x);
            assert_eq!(d.eval_point(std::slice::from_ref(&x)).unwrap(), expected);
        }

        let prod = parse_expr("x1 * x2", 2).unwrap();
        assert_eq!(prod.differentiate(1), Expr::Var(0));
    }

    #[test]
    fn interval_eval_examples() {
        let sum = parse_expr("x1 + x2", 2).unwrap();
        assert_eq!(
            sum.eval_interval(&[iv((0, 1), (1, 1)), iv((0, 1), (1, 1))])
                .unwrap(),
            iv((0, 1), (2, 1))
        );
        let recip = parse_expr("1/x1", 1).unwrap();
        assert_eq!(
            recip.eval_interval(&[iv((2, 3), (1, 1))]).unwrap(),
            iv((1, 1), (3, 2))
        );
        let prod = parse_expr("x1 * x2", 2).unwrap();
        assert_eq!(
            prod.eval_interval(&[iv((2, 3), (1, 1)), iv((2, 3), (1, 1))])
                .unwrap(),
            iv((4, 9), (1, 1))
        );
    }

    #[test]
    fn division_domain_violation() {
        let recip = parse_expr("1/x1", 1).unwrap();
        assert!(matches!(
            recip.eval_interval(&[iv((-1, 1), (1, 1))]),
            Err(Error::DivisorContainsZero)
        ));
        assert!(recip.eval_point(&[rat_int(0)]).is_err());
    }

    #[test]
    fn substitution_reflects_variables() {
        // x1 ↦ 5/3 − x1 in x1/x2
        let e = parse_expr("x1 / x2", 2).unwrap();
        let refl = Expr::Sub(Box::new(Expr::constant(rat(5, 3))), Box::new(Expr::Var(0)));
        let g = e.substitute(0, &refl);
        assert_eq!(
            g.eval_point(&[rat(2, 3), rat_int(1)]).unwrap(),
            rat(1, 1) // (5/3 − 2/3)/1
        );
    }
}

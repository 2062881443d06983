//! Canonical text form and a small expression parser.
//!
//! Grammar: decimal integers, the parameter `z`, variables `x1..xN`,
//! `^` for powers, explicit `*`, `/`, parentheses. Printed terms appear in
//! descending order (graded lexicographic for the `x` variables).

use std::fmt::Write;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::intpoly::IntPoly;
use crate::mpoly::{Monomial, MPolyX};
use crate::ratzeta::RatZeta;
use crate::{ExactError, Rat};

fn push_term(out: &mut String, first: bool, negative: bool, body: &str) {
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(body);
}

fn power(var: &str, e: usize) -> String {
    match e {
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

pub fn format_int_poly(p: &IntPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let a = c.abs();
        let body = if i == 0 {
            a.to_string()
        } else if a.is_one() {
            power(var, i)
        } else {
            format!("{a}*{}", power(var, i))
        };
        push_term(&mut out, first, c.is_negative(), &body);
        first = false;
    }
    out
}

pub fn format_ratzeta(f: &RatZeta) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let (n, d) = f.to_int_fraction();
    if d.is_one() {
        format_int_poly(&n, "z")
    } else {
        format!("({}) / ({})", format_int_poly(&n, "z"), format_int_poly(&d, "z"))
    }
}

fn format_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            parts.push(power(&format!("x{}", i + 1), e as usize));
        }
    }
    parts.join("*")
}

pub fn format_mpoly(p: &MPolyX) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (m, c) in p.terms().rev() {
        let mono = format_monomial(m);
        let int_coeff = c.as_rat().filter(|r| r.is_integer()).map(|r| r.numer().clone());
        let (negative, body) = match int_coeff {
            Some(k) => {
                let a = k.abs();
                let body = if mono.is_empty() {
                    a.to_string()
                } else if a.is_one() {
                    mono
                } else {
                    format!("{a}*{mono}")
                };
                (k.sign() == Sign::Minus, body)
            }
            None if mono.is_empty() => (false, format!("({})", format_ratzeta(c))),
            None => (false, format!("({})*{mono}", format_ratzeta(c))),
        };
        push_term(&mut out, first, negative, &body);
        first = false;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Int(usize, usize),
    Z,
    X(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: &str) -> ExactError {
    ExactError::Parse {
        pos,
        msg: msg.to_string(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ExactError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(start, i)));
                continue;
            }
            b'z' => Tok::Z,
            b'x' => {
                i += 1;
                let s0 = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: usize = s[s0..i]
                    .parse()
                    .map_err(|_| err(start, "expected variable index after 'x'"))?;
                if idx == 0 {
                    return Err(err(start, "variables are numbered from x1"));
                }
                out.push((start, Tok::X(idx)));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => return Err(err(i, "unexpected character")),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |t| t.0)
    }

    fn expr(&mut self) -> Result<MPolyX, ExactError> {
        let mut acc = self.term()?;
        while let Some(t @ (Tok::Plus | Tok::Minus)) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if t == Tok::Plus { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPolyX, ExactError> {
        let mut acc = self.unary()?;
        while let Some(t @ (Tok::Star | Tok::Slash)) = self.peek() {
            let at = self.offset();
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if t == Tok::Star {
                acc.mul(&rhs)
            } else {
                let c = rhs
                    .as_constant()
                    .ok_or_else(|| err(at, "division by a polynomial in x"))?;
                acc.scale(&c.inv().map_err(|_| err(at, "division by zero"))?)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPolyX, ExactError> {
        if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPolyX, ExactError> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        let negative = if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = match self.peek() {
            Some(Tok::Int(a, b)) => {
                self.pos += 1;
                self.src[a..b]
                    .parse::<u32>()
                    .map_err(|_| err(at, "exponent too large"))?
            }
            _ => return Err(err(at, "expected integer exponent")),
        };
        if negative {
            let c = base
                .as_constant()
                .ok_or_else(|| err(at, "negative power of a polynomial in x"))?;
            let r = c.pow(-(e as i64)).map_err(|_| err(at, "division by zero"))?;
            return Ok(MPolyX::constant(self.nvars, r));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MPolyX, ExactError> {
        let at = self.offset();
        let Some(t) = self.peek() else {
            return Err(err(at, "unexpected end of input"));
        };
        self.pos += 1;
        match t {
            Tok::Int(a, b) => {
                let k: BigInt = self.src[a..b].parse().unwrap();
                Ok(MPolyX::constant(self.nvars, RatZeta::from_rat(Rat::from_integer(k))))
            }
            Tok::Z => Ok(MPolyX::constant(self.nvars, RatZeta::z())),
            Tok::X(i) => Ok(MPolyX::var(self.nvars, i - 1)),
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return Err(err(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(err(at, "unexpected token")),
        }
    }
}

fn parse_with(s: &str, nvars: Option<usize>) -> Result<MPolyX, ExactError> {
    let toks = tokenize(s)?;
    let seen = toks
        .iter()
        .filter_map(|t| match t.1 {
            Tok::X(i) => Some(i),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let nvars = match nvars {
        Some(n) if n < seen => return Err(err(0, "variable index exceeds declared count")),
        Some(n) => n,
        None => seen,
    };
    let mut p = Parser {
        src: s,
        toks,
        pos: 0,
        nvars,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.offset(), "trailing input"));
    }
    Ok(e)
}

/// Parses a polynomial in `x1..xN` over `Q(z)`. With `nvars = None` the
/// variable count is the largest index that occurs.
pub fn parse_mpoly(s: &str, nvars: Option<usize>) -> Result<MPolyX, ExactError> {
    parse_with(s, nvars)
}

/// Parses a rational function of `z`.
pub fn parse_ratzeta(s: &str) -> Result<RatZeta, ExactError> {
    let p = parse_with(s, Some(0))?;
    Ok(p.as_constant().unwrap_or_else(RatZeta::zero))
}

/// Writes a list of items separated by `", "`.
pub fn join_display<T: std::fmt::Display>(items: &[T]) -> String {
    let mut s = String::new();
    for (i, it) in items.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{it}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_descending_with_signs() {
        let p = IntPoly::from_i64s(&[-4, 0, 1, -2]);
        assert_eq!(format_int_poly(&p, "z"), "-2*z^3 + z^2 - 4");
        let q = IntPoly::from_i64s(&[0, -1]);
        assert_eq!(format_int_poly(&q, "z"), "-z");
    }

    #[test]
    fn prints_fraction_with_scalar_distributed() {
        let f = RatZeta::z().pow(2).unwrap().div(&RatZeta::linear(1, 2)).unwrap().scale(&crate::frac(-1, 3));
        assert_eq!(f.to_string(), "(-z^2) / (3*z + 6)");
    }

    #[test]
    fn ratzeta_round_trip() {
        let s = "(-2*z^6 - 2*z^5 + 4*z^4 + 2*z^3) / (z^2 + 4*z + 4)";
        let f = parse_ratzeta(s).unwrap();
        assert_eq!(f.to_string(), s);
    }

    #[test]
    fn mpoly_round_trip() {
        let s = "x1^2*x2 - 3*x2^2 + ((z) / (z + 2))*x1 + (z^2 + 1)";
        let p = parse_mpoly(s, None).unwrap();
        assert_eq!(p.nvars(), 2);
        let again = parse_mpoly(&p.to_string(), Some(2)).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_ratzeta("z + (1") {
            Err(ExactError::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ratzeta("z / 0").is_err());
        assert!(parse_mpoly("1 / x1", None).is_err());
    }
}
